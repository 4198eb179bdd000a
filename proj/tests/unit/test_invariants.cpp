#include <doctest.h>

#include "helpers.hpp"
#include "knots/errors.hpp"
#include "knots/invariants.hpp"

using namespace knots;
using namespace knots::testing;

namespace {

LaurentPoly invert_A(const LaurentPoly& p) {
  LaurentPoly q;
  for (const auto& [e, c] : p.terms()) q += LaurentPoly::monomial(c, -e);
  return q;
}

}  // namespace

TEST_CASE("loop value and its powers") {
  CHECK(loop_delta().str() == "-A^2 - A^-2");
  CHECK(delta_power(0) == LaurentPoly::constant(1));
  CHECK(delta_power(2) == loop_delta() * loop_delta());
}

TEST_CASE("bracket of small pinned diagrams") {
  CHECK(bracket(positive_kink()).str() == "-A^3");
  CHECK(bracket(negative_kink()).str() == "-A^-3");
  CHECK(bracket(closure(parse_braid("s1^2 @2"))).str() == "-A^4 - A^-4");
  Diagram circle;
  circle.free_loops = 1;
  CHECK(bracket(circle) == LaurentPoly::constant(1));
  Diagram empty;
  CHECK(bracket(empty) == LaurentPoly::constant(1));
}

TEST_CASE("bracket matches the brute-force state sum") {
  for (const Diagram& d : sample_pool()) CHECK(bracket(d, 64) == bracket_oracle(d));
  Diagram d3 = closure(dn_word(3));
  CHECK(bracket(d3, 64) == bracket_oracle(d3));
}

TEST_CASE("bracket is multiplicative over unions and sums") {
  Diagram tre = closure(parse_braid("s1^3 @2"));
  Diagram kink = positive_kink();
  CHECK(bracket(disjoint_union(tre, kink)) ==
        bracket(tre) * bracket(kink) * loop_delta());
  ArcId ta = arc_table(tre).begin()->first;
  CHECK(bracket(connected_sum(tre, ta, kink, 1)) == bracket(tre) * bracket(kink));
}

TEST_CASE("fingerprint of unknot diagrams is 1") {
  CHECK(fingerprint(positive_kink()) == LaurentPoly::constant(1));
  CHECK(fingerprint(negative_kink()) == LaurentPoly::constant(1));
  CHECK(fingerprint(closure(parse_braid("s1 @2"))) == LaurentPoly::constant(1));
  CHECK(fingerprint(closure(parse_braid("s1^-1 @2"))) == LaurentPoly::constant(1));
}

TEST_CASE("fingerprint pins for chiral knots and links") {
  CHECK(fingerprint(closure(parse_braid("s1^-3 @2"))).str() ==
        "A^-4 + A^-12 - A^-16");
  Diagram tre = closure(parse_braid("s1^3 @2"));
  CHECK(fingerprint(tre) == invert_A(fingerprint(closure(parse_braid("s1^-3 @2")))));
  CHECK(fingerprint(mirror(tre)) == invert_A(fingerprint(tre)));
  CHECK(fingerprint(closure(parse_braid("s1^2 @2"))).str() == "-A^10 - A^2");
  CHECK(!is_unlink_fingerprint(fingerprint(closure(parse_braid("s1^2 @2"))), 2));
}

TEST_CASE("stack diagrams have unlink fingerprints") {
  for (int n = 1; n <= 5; ++n) {
    Diagram d = closure(dn_word(n));
    CHECK(is_unlink_fingerprint(fingerprint(d, 64), 2));
  }
  Diagram three_circles;
  three_circles.free_loops = 3;
  CHECK(is_unlink_fingerprint(fingerprint(three_circles), 3));
  CHECK(!is_unlink_fingerprint(LaurentPoly::constant(1), 0));
}

TEST_CASE("bracket respects the crossing cap") {
  CHECK_THROWS_AS(bracket(closure(dn_word(2)), 4), CapError);
  CHECK_THROWS_AS(fingerprint(closure(dn_word(9))), CapError);  // default cap 24
}

TEST_CASE("linking numbers") {
  LinkingInfo hopf = linking(closure(parse_braid("s1^2 @2")));
  CHECK(hopf.comps.count == 2);
  CHECK(hopf.lk[0][1] == -1);
  CHECK(hopf.lk[1][0] == -1);
  CHECK(hopf.total() == -1);
  CHECK(hopf.total_abs() == 1);
  CHECK(linking(closure(parse_braid("s1^-2 @2"))).total() == 1);

  LinkingInfo tre = linking(closure(parse_braid("s1^3 @2")));
  CHECK(tre.comps.count == 1);
  CHECK(tre.total() == 0);

  for (int n : {2, 3, 4}) {
    LinkingInfo dn = linking(closure(dn_word(n)));
    CHECK(dn.comps.count == 2);
    CHECK(dn.total_abs() == 0);
  }
}

TEST_CASE("linking rejects inconsistent crossing data") {
  Diagram d;
  Crossing c;
  c.arc = {1, 2, 1, 2};
  c.over_in = 3;
  d.crossings.emplace(0, c);
  d.refresh_watermarks();
  CHECK_THROWS_AS(linking(d), DiagramError);
}
