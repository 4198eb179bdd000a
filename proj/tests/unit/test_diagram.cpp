#include <doctest.h>

#include <cstdlib>
#include <set>

#include "helpers.hpp"
#include "knots/diagram.hpp"
#include "knots/errors.hpp"

using namespace knots;
using namespace knots::testing;

TEST_CASE("kink structure") {
  Diagram d = positive_kink();
  CHECK(validate(d).empty());
  CHECK(writhe(d) == 1);
  CHECK(components(d).count == 1);
  CHECK(faces(d).size() == 3);  // V=1 so F=3 on the sphere

  Diagram n = negative_kink();
  CHECK(validate(n).empty());
  CHECK(writhe(n) == -1);
  CHECK(components(n).count == 1);
}

TEST_CASE("arc table roles") {
  Diagram d = positive_kink();
  auto at = arc_table(d);
  REQUIRE(at.size() == 2);
  CHECK(at.at(1).tail == PortRef{0, 1});
  CHECK(at.at(1).head == PortRef{0, 0});
  CHECK(at.at(2).tail == PortRef{0, 2});
  CHECK(at.at(2).head == PortRef{0, 3});
}

TEST_CASE("validate catches broken incidence") {
  Diagram d = positive_kink();
  d.at(0).arc[1] = 7;  // arc 7 appears once, arc 1 appears once
  CHECK(!validate(d).empty());
  CHECK_THROWS_AS(arc_table(d), DiagramError);

  Diagram both_in = positive_kink();
  both_in.at(0).arc = {1, 2, 2, 1};  // arc 1 occupies two in-ports
  CHECK(!validate(both_in).empty());

  Diagram bad_over = positive_kink();
  bad_over.at(0).over_in = 2;
  CHECK(!validate(bad_over).empty());
}

TEST_CASE("validate catches nonplanar wiring") {
  // one crossing with the two strands crossing "virtually": every label
  // matches up but the dart scan yields one face instead of three
  Diagram d;
  Crossing c;
  c.over_in = 3;
  c.arc = {1, 2, 1, 2};
  d.crossings.emplace(0, c);
  d.refresh_watermarks();
  CHECK(!validate(d).empty());
}

TEST_CASE("face walk on the 2-crossing unlink") {
  Diagram d = closure(parse_braid("s1^-1 s1 @2"));
  CHECK(validate(d).empty());
  auto fs = faces(d);
  REQUIRE(fs.size() == 4);  // V=2: all four faces are bigons
  for (const auto& f : fs) CHECK(f.degree() == 2);
  CHECK(components(d).count == 2);
  CHECK(writhe(d) == 0);
}

TEST_CASE("smooth changes component count by one") {
  for (const Diagram& d : sample_pool()) {
    int before = components(d).count;
    for (const auto& [id, c] : d.crossings) {
      Diagram s = smooth(d, id);
      CHECK(validate(s).empty());
      int after = components(s).count;
      CHECK(std::abs(after - before) == 1);
    }
  }
}

TEST_CASE("crossing change flips exactly one sign") {
  for (const Diagram& d : sample_pool()) {
    for (const auto& [id, c] : d.crossings) {
      Diagram t = crossing_change(d, id);
      CHECK(validate(t).empty());
      CHECK(crossing_sign(t, id) == -crossing_sign(d, id));
      CHECK(writhe(t) == writhe(d) - 2 * crossing_sign(d, id));
      CHECK(components(t).count == components(d).count);
      // involution
      CHECK(crossing_change(t, id) == d);
    }
  }
}

TEST_CASE("mirror negates writhe") {
  for (const Diagram& d : sample_pool()) {
    Diagram m = mirror(d);
    CHECK(validate(m).empty());
    CHECK(writhe(m) == -writhe(d));
    CHECK(mirror(m) == d);
  }
}

TEST_CASE("splice pass-through removes a kink") {
  Diagram d = positive_kink();
  auto sp = splice_out(d, {{0, {2, 3, 0, 1}}});
  CHECK(sp.d.crossings.empty());
  CHECK(sp.d.free_loops == 1);
  CHECK(sp.closed_loops == 1);
  CHECK(sp.merged_into.at(1) == 0);
  CHECK(sp.merged_into.at(2) == 0);
}

TEST_CASE("splice chain merging keeps the anchored arc") {
  // pass both strands through a cancelling pair; the third crossing anchors
  // every chain, so nothing closes up
  Diagram d = closure(parse_braid("s1^-1 s1 s1 @2"));
  auto sp = splice_out(d, {{0, {2, 3, 0, 1}}, {1, {2, 3, 0, 1}}});
  CHECK(validate(sp.d).empty());
  CHECK(sp.d.crossings.size() == 1);
  CHECK(sp.closed_loops == 0);
  CHECK(!sp.merged_into.empty());
  for (const auto& [from, to] : sp.merged_into) CHECK(to != 0);
  CHECK(components(sp.d).count == 1);
}

TEST_CASE("disjoint union and connected sum") {
  Diagram k = positive_kink();
  Diagram h = closure(parse_braid("s1^2 @2"));
  Diagram u = disjoint_union(k, h);
  CHECK(validate(u).empty());
  CHECK(u.crossings.size() == 3);
  CHECK(components(u).count == 3);
  CHECK(writhe(u) == writhe(k) + writhe(h));

  Diagram s = connected_sum(k, 1, k, 1);
  CHECK(validate(s).empty());
  CHECK(s.crossings.size() == 2);
  CHECK(components(s).count == 1);
  CHECK(writhe(s) == 2);

  // a bare circle is the connected-sum identity
  Diagram circle;
  circle.free_loops = 1;
  CHECK(connected_sum(k, 1, circle, 0) == k);
  CHECK(connected_sum(circle, 0, k, 1) == k);
}

TEST_CASE("relabel and isomorphism") {
  Diagram d = closure(parse_braid("s1^3 @2"));
  Diagram r = relabel(d, {{0, 10}, {1, 11}, {2, 12}}, {{1, 101}, {2, 102}});
  CHECK(validate(r).empty());
  CHECK(isomorphic(d, r));
  CHECK(!isomorphic(d, mirror(d)));  // trefoil is chiral even combinatorially
  CHECK(!isomorphic(d, closure(parse_braid("s1^2 @2"))));

  Diagram extra = d;
  extra.free_loops = 1;
  CHECK(!isomorphic(d, extra));
}

TEST_CASE("euler relation holds per component") {
  for (const Diagram& d : sample_pool()) {
    CHECK(validate(d).empty());
    // for connected nonempty diagrams F = V + 2; pool diagrams are connected
    if (!d.crossings.empty() && d.free_loops == 0)
      CHECK(faces(d).size() == d.crossings.size() + 2);
  }
}
