#include <doctest.h>

#include "helpers.hpp"
#include "knots/fuzz.hpp"
#include "knots/unknotting.hpp"

using namespace knots;
using namespace knots::testing;

TEST_CASE("seeded rng is deterministic and in range") {
  Rng a(42), b(42), c(7);
  bool diverged = false;
  for (int i = 0; i < 200; ++i) {
    int x = a.uniform(-3, 9);
    CHECK(x == b.uniform(-3, 9));
    CHECK(x >= -3);
    CHECK(x <= 9);
    if (x != c.uniform(-3, 9)) diverged = true;
  }
  CHECK(diverged);
  CHECK(a.uniform(5, 5) == 5);
  CHECK_THROWS_AS(a.uniform(2, 1), Error);
  std::vector<int> v{10, 20, 30};
  for (int i = 0; i < 20; ++i) {
    int p = a.pick(v);
    CHECK((p == 10 || p == 20 || p == 30));
  }
  CHECK_THROWS_AS(a.pick(std::vector<int>{}), Error);
}

TEST_CASE("random braids and diagrams are well formed") {
  Rng rng(1);
  for (int i = 0; i < 60; ++i) {
    Braid b = random_braid(rng, 5, 9);
    CHECK(b.strands >= 2);
    CHECK(b.strands <= 5);
    CHECK(!b.letters.empty());
    CHECK(b.letters.size() <= 9);
    for (const Letter& l : b.letters) {
      CHECK(l.index >= 1);
      CHECK(l.index < b.strands);
    }
  }
  for (int i = 0; i < 60; ++i) {
    Diagram d = random_diagram(rng, 10);
    CHECK(validate(d).empty());
    CHECK(d.crossings.size() <= 10);
  }
  // same seed, same stream
  Rng r1(99), r2(99);
  for (int i = 0; i < 10; ++i)
    CHECK(random_diagram(r1, 8) == random_diagram(r2, 8));
}

TEST_CASE("crossing graph components and the face formula") {
  CHECK(crossing_graph_components(unlink_diagram(4)) == 0);
  CHECK(crossing_graph_components(closure(parse_braid("s1^3 @2"))) == 1);
  Diagram two = disjoint_union(closure(parse_braid("s1^3 @2")),
                               closure(parse_braid("s1^2 @2")));
  CHECK(crossing_graph_components(two) == 2);
  CHECK(faces(two).size() == two.crossings.size() + 4);
  for (const Diagram& d : sample_pool()) {
    std::size_t g = crossing_graph_components(d);
    CHECK(faces(d).size() == d.crossings.size() + 2 * g);
  }
}

TEST_CASE("brute-force bracket agrees with the other evaluators") {
  for (const Diagram& d : sample_pool()) {
    LaurentPoly brute = bracket_brute(d);
    CHECK(brute == bracket_oracle(d));  // two independent oracles
    CHECK(brute == bracket(d));
  }
  CHECK(bracket_brute(unlink_diagram(0)) == LaurentPoly::constant(1));
  CHECK(bracket_brute(unlink_diagram(1)) == LaurentPoly::constant(1));
  CHECK(bracket_brute(unlink_diagram(3)) == delta_power(2));
  CHECK_THROWS_AS(bracket_brute(closure(dn_word(6)), 10), CapError);
}

TEST_CASE("fuzz statistics bookkeeping") {
  FuzzStats s;
  s.note(true, "");
  s.note(false, "first");
  s.note(false, "second");
  CHECK(s.checked == 3);
  CHECK(s.violations == 2);
  CHECK(s.first_violation == "first");
  CHECK_FALSE(s.pass());
  CHECK(FuzzStats{}.pass());
}

TEST_CASE("move invariance suite passes on a small run") {
  FuzzStats s = fuzz_move_invariance(2024, 150, 10);
  CHECK(s.checked == 150);
  INFO(s.first_violation);
  CHECK(s.violations == 0);
}

TEST_CASE("surrogate bound suite passes on a small run") {
  FuzzStats s = fuzz_surrogate_bounds(2025, 150, 10);
  CHECK(s.checked == 150);
  INFO(s.first_violation);
  CHECK(s.violations == 0);
}

TEST_CASE("bigon semantics suite passes on a small run") {
  FuzzStats s = fuzz_bigon_semantics(2026, 200, 10);
  CHECK(s.checked >= 200);
  INFO(s.first_violation);
  CHECK(s.violations == 0);
}

TEST_CASE("bracket oracle suite passes on a small run") {
  FuzzStats s = fuzz_bracket_oracle(2027, 60, 9);
  CHECK(s.checked == 60);
  INFO(s.first_violation);
  CHECK(s.violations == 0);
}
