#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "knots/braid.hpp"
#include "knots/codec.hpp"
#include "knots/errors.hpp"
#include "knots/moves.hpp"

using namespace knots;
using namespace knots::testing;

TEST_CASE("braid parsing and rendering") {
  Braid b = parse_braid("s1^-1 s2^-1 s1^-1 s2^2 @3");
  CHECK(b.strands == 3);
  REQUIRE(b.letters.size() == 5);
  CHECK(b.letters[0] == Letter{1, -1, 0});
  CHECK(b.letters[3] == Letter{2, 1, 3});
  CHECK(render_braid(b) == "s1^-1 s2^-1 s1^-1 s2^2 @3");
  CHECK(render_braid(parse_braid("s1 s1 s1 @2")) == "s1^3 @2");

  CHECK_THROWS_AS(parse_braid("s1 @1"), ParseError);   // index needs 2 strands
  CHECK_THROWS_AS(parse_braid("s1 s2 @2"), ParseError);
  CHECK_THROWS_AS(parse_braid("s1^0 @2"), ParseError);
  CHECK_THROWS_AS(parse_braid("s1"), ParseError);      // missing @strands
  CHECK_THROWS_AS(parse_braid("x1 @2"), ParseError);
  CHECK_THROWS_AS(parse_braid("s1 @2 s1"), ParseError);
}

TEST_CASE("strand permutation and cycles") {
  CHECK(strand_permutation(parse_braid("@3")) == std::vector<int>{0, 1, 2});
  CHECK(strand_permutation(parse_braid("s1 @2")) == std::vector<int>{1, 0});
  // strand entering at 0 is swapped to 1 by s1, then to 2 by s2
  CHECK(strand_permutation(parse_braid("s1 s2 @3")) ==
        std::vector<int>{2, 0, 1});
  CHECK(cycle_count({0, 1, 2}) == 3);
  CHECK(cycle_count({1, 0, 2}) == 2);
  CHECK(cycle_count({1, 2, 0}) == 1);
}

TEST_CASE("closure component count equals permutation cycles") {
  for (const char* w : {"s1 @2", "s1^2 @2", "s1^3 @2", "s1 s2 @3",
                        "s1^2 @4", "s1^-1 s2^-1 s1^-1 s2^2 @3", "@2"}) {
    Braid b = parse_braid(w);
    Diagram d = closure(b);
    CHECK(validate(d).empty());
    CHECK(components(d).count == cycle_count(strand_permutation(b)));
  }
}

TEST_CASE("closure sign conventions") {
  CHECK(writhe(closure(parse_braid("s1 @2"))) == -1);
  CHECK(writhe(closure(parse_braid("s1^-1 @2"))) == 1);
  // uncrossed strands become free loops
  Diagram d = closure(parse_braid("s1^2 @4"));
  CHECK(d.free_loops == 2);
  CHECK(d.crossings.size() == 2);
}

TEST_CASE("closure crossing ids are letter ids") {
  Braid b = parse_braid("s1 s2 s1 @3");
  Diagram d = closure(b);
  for (const Letter& l : b.letters) {
    CHECK(d.crossings.count(l.id) == 1);
    CHECK(crossing_sign(d, l.id) == -l.sign);
  }
}

TEST_CASE("unlink presentation has the advertised shape") {
  for (int n = 1; n <= 6; ++n) {
    Braid b = dn_word(n);
    CHECK(b.strands == n + 1);
    CHECK(int(b.letters.size()) == 3 * n - 1);
    Diagram d = closure(b);
    CHECK(validate(d).empty());
    CHECK(int(d.crossings.size()) == 3 * n - 1);
    CHECK(writhe(d) == n - 1);
    CHECK(components(d).count == 2);
    CHECK(d.free_loops == 0);
    int pos = 0, neg = 0;
    for (const auto& [id, c] : d.crossings)
      (sign_of(c) > 0 ? pos : neg)++;
    CHECK(pos == 2 * n - 1);
    CHECK(neg == n);
  }
  CHECK(render_braid(dn_word(2)) == "s1^-1 s2^-1 s1^-1 s2^2 @3");
}

TEST_CASE("one reduction step rewrites the word and certifies it") {
  Braid b = dn_word(2);
  ReductionStep step = reduce_once(b);
  CHECK(render_braid(step.word) == "s1^-2 s1^2 @2");
  REQUIRE(step.moves.size() == 2);
  CHECK(step.moves[0].kind == MoveKind::R3);
  CHECK(step.moves[0].crossings == std::vector<CrossingId>{0, 1, 2});
  CHECK(step.moves[1].kind == MoveKind::R1Delete);
  CHECK(step.moves[1].crossings == std::vector<CrossingId>{1});

  // replaying the certificate on the closure lands on the closure of the
  // reduced word, crossing ids included
  Diagram start = closure(b);
  ReplayResult rep = replay(start, step.moves);
  Diagram want = closure(step.word);
  CHECK(encode_text(rep.final) == encode_text(want));
  std::set<CrossingId> got_ids, want_ids;
  for (const auto& [id, c] : rep.final.crossings) got_ids.insert(id);
  for (const auto& [id, c] : want.crossings) want_ids.insert(id);
  CHECK(got_ids == want_ids);
}

TEST_CASE("reduction steps chain down to the two strand word") {
  Braid b = dn_word(4);
  Diagram d = closure(b);
  int r3 = 0, r1 = 0;
  while (true) {
    ReductionStep step;
    try {
      step = reduce_once(b);
    } catch (const DiagramError&) {
      break;
    }
    ReplayResult rep = replay(d, step.moves);
    d = rep.final;
    b = step.word;
    r3 += rep.tally.r3;
    r1 += rep.tally.r1_delete_pos;
    CHECK(encode_text(d) == encode_text(closure(b)));
  }
  CHECK(render_braid(b) == "s1^-4 s1^4 @2");
  CHECK(r1 == 3);       // one destabilization per step
  CHECK(r3 == 1 + 2 + 3);
  CHECK(components(d).count == 2);
}

TEST_CASE("reduce_once rejects words outside the family") {
  CHECK_THROWS_AS(reduce_once(parse_braid("s1^2 @2")), DiagramError);
  CHECK_THROWS_AS(reduce_once(parse_braid("s1^-1 s1 @2")), DiagramError);
  CHECK_THROWS_AS(reduce_once(parse_braid("s1^-1 s2^-1 s1^-1 @3")),
                  DiagramError);
}
