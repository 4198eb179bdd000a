#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "knots/errors.hpp"
#include "knots/invariants.hpp"
#include "knots/moves.hpp"

using namespace knots;
using namespace knots::testing;

namespace {

// legal triangles sharing one crossing set make the RIII record ambiguous;
// inverse-exactness is only asserted away from that corner case
int trigon_count(const Diagram& d, const std::vector<CrossingId>& cs) {
  int n = 0;
  for (const MoveRecord& r : enumerate_moves(d))
    if (r.kind == MoveKind::R3 &&
        std::set<CrossingId>(r.crossings.begin(), r.crossings.end()) ==
            std::set<CrossingId>(cs.begin(), cs.end()))
      ++n;
  return n;
}

}  // namespace

TEST_CASE("curl deletion and creation invert each other") {
  Diagram circle;
  circle.free_loops = 1;
  for (int sign : {+1, -1}) {
    for (bool left : {true, false}) {
      MoveRecord r;
      r.kind = MoveKind::R1Create;
      r.sign = sign;
      r.loop_left = left;
      r.arc1 = 0;
      ApplyResult made = apply_move(circle, r);
      CHECK(validate(made.d).empty());
      CHECK(made.d.crossings.size() == 1);
      CHECK(made.d.free_loops == 0);
      CHECK(writhe(made.d) == sign);
      ApplyResult undone = apply_move(made.d, made.inverse);
      CHECK(undone.d == circle);
      CHECK(undone.inverse.kind == MoveKind::R1Create);
      CHECK(undone.inverse.arc1 == 0);
    }
  }
}

TEST_CASE("curl creation on a real arc") {
  Diagram d = closure(parse_braid("s1^2 @2"));
  MoveRecord r;
  r.kind = MoveKind::R1Create;
  r.sign = -1;
  r.loop_left = false;
  r.arc1 = 3;
  ApplyResult made = apply_move(d, r);
  CHECK(validate(made.d).empty());
  CHECK(made.d.crossings.size() == 3);
  CHECK(writhe(made.d) == writhe(d) - 1);
  CHECK(components(made.d).count == components(d).count);
  ApplyResult undone = apply_move(made.d, made.inverse);
  CHECK(isomorphic(undone.d, d));
}

TEST_CASE("move records render and parse") {
  std::string text =
      "RI- sign=+ at=5\n"
      "RI+ sign=- side=L at=12\n"
      "RII- class=matched at=3 7\n"
      "RII+ over=4/L under=9/R\n"
      "RIII at=1 2 8\n";
  std::vector<MoveRecord> ms = parse_moves(text);
  REQUIRE(ms.size() == 5);
  CHECK(ms[0].kind == MoveKind::R1Delete);
  CHECK(ms[0].sign == 1);
  CHECK(ms[0].crossings == std::vector<CrossingId>{5});
  CHECK(ms[1].kind == MoveKind::R1Create);
  CHECK(ms[1].arc1 == 12);
  CHECK(ms[1].loop_left);
  CHECK(ms[2].matched);
  CHECK(ms[3].arc1 == 4);
  CHECK(ms[3].side1_left);
  CHECK(ms[3].arc2 == 9);
  CHECK(!ms[3].side2_left);
  CHECK(ms[4].crossings == std::vector<CrossingId>{1, 2, 8});
  CHECK(render_moves(ms) == text);

  CHECK_THROWS_AS(parse_moves("RI+ at=3\n"), ParseError);
  CHECK_THROWS_AS(parse_moves("RII- at=3 7\n"), ParseError);
  CHECK_THROWS_AS(parse_moves("RIII at=1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_moves("WAT at=1\n"), ParseError);
}

TEST_CASE("bigon deletion on the 2-crossing unlink") {
  Diagram d = closure(parse_braid("s1^-1 s1 @2"));
  CHECK(classify_r2(d, 0, 1) == true);  // first bigon in face order
  for (bool matched : {true, false}) {
    MoveRecord r;
    r.kind = MoveKind::R2Delete;
    r.crossings = {0, 1};
    r.matched = matched;
    ApplyResult done = apply_move(d, r);
    CHECK(done.d.crossings.empty());
    CHECK(done.d.free_loops == 2);
    // both strands closed up, so the inverse recreates two circles
    CHECK(done.inverse.kind == MoveKind::R2Create);
    CHECK(done.inverse.arc1 == 0);
    CHECK(done.inverse.arc2 == 0);
    ApplyResult undone = apply_move(done.d, done.inverse);
    CHECK(validate(undone.d).empty());
    CHECK(undone.d.free_loops == 0);
    CHECK(undone.d.crossings.size() == 2);
    // the bigon rebuilt by the inverse has the class we deleted
    CHECK(undone.applied.matched == matched);
  }
}

TEST_CASE("finger move between two free loops") {
  Diagram two;
  two.free_loops = 2;
  MoveRecord r;
  r.kind = MoveKind::R2Create;
  r.arc1 = 0;
  r.arc2 = 0;
  ApplyResult made = apply_move(two, r);
  CHECK(validate(made.d).empty());
  CHECK(made.d.crossings.size() == 2);
  CHECK(made.d.free_loops == 0);
  CHECK(components(made.d).count == 2);
  CHECK(writhe(made.d) == 0);
  ApplyResult undone = apply_move(made.d, made.inverse);
  CHECK(undone.d == two);
}

TEST_CASE("finger move across a real arc") {
  Diagram d = positive_kink();
  // push arc 1 over arc 2 through their shared face
  for (bool s1 : {true, false}) {
    for (bool s2 : {true, false}) {
      MoveRecord r;
      r.kind = MoveKind::R2Create;
      r.arc1 = 1;
      r.side1_left = s1;
      r.arc2 = 2;
      r.side2_left = s2;
      ApplyResult made;
      try {
        made = apply_move(d, r);
      } catch (const MoveError&) {
        continue;  // that side pair shares no face
      }
      CHECK(validate(made.d).empty());
      CHECK(made.d.crossings.size() == 3);
      CHECK(writhe(made.d) == 1);  // the new pair cancels
      ApplyResult undone = apply_move(made.d, made.inverse);
      CHECK(isomorphic(undone.d, d));
    }
  }
}

TEST_CASE("enumerated moves all apply and preserve validity") {
  for (const Diagram& d : sample_pool()) {
    for (const MoveRecord& r : enumerate_moves(d)) {
      ApplyResult step = apply_move(d, r);
      CHECK(validate(step.d).empty());
      CHECK(components(step.d).count == components(d).count);
    }
  }
}

TEST_CASE("enumerated moves invert exactly") {
  for (const Diagram& d : sample_pool()) {
    for (const MoveRecord& r : enumerate_moves(d)) {
      ApplyResult step = apply_move(d, r);
      if (step.inverse.kind == MoveKind::R2Create &&
          step.inverse.arc1 == step.inverse.arc2 && step.inverse.arc1 != 0)
        continue;  // tangled same-strand bigon: inverse not representable
      if (r.kind == MoveKind::R3 && trigon_count(d, r.crossings) > 1)
        continue;  // ambiguous triangle site
      ApplyResult back = apply_move(step.d, step.inverse);
      CHECK(isomorphic(back.d, d));
    }
  }
}

TEST_CASE("triangle slide is an involution") {
  Diagram d = closure(dn_word(2));
  MoveRecord r;
  r.kind = MoveKind::R3;
  r.crossings = {0, 1, 2};
  ApplyResult once = apply_move(d, r);
  CHECK(validate(once.d).empty());
  CHECK(writhe(once.d) == writhe(d));
  CHECK(!isomorphic(once.d, d));
  ApplyResult twice = apply_move(once.d, once.inverse);
  CHECK(isomorphic(twice.d, d));
}

TEST_CASE("trefoil has no deletions or slides") {
  Diagram d = closure(parse_braid("s1^3 @2"));
  for (const MoveRecord& r : enumerate_moves(d)) {
    CHECK(r.kind != MoveKind::R1Delete);
    CHECK(r.kind != MoveKind::R2Delete);
    CHECK(r.kind != MoveKind::R3);
  }
}

TEST_CASE("kink curl sides are classified") {
  auto ms = enumerate_moves(positive_kink());
  bool saw = false;
  for (const MoveRecord& r : ms) {
    if (r.kind != MoveKind::R1Delete) continue;
    saw = true;
    CHECK(r.sign == 1);
    CHECK(r.crossings == std::vector<CrossingId>{0});
  }
  CHECK(saw);
}

TEST_CASE("illegal moves are rejected with reasons") {
  Diagram d = closure(parse_braid("s1^3 @2"));
  MoveRecord r;
  r.kind = MoveKind::R1Delete;
  r.crossings = {0};
  CHECK_THROWS_AS(apply_move(d, r), MoveError);  // no curl on a trefoil
  r.crossings = {99};
  CHECK_THROWS_AS(apply_move(d, r), MoveError);
  MoveRecord r2;
  r2.kind = MoveKind::R2Delete;
  r2.crossings = {0, 1};
  r2.matched = true;
  CHECK_THROWS_AS(apply_move(d, r2), MoveError);  // bigons there are mixed
  MoveRecord r3;
  r3.kind = MoveKind::R3;
  r3.crossings = {0, 1, 2};
  CHECK_THROWS_AS(apply_move(d, r3), MoveError);  // no slidable triangle
}

TEST_CASE("replay reports the failing index") {
  Diagram d = positive_kink();
  MoveRecord good;
  good.kind = MoveKind::R1Delete;
  good.crossings = {0};
  MoveRecord bad;
  bad.kind = MoveKind::R1Delete;
  bad.crossings = {0};  // gone after the first delete
  try {
    replay(d, {good, bad});
    FAIL("expected MoveError");
  } catch (const MoveError& e) {
    CHECK(e.index == 1);
  }
  ReplayResult ok = replay(d, {good});
  CHECK(ok.final.crossings.empty());
  CHECK(ok.tally.r1_delete_pos == 1);
  CHECK(ok.tally.total() == 1);
}

TEST_CASE("fingerprint is invariant under every enumerated move") {
  for (const Diagram& d : sample_pool()) {
    if (d.crossings.size() > 5) continue;  // keep the brackets cheap
    LaurentPoly fp = fingerprint(d);
    for (const MoveRecord& r : enumerate_moves(d)) {
      ApplyResult step = apply_move(d, r);
      CHECK(fingerprint(step.d) == fp);
    }
  }
}
