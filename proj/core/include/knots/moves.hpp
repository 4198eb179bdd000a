#pragma once

#include <string>
#include <vector>

#include "knots/diagram.hpp"

namespace knots {

// Reidemeister moves, expressed as replayable records.
//
// Deletions address crossings; creations address arcs. An arc id of 0 in a
// creation means "a free loop": RI+ on a free loop consumes one crossing-free
// circle and builds the one-crossing unknot, and an RII+ end may land on a
// free loop (pushing a strand across a floating circle). This keeps every
// deletion invertible even when its strands close up into circles.
enum class MoveKind { R1Delete, R1Create, R2Delete, R2Create, R3 };

struct MoveRecord {
  MoveKind kind;
  // RI: crossing sign (+1/-1). 0 in a hand-written RI- record means "don't
  // care"; apply() fills the actual sign.
  int sign = 0;
  // RI+: loop on the left (true) or right (false) of the strand's direction
  // of travel. RI- records carry the side of the removed loop.
  bool loop_left = true;
  // deletions and RIII: the crossings involved (1, 2, or 3 of them)
  std::vector<CrossingId> crossings;
  // RII-: coherently oriented (matched) bigon or not; apply() verifies it
  // for hand-written records and fills it for enumerated ones.
  bool matched = false;
  // RII+: push arc1 sideways across arc2; arc1 runs over both new crossings.
  // sideN_left says which side of arc N (relative to its direction) faces
  // the other arc; both darts must border a common face.
  ArcId arc1 = 0, arc2 = 0;
  bool side1_left = true, side2_left = true;

  bool operator==(const MoveRecord&) const = default;
};

struct MoveTally {
  int r1_create_pos = 0, r1_create_neg = 0;
  int r1_delete_pos = 0, r1_delete_neg = 0;
  int r2_create_matched = 0, r2_create_unmatched = 0;
  int r2_delete_matched = 0, r2_delete_unmatched = 0;
  int r3 = 0;

  int total() const;
  void add(const MoveRecord& completed);
  bool operator==(const MoveTally&) const = default;
};

// Everything apply() needs to continue: the new diagram, the record with
// computed details filled in (created crossing ids, signs, matched class),
// and the record that undoes the move.
struct ApplyResult {
  Diagram d;
  MoveRecord applied;
  MoveRecord inverse;
};

// Applies one move, checking legality from scratch at the named site.
// Ambiguous sites (several legal faces over the same crossings) resolve to
// the first match in face-scan order, so replays are deterministic.
// Throws MoveError when the site is missing or illegal.
ApplyResult apply_move(const Diagram& d, const MoveRecord& r);

// All currently legal moves, in deterministic order: deletions and RIII
// sites from the face scan, then RI+ per (arc, sign, side), then RII+ per
// (face, ordered dart pair). Creation sites on free loops are not listed.
std::vector<MoveRecord> enumerate_moves(const Diagram& d);

// True if some face is a legal RII bigon exactly over {x, y} and is
// coherently oriented. Throws MoveError if no legal bigon joins the pair.
bool classify_r2(const Diagram& d, CrossingId x, CrossingId y);

struct ReplayResult {
  Diagram final;
  MoveTally tally;
};

// Replays a move sequence, throwing MoveError (with the failing index) on
// the first illegal move.
ReplayResult replay(const Diagram& d, const std::vector<MoveRecord>& moves);

// Text form, one move per line:
//   RI- sign=+ at=5
//   RI+ sign=- side=L at=12
//   RII- class=matched at=3 7
//   RII+ over=4/L under=9/R
//   RIII at=1 2 8
std::string render_moves(const std::vector<MoveRecord>& moves);
std::vector<MoveRecord> parse_moves(const std::string& text);  // throws ParseError
std::string render_move(const MoveRecord& r);

}  // namespace knots
