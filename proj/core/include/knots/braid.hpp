#pragma once

#include <string>
#include <vector>

#include "knots/diagram.hpp"
#include "knots/moves.hpp"

namespace knots {

// One braid generator occurrence. index is the strand pair (1-based, so
// index i swaps strand positions i and i+1); sign +1 for s_i, -1 for its
// inverse. id doubles as the crossing id in the closure diagram and stays
// attached to the letter through braid-level rewrites, which is what lets a
// braid-side derivation emit diagram-side move records.
struct Letter {
  int index = 1;
  int sign = 1;
  CrossingId id = 0;

  bool operator==(const Letter&) const = default;
};

struct Braid {
  int strands = 1;
  std::vector<Letter> letters;

  bool operator==(const Braid&) const = default;
};

// Word syntax: whitespace-separated generators "s<i>" with an optional
// nonzero exponent "^<e>" (negative exponents are inverses), finished by
// "@<strands>", e.g. "s1^-1 s2^-1 s1^-1 s2^2 @3". Letters get ids in
// expansion order, 0 upward. parse_braid throws ParseError for malformed
// syntax, out-of-range indices, or zero exponents.
Braid parse_braid(const std::string& text);
std::string render_braid(const Braid& b);  // compresses runs into exponents

// Strand permutation of the word: out[p] is the bottom position reached by
// the strand entering at top position p (0-based positions).
std::vector<int> strand_permutation(const Braid& b);
int cycle_count(const std::vector<int>& perm);

// Braid closure: strands run top to bottom and each bottom endpoint wraps
// around to its own top position. Crossing ids are the letter ids; positions
// never involved in a crossing close into free loops. With these conventions
// s_i gives a negative crossing and s_i^-1 a positive one.
Diagram closure(const Braid& b);

// The D_n unlink presentation on n+1 strands:
//   s1^-1 (s2^-1 s1^-1) (s3^-1 s2^-1) ... (sn^-1 s[n-1]^-1) sn^n
// Its closure is a 2-component unlink diagram with 3n-1 crossings
// (2n-1 positive, n negative) and writhe n-1.
Braid dn_word(int n);

// One reduction step for words shaped s1^-k (s2^-1 s1^-1)...(sm^-1 s[m-1]^-1) sm^l
// with m >= 2: slide the leading s1^-k block through the first pair with k
// braid-relation rewrites, then remove the isolated s1^-1 by destabilization
// (an RI- on the closure) and shift all indices down. The result has the
// same shape with m-1 pairs and a leading s1^-(k+1) block. moves holds the
// diagram-side records, valid on closure(word) for the *input* word; the
// permuted / surviving letter ids make closure(step.word) the diagram the
// replay ends at, up to arc relabeling.
struct ReductionStep {
  Braid word;
  std::vector<MoveRecord> moves;
};
ReductionStep reduce_once(const Braid& b);  // throws DiagramError if b lacks the shape

}  // namespace knots
