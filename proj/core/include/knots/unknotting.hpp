#pragma once

#include <optional>
#include <string>
#include <vector>

#include "knots/diagram.hpp"
#include "knots/laurent.hpp"
#include "knots/moves.hpp"

namespace knots {

// Certified enclosure [lo, hi] of an unknotting number; hi absent = unbounded.
struct UInterval {
  long long lo = 0;
  std::optional<long long> hi;

  static UInterval exact(long long v) { return {v, v}; }
  static UInterval range(long long lo, long long hi);
  static UInterval at_least(long long lo) { return {lo, std::nullopt}; }

  bool is_exact() const { return hi && *hi == lo; }
  bool operator==(const UInterval&) const = default;
  std::string str() const;  // "[lo,hi]" or "[lo,inf)"
};

UInterval add(const UInterval& a, const UInterval& b);
UInterval scale(const UInterval& a, long long k);  // k >= 0
// intersection; throws DiagramError when empty (contradictory bounds)
UInterval intersect(const UInterval& a, const UInterval& b);

// Identification tags for the link family the census recognizes.
enum class CensusTag { Unknot, Unlink, T2Composite, Unknown };

struct CensusId {
  CensusTag tag = CensusTag::Unknown;
  int param = 0;           // m for Unlink, k for T2Composite
  LaurentPoly fingerprint; // retained for Unknown
  bool operator==(const CensusId&) const = default;
  std::string str() const;
};

CensusId census_unknot();
CensusId census_unlink(int m);
CensusId census_t2(int k);  // T(2,k) # T(2,-k)

// Exact/certified unknotting intervals for the family.  The conjecture flag
// collapses the odd-k composite interval [2, k-1] to exactly k-1.
UInterval u_table(const CensusId& id, bool assume_conjecture);

// Reference diagrams: closure(s1^k) connect-summed with its mirror, and the
// m-component crossing-free unlink.
Diagram t2_composite_diagram(int k);
Diagram unlink_diagram(int m);

// Fingerprint table for {Unknot, Unlink, T2Composite(1..max_k)}.
struct CensusFamily {
  int max_k = 0;
  int bracket_cap = 24;
  std::vector<LaurentPoly> t2;  // t2[k] for 1 <= k <= max_k
};

CensusFamily census_family(int max_k, int bracket_cap = 24);
// true when the family fingerprints separate the distinct links; note that
// T2Composite(1) is the unknot, so those two are expected to coincide
bool family_distinct(const CensusFamily& fam);
// match a diagram against the family by component count + fingerprint
CensusId identify_link(const CensusFamily& fam, const Diagram& d);

// Sum of |lk| over component pairs: a lower bound for u.
long long u_lower_linking(const Diagram& d);

struct SearchBudget {
  int max_changes = 2;        // largest crossing subset size to try
  int riii_budget = 8;        // breadth-first RIII depth when greedy is stuck
  long long max_subsets = 200000;
  int bracket_cap = 24;       // for the unlink-fingerprint pre-filter
};

// A u upper-bound certificate: change these crossings, then replay the moves;
// ending with no crossings proves the link untied with |changes| changes.
struct Witness {
  std::vector<CrossingId> changes;
  std::vector<MoveRecord> moves;
  bool operator==(const Witness&) const = default;
};

std::string render_witness(const Witness& w);
Witness parse_witness(const std::string& text);
// applies the changes then the moves; throws MoveError on any illegal step
ReplayResult verify_witness(const Diagram& d, const Witness& w);

// Greedy crossing-count reduction: apply RI-/RII- deletions in face order;
// when none applies, search breadth-first through up to `riii_budget` RIII
// moves for a diagram where one does.  Returns the reduced diagram and the
// move log (replayable on the input).
std::pair<Diagram, std::vector<MoveRecord>> simplify_greedy(const Diagram& d,
                                                            int riii_budget);

struct SearchResult {
  std::optional<int> changes;  // smallest witness size found, if any
  Witness witness;
};

// Tries crossing subsets smallest-first; a subset succeeds when the changed
// diagram simplifies to zero crossings (a constructive triviality proof).
// Subsets whose fingerprint is not the unlink's are skipped.
SearchResult u_upper_search(const Diagram& d, const SearchBudget& budget);

// Intersection of every applicable enclosure: linking lower bound, table
// interval for an identified link, and [0, s] for a successful search.
UInterval u_enclose(const Diagram& d, const std::optional<CensusId>& id,
                    bool assume_conjecture, const SearchBudget& budget);

}  // namespace knots
