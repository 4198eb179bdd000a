#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "knots/diagram.hpp"
#include "knots/unknotting.hpp"

namespace knots {

// Closed interval of half-integers, stored as counts of halves so all
// arithmetic stays exact. Either end may be absent (unbounded); signed sums
// of u-enclosures can be unbounded on both sides.
struct IuInterval {
  std::optional<long long> lo2;  // lower end, in halves
  std::optional<long long> hi2;  // upper end, in halves

  static IuInterval exact2(long long halves) { return {halves, halves}; }
  static IuInterval from_u(const UInterval& u);  // doubles the ends

  bool is_exact() const { return lo2 && hi2 && *lo2 == *hi2; }
  bool operator==(const IuInterval&) const = default;
  std::string str() const;  // halves rendered as "12" or "25/2"
};

IuInterval operator+(const IuInterval& a, const IuInterval& b);
IuInterval operator-(const IuInterval& a);
// range of |x - y| for x in a, y in b
IuInterval abs_diff(const IuInterval& a, const IuInterval& b);
// largest g with |x - y| >= g guaranteed for all x in a, y in b (in halves)
long long forced_gap2(const IuInterval& a, const IuInterval& b);

// Answers "what is known about u of this smoothing?"; `at` names the
// smoothed crossing (for error reports and census lookups).
using UOracle = std::function<UInterval(const Diagram& smoothed, CrossingId at)>;

struct IuTerm {
  CrossingId crossing = 0;
  int sign = 0;
  UInterval u;               // oracle enclosure for the smoothing
  IuInterval contribution;   // this crossing's signed share, in halves
};

struct IuValue {
  IuInterval total;
  std::vector<IuTerm> terms;
};

// Sum over crossings of sign(p) * |u(smoothing at p) - u(L)|, evaluated in
// interval arithmetic. A crossing-free diagram gives exactly 0. Oracle
// exceptions are rethrown with the crossing id attached.
IuValue iu(const Diagram& d, const UOracle& oracle, const UInterval& u_of_link);

// Variant with every term shifted by eps and the writhe-change correction
// delta: adds eps * (c(d) + 3 * delta * w(d)) to the plain sum (in halves:
// eps and delta in {-1, 0, +1}).
IuValue iu_eps_delta(const Diagram& d, int eps, int delta, const UOracle& oracle,
                     const UInterval& u_of_link);

// Self-crossing terms use |u(smoothing) - u(L)|, mixed-component terms just
// u(smoothing) (smoothing a mixed crossing merges the two components).
IuValue iu_prime(const Diagram& d, const UOracle& oracle, const UInterval& u_of_link);

// Restriction to crossings between the two named groups of components
// (component labels from components(d)); terms are sign * u(smoothing).
struct SplitPartition {
  std::set<int> j, k;
};
IuValue iu_split(const Diagram& d, const SplitPartition& split, const UOracle& oracle);

// Lower bound on the number of Reidemeister moves between two diagrams with
// these invariant enclosures. MatchedR2AndR3 counts only moves that can shift
// the invariant (matched RII by <= 1, RIII by <= 2); AllMoves divides the
// forced gap by the worst single-move shift 2.
enum class BoundMode { MatchedR2AndR3, AllMoves };

struct MoveBound {
  BoundMode mode = BoundMode::AllMoves;
  long long lo4 = 0;                 // guaranteed (gap / 2), in quarters
  std::optional<long long> hi4;      // upper end of |v1 - v2| / 2, when finite
  long long certified_moves() const { return (lo4 + 3) / 4; }  // ceil to whole moves
};

MoveBound move_lower_bound(const IuValue& a, const IuValue& b, BoundMode mode);

// Same sum with an arbitrary integer-valued diagram function in place of u:
// sum of sign(p) * |phi(smoothing at p) - phi(d)|. Exact (no intervals).
long long iu_generic(const Diagram& d,
                     const std::function<long long(const Diagram&)>& phi);

}  // namespace knots
