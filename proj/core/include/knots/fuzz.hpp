#pragma once

#include <cstdint>
#include <string>

#include "knots/braid.hpp"
#include "knots/diagram.hpp"
#include "knots/laurent.hpp"
#include "knots/rand.hpp"

namespace knots {

// Randomized property checks over diagrams and moves. Each suite is seeded
// and deterministic; `checked` counts the (diagram, site) pairs examined and
// `first_violation` keeps a human-readable description of the first failure.
struct FuzzStats {
  long long checked = 0;
  long long violations = 0;
  std::string first_violation;

  void note(bool ok, const std::string& what);
  bool pass() const { return violations == 0; }
};

Braid random_braid(Rng& rng, int max_strands, int max_letters);

// closure of a random braid, roughed up by a few random legal moves and the
// occasional free loop; never exceeds max_crossings
Diagram random_diagram(Rng& rng, int max_crossings);

// crossing-adjacency components (free loops not counted); every diagram
// satisfies faces(d).size() == crossings + 2 * crossing_graph_components(d)
int crossing_graph_components(const Diagram& d);

// Kauffman bracket by brute-force state enumeration (2^c states), used as an
// oracle against the frontier computation. Throws CapError above cap.
LaurentPoly bracket_brute(const Diagram& d, int cap = 16);

// Applies a random enumerated move and checks validity, component count,
// linking numbers, fingerprint, and the face-count formula.
FuzzStats fuzz_move_invariance(std::uint64_t seed, long long pairs,
                               int max_crossings = 12);

// Checks the per-move change bounds on the crossing-smoothing sum taken with
// the total-|linking| surrogate (Lipschitz constant 1): RI and unmatched RII
// leave it unchanged, matched RII shifts by at most 1, RIII by at most 2.
FuzzStats fuzz_surrogate_bounds(std::uint64_t seed, long long pairs,
                                int max_crossings = 12);

// For enumerated bigons: both corner smoothings have equal component counts;
// unmatched corners give equal fingerprints, matched corners give equal
// fingerprints after changing the surviving crossing of one side.
FuzzStats fuzz_bigon_semantics(std::uint64_t seed, long long bigons,
                               int max_crossings = 12);

// frontier bracket vs. brute-force state sum
FuzzStats fuzz_bracket_oracle(std::uint64_t seed, long long samples,
                              int max_crossings = 10);

}  // namespace knots
