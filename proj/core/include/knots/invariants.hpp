#pragma once

#include <vector>

#include "knots/diagram.hpp"
#include "knots/laurent.hpp"

namespace knots {

// Pairwise linking numbers. Entry (i, j) is half the signed count of
// crossings where components i and j cross; diagonal entries are 0.
struct LinkingInfo {
  ComponentLabeling comps;
  std::vector<std::vector<int>> lk;

  long long total() const;      // sum of lk(i, j) over i < j
  long long total_abs() const;  // sum of |lk(i, j)| over i < j
};
LinkingInfo linking(const Diagram& d);

// Kauffman bracket in Z[A, A^-1], with <unknot> = 1 and <empty> = 1.
// Computed by sweeping crossings with a frontier of boundary pairings, so
// braid-like diagrams stay cheap. Throws CapError if the diagram has more
// than cap crossings.
LaurentPoly bracket(const Diagram& d, int cap = 24);

// delta = -A^2 - A^-2, the value of a disjoint circle
LaurentPoly loop_delta();
LaurentPoly delta_power(int k);  // delta^k, k >= 0

// Writhe-corrected bracket (-A)^(-3w) <D>: unchanged by all Reidemeister
// moves, so equal fingerprints mean "not distinguished by the Jones
// polynomial". An m-component unlink has fingerprint delta^(m-1).
LaurentPoly fingerprint(const Diagram& d, int cap = 24);

bool is_unlink_fingerprint(const LaurentPoly& f, int components);

}  // namespace knots
