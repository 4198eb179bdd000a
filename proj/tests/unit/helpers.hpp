#pragma once

// Shared fixtures: tiny hand-wired diagrams and an independent brute-force
// bracket evaluator used as an oracle for the production sweep algorithm.

#include <doctest.h>

#include <map>
#include <numeric>
#include <vector>

#include "knots/braid.hpp"
#include "knots/diagram.hpp"
#include "knots/invariants.hpp"
#include "knots/laurent.hpp"

namespace knots::testing {

inline Diagram positive_kink() {
  Diagram d;
  Crossing c;
  c.over_in = 3;
  c.arc = {1, 1, 2, 2};  // arc 1 external (1 -> 0), arc 2 the loop (2 -> 3)
  d.crossings.emplace(0, c);
  d.refresh_watermarks();
  return d;
}

inline Diagram negative_kink() {
  Diagram d;
  Crossing c;
  c.over_in = 1;
  c.arc = {1, 2, 2, 1};  // arc 2 external (2 -> 1), arc 1 the loop (3 -> 0)
  d.crossings.emplace(0, c);
  d.refresh_watermarks();
  return d;
}

inline std::vector<Diagram> sample_pool() {
  return {
      positive_kink(),
      negative_kink(),
      closure(parse_braid("s1^2 @2")),        // Hopf link
      closure(parse_braid("s1^3 @2")),        // trefoil
      closure(parse_braid("s1^-1 s1 @2")),    // 2-crossing unlink
      closure(parse_braid("s1 s2^-1 s1 s2^-1 @3")),
      closure(parse_braid("s1^2 @3")),        // Hopf plus a free loop
      closure(dn_word(2)),
  };
}

// Exponential-time bracket: sum over all 2^n smoothings, counting circles
// with union-find. Deliberately shares no code with knots::bracket.
inline LaurentPoly bracket_oracle(const Diagram& d) {
  std::vector<CrossingId> ids;
  for (const auto& [id, c] : d.crossings) ids.push_back(id);
  std::size_t n = ids.size();
  LaurentPoly dl = loop_delta();
  if (n == 0) {
    int k = d.free_loops == 0 ? 0 : d.free_loops - 1;
    return delta_power(k);
  }

  std::map<PortRef, int> node;
  for (const auto& [id, c] : d.crossings)
    for (int p = 0; p < 4; ++p) node.emplace(PortRef{id, p}, int(node.size()));

  auto at = arc_table(d);
  LaurentPoly total;
  for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
    std::vector<int> parent(node.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    auto unite = [&](PortRef a, PortRef b) {
      parent[find(node.at(a))] = find(node.at(b));
    };
    for (const auto& [a, e] : at) unite(e.tail, e.head);
    int exp = 0;
    for (std::size_t i = 0; i < n; ++i) {
      CrossingId c = ids[i];
      if (mask & (std::size_t(1) << i)) {  // A: join (0,1) and (2,3)
        unite({c, 0}, {c, 1});
        unite({c, 2}, {c, 3});
        ++exp;
      } else {  // B: join (1,2) and (3,0)
        unite({c, 1}, {c, 2});
        unite({c, 3}, {c, 0});
        --exp;
      }
    }
    int loops = 0;
    for (std::size_t x = 0; x < parent.size(); ++x)
      if (find(int(x)) == int(x)) ++loops;
    LaurentPoly term = LaurentPoly::monomial(1, exp);
    for (int l = 0; l < loops + d.free_loops; ++l) term *= dl;
    total += term;
  }
  auto reduced = LaurentPoly::div_exact(total, dl);
  REQUIRE(reduced.has_value());
  return *reduced;
}

}  // namespace knots::testing
