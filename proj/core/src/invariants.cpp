#include "knots/invariants.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "knots/errors.hpp"

namespace knots {

long long LinkingInfo::total() const {
  long long s = 0;
  for (std::size_t i = 0; i < lk.size(); ++i)
    for (std::size_t j = i + 1; j < lk.size(); ++j) s += lk[i][j];
  return s;
}

long long LinkingInfo::total_abs() const {
  long long s = 0;
  for (std::size_t i = 0; i < lk.size(); ++i)
    for (std::size_t j = i + 1; j < lk.size(); ++j)
      s += std::abs(static_cast<long long>(lk[i][j]));
  return s;
}

LinkingInfo linking(const Diagram& d) {
  LinkingInfo info;
  info.comps = components(d);
  int m = info.comps.count;
  std::vector<std::vector<int>> twice(m, std::vector<int>(m, 0));
  for (const auto& [id, c] : d.crossings) {
    int under = info.comps.comp_of_arc.at(c.arc[0]);
    int over = info.comps.comp_of_arc.at(c.arc[c.over_in]);
    if (under == over) continue;
    twice[under][over] += sign_of(c);
    twice[over][under] += sign_of(c);
  }
  info.lk.assign(m, std::vector<int>(m, 0));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (twice[i][j] % 2 != 0)
        throw DiagramError("odd inter-component crossing sum");
      info.lk[i][j] = twice[i][j] / 2;
    }
  }
  return info;
}

LaurentPoly loop_delta() {
  return LaurentPoly::monomial(-1, 2) + LaurentPoly::monomial(-1, -2);
}

LaurentPoly delta_power(int k) {
  LaurentPoly p = LaurentPoly::constant(1);
  LaurentPoly dl = loop_delta();
  for (int i = 0; i < k; ++i) p *= dl;
  return p;
}

namespace {

// A frontier state: the boundary ports of the processed region, paired up by
// the strands running through it. Stored sorted for use as a map key.
using Pairing = std::vector<std::pair<PortRef, PortRef>>;

Pairing canonical(std::map<PortRef, PortRef> links) {
  Pairing out;
  while (!links.empty()) {
    auto [u, v] = *links.begin();
    links.erase(u);
    links.erase(v);
    out.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Crossings ordered breadth-first along arcs, so the frontier stays small on
// braid-like diagrams.
std::vector<CrossingId> sweep_order(const Diagram& d,
                                    const std::map<ArcId, ArcEnds>& at) {
  std::map<CrossingId, std::vector<CrossingId>> adj;
  for (const auto& [a, e] : at)
    if (e.tail.crossing != e.head.crossing) {
      adj[e.tail.crossing].push_back(e.head.crossing);
      adj[e.head.crossing].push_back(e.tail.crossing);
    }
  std::vector<CrossingId> order;
  std::set<CrossingId> seen;
  for (const auto& [start, c0] : d.crossings) {
    if (seen.count(start)) continue;
    std::vector<CrossingId> queue{start};
    seen.insert(start);
    for (std::size_t q = 0; q < queue.size(); ++q) {
      CrossingId c = queue[q];
      order.push_back(c);
      for (CrossingId n : adj[c])
        if (seen.insert(n).second) queue.push_back(n);
    }
  }
  return order;
}

}  // namespace

LaurentPoly bracket(const Diagram& d, int cap) {
  if (int(d.crossings.size()) > cap)
    throw CapError("bracket: " + std::to_string(d.crossings.size()) +
                   " crossings exceed the cap of " + std::to_string(cap));
  if (d.crossings.empty()) {
    int k = d.free_loops == 0 ? 0 : d.free_loops - 1;
    return delta_power(k);
  }

  auto at = arc_table(d);
  auto other_end = [&](ArcId a, PortRef here) {
    const ArcEnds& e = at.at(a);
    PortRef t{e.tail.crossing, e.tail.port};
    PortRef h{e.head.crossing, e.head.port};
    return here == t ? h : t;
  };

  LaurentPoly dl = loop_delta();
  std::map<Pairing, LaurentPoly> states;
  states[{}] = LaurentPoly::constant(1);

  for (CrossingId cid : sweep_order(d, at)) {
    const Crossing& c = d.at(cid);
    std::map<Pairing, LaurentPoly> next;
    for (const auto& [pairing, coeff] : states) {
      for (int choice = 0; choice < 2; ++choice) {
        // A-smoothing joins ports (0,1) and (2,3); B joins (1,2) and (3,0).
        // chain maps each open path end to the path's other end.
        int base = choice == 0 ? 0 : 1;
        std::map<PortRef, PortRef> chain(pairing.begin(), pairing.end());
        for (const auto& [u, v] : pairing) chain[v] = u;

        // c's ports not already dangling from the processed region enter as
        // fresh one-arc paths to the far end of their arc
        for (int p = 0; p < 4; ++p) {
          PortRef here{cid, p};
          if (chain.count(here)) continue;
          PortRef far = other_end(c.arc[p], here);
          chain[here] = far;
          chain[far] = here;
        }

        int loops = 0;
        auto connect = [&](PortRef u, PortRef v) {
          PortRef eu = chain.at(u), ev = chain.at(v);
          chain.erase(u);
          chain.erase(v);
          if (eu == v) {  // u and v were the two ends of one path: a circle
            ++loops;
            return;
          }
          chain[eu] = ev;
          chain[ev] = eu;
        };
        for (int j = 0; j < 2; ++j) {
          int p = (base + 2 * j) % 4, q = (base + 2 * j + 1) % 4;
          connect(PortRef{cid, p}, PortRef{cid, q});
        }

        Pairing key = canonical(chain);
        LaurentPoly term = coeff;
        term *= LaurentPoly::monomial(1, choice == 0 ? 1 : -1);
        for (int l = 0; l < loops; ++l) term *= dl;
        auto [it, fresh] = next.emplace(key, term);
        if (!fresh) it->second += term;
      }
    }
    states = std::move(next);
  }

  LaurentPoly total;
  for (const auto& [pairing, coeff] : states) {
    if (!pairing.empty()) throw DiagramError("bracket: open boundary left");
    total += coeff;
  }
  for (int l = 0; l < d.free_loops; ++l) total *= dl;
  auto reduced = LaurentPoly::div_exact(total, dl);
  if (!reduced) throw DiagramError("bracket: state sum not divisible by delta");
  return *reduced;
}

LaurentPoly fingerprint(const Diagram& d, int cap) {
  int w = writhe(d);
  LaurentPoly corr = LaurentPoly::monomial(w % 2 == 0 ? 1 : -1, -3 * w);
  return corr * bracket(d, cap);
}

bool is_unlink_fingerprint(const LaurentPoly& f, int components) {
  if (components <= 0) return false;
  return f == delta_power(components - 1);
}

}  // namespace knots
