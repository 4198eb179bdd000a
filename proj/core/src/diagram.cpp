#include "knots/diagram.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace knots {

namespace {
std::string cid(CrossingId c) { return std::to_string(c); }
std::string aid(ArcId a) { return std::to_string(a); }
}  // namespace

const Crossing& Diagram::at(CrossingId c) const {
  auto it = crossings.find(c);
  if (it == crossings.end()) throw DiagramError("unknown crossing id " + cid(c));
  return it->second;
}

Crossing& Diagram::at(CrossingId c) {
  auto it = crossings.find(c);
  if (it == crossings.end()) throw DiagramError("unknown crossing id " + cid(c));
  return it->second;
}

void Diagram::refresh_watermarks() {
  next_crossing = 0;
  next_arc = 1;
  for (auto& [id, cr] : crossings) {
    next_crossing = std::max(next_crossing, id + 1);
    for (ArcId a : cr.arc) next_arc = std::max(next_arc, a + 1);
  }
}

std::map<ArcId, ArcEnds> arc_table(const Diagram& d) {
  std::map<ArcId, ArcEnds> t;
  std::map<ArcId, int> outs, ins;
  for (auto& [id, cr] : d.crossings) {
    for (int p = 0; p < 4; ++p) {
      ArcId a = cr.arc[p];
      if (a == 0) throw DiagramError("crossing " + cid(id) + " port " +
                                     std::to_string(p) + " has no arc");
      if (is_in_port(cr, p)) {
        if (ins[a]++) throw DiagramError("arc " + aid(a) + " enters two ports");
        t[a].head = PortRef{id, p};
      } else {
        if (outs[a]++) throw DiagramError("arc " + aid(a) + " leaves two ports");
        t[a].tail = PortRef{id, p};
      }
    }
  }
  for (auto& [a, e] : t) {
    if (!outs.count(a) || !ins.count(a))
      throw DiagramError("arc " + aid(a) + " does not join an out-port to an in-port");
  }
  return t;
}

std::vector<std::string> validate(const Diagram& d) {
  std::vector<std::string> v;
  if (d.free_loops < 0) v.push_back("free_loops is negative");
  for (auto& [id, cr] : d.crossings) {
    if (cr.over_in != 1 && cr.over_in != 3)
      v.push_back("crossing " + cid(id) + ": over_in must be 1 or 3");
    for (int p = 0; p < 4; ++p)
      if (cr.arc[p] == 0)
        v.push_back("crossing " + cid(id) + " port " + std::to_string(p) +
                    ": missing arc label");
  }
  if (!v.empty()) return v;

  std::map<ArcId, std::vector<std::pair<PortRef, bool>>> occ;  // (port, is_in)
  for (auto& [id, cr] : d.crossings)
    for (int p = 0; p < 4; ++p)
      occ[cr.arc[p]].push_back({PortRef{id, p}, is_in_port(cr, p)});
  for (auto& [a, o] : occ) {
    if (o.size() != 2) {
      v.push_back("arc " + aid(a) + " appears " + std::to_string(o.size()) +
                  " times (want exactly 2)");
    } else if (o[0].second == o[1].second) {
      v.push_back("arc " + aid(a) + " must join an out-port to an in-port");
    }
  }
  if (!v.empty()) return v;

  // sphere condition: V - E + F = 2 on every connected piece of the
  // underlying 4-valent graph; E = 2V, so F must equal V + 2
  auto at = arc_table(d);
  std::map<CrossingId, CrossingId> parent;
  for (auto& [id, cr] : d.crossings) parent[id] = id;
  auto find = [&](CrossingId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto& [a, e] : at) parent[find(e.tail.crossing)] = find(e.head.crossing);

  std::map<CrossingId, int> vcount, fcount;
  for (auto& [id, cr] : d.crossings) vcount[find(id)]++;
  for (auto& f : faces(d)) fcount[find(f.darts.front().c)]++;
  for (auto& [root, vc] : vcount) {
    int fc = fcount[root];
    if (fc != vc + 2)
      v.push_back("component at crossing " + cid(root) + " is not spherical: " +
                  std::to_string(vc) + " crossings but " + std::to_string(fc) +
                  " faces");
  }
  return v;
}

PortRef dart_target(const Diagram& d, const std::map<ArcId, ArcEnds>& at, Dart k) {
  ArcId a = d.at(k.c).arc[k.port];
  const ArcEnds& e = at.at(a);
  if (e.tail == PortRef{k.c, k.port}) return e.head;
  return e.tail;
}

std::vector<Face> faces(const Diagram& d) {
  auto at = arc_table(d);
  std::set<Dart> seen;
  std::vector<Face> out;
  for (auto& [id, cr] : d.crossings) {
    for (int p = 0; p < 4; ++p) {
      Dart start{id, p};
      if (seen.count(start)) continue;
      Face f;
      Dart k = start;
      do {
        f.darts.push_back(k);
        seen.insert(k);
        PortRef t = dart_target(d, at, k);
        k = Dart{t.crossing, (t.port + 1) % 4};
      } while (k != start);
      out.push_back(std::move(f));
    }
  }
  return out;
}

ComponentLabeling components(const Diagram& d) {
  auto at = arc_table(d);
  ComponentLabeling out;
  std::set<ArcId> seen;
  for (auto& [a, e] : at) {
    if (seen.count(a)) continue;
    int idx = out.arc_components++;
    ArcId cur = a;
    do {
      seen.insert(cur);
      out.comp_of_arc[cur] = idx;
      PortRef h = at.at(cur).head;
      cur = d.at(h.crossing).arc[through_port(h.port)];
    } while (cur != a);
  }
  out.count = out.arc_components + d.free_loops;
  return out;
}

int crossing_sign(const Diagram& d, CrossingId c) { return sign_of(d.at(c)); }

int writhe(const Diagram& d) {
  int w = 0;
  for (auto& [id, cr] : d.crossings) w += sign_of(cr);
  return w;
}

SpliceResult splice_out(const Diagram& d,
                        const std::map<CrossingId, std::array<int, 4>>& plan) {
  auto at = arc_table(d);
  SpliceResult res;
  res.d = d;
  for (auto& [c, pp] : plan) {
    d.at(c);  // existence check
    for (int p = 0; p < 4; ++p) {
      int q = pp[p];
      if (q < 0 || q > 3 || pp[q] != p || q == p)
        throw DiagramError("splice plan at crossing " + cid(c) + " is not a pairing");
    }
    res.d.crossings.erase(c);
  }
  auto planned = [&](CrossingId c) { return plan.count(c) != 0; };

  // chains anchored at surviving crossings
  for (auto& [a, e] : at) {
    if (planned(e.tail.crossing) || !planned(e.head.crossing)) continue;
    PortRef h = e.head;
    while (true) {
      int q = plan.at(h.crossing)[h.port];
      ArcId nxt = d.at(h.crossing).arc[q];
      res.merged_into[nxt] = a;
      PortRef far = at.at(nxt).head;
      if (!planned(far.crossing)) {
        res.d.at(far.crossing).arc[far.port] = a;
        break;
      }
      h = far;
    }
  }

  // strands trapped entirely inside the deleted region close into circles
  for (auto& [a, e] : at) {
    if (res.merged_into.count(a)) continue;
    if (!planned(e.tail.crossing) || !planned(e.head.crossing)) continue;
    ArcId cur = a;
    do {
      res.merged_into[cur] = 0;
      PortRef h = at.at(cur).head;
      int q = plan.at(h.crossing)[h.port];
      cur = d.at(h.crossing).arc[q];
    } while (cur != a);
    res.closed_loops++;
  }
  res.d.free_loops += res.closed_loops;
  return res;
}

Diagram smooth(const Diagram& d, CrossingId p) {
  const Crossing& cr = d.at(p);
  std::array<int, 4> plan{};
  int oo = over_out_port(cr);
  plan[0] = oo;
  plan[oo] = 0;
  plan[cr.over_in] = 2;
  plan[2] = cr.over_in;
  return splice_out(d, {{p, plan}}).d;
}

Diagram crossing_change(const Diagram& d, CrossingId p) {
  Diagram r = d;
  Crossing& cr = r.at(p);
  const Crossing old = cr;
  // the under strand becomes the over strand: port labels rotate one step and
  // the handedness bit flips, keeping the embedding and orientations intact
  if (old.over_in == 3) {
    for (int q = 0; q < 4; ++q) cr.arc[q] = old.arc[(q + 3) % 4];
    cr.over_in = 1;
  } else {
    for (int q = 0; q < 4; ++q) cr.arc[q] = old.arc[(q + 1) % 4];
    cr.over_in = 3;
  }
  return r;
}

Diagram mirror(const Diagram& d) {
  Diagram r = d;
  for (auto& [id, cr] : d.crossings) r = crossing_change(r, id);
  return r;
}

Diagram disjoint_union(const Diagram& d1, const Diagram& d2) {
  Diagram r = d1;
  CrossingId coff = d1.next_crossing;
  ArcId aoff = d1.next_arc - 1;
  for (auto& [id, cr] : d2.crossings) {
    Crossing c2 = cr;
    for (auto& a : c2.arc) a += aoff;
    r.crossings[id + coff] = c2;
  }
  r.free_loops += d2.free_loops;
  r.next_crossing = coff + d2.next_crossing;
  r.next_arc = aoff + d2.next_arc;
  return r;
}

Diagram connected_sum(const Diagram& d1, ArcId a1, const Diagram& d2, ArcId a2) {
  if (d2.crossings.empty()) {
    if (d2.free_loops != 1 || a2 != 0)
      throw DiagramError("crossingless sum operand must be a single circle (arc id 0)");
    if (d1.crossings.empty()) {
      if (d1.free_loops < 1 || a1 != 0)
        throw DiagramError("crossingless sum operand must be a single circle (arc id 0)");
      return d1;
    }
    if (!arc_table(d1).count(a1)) throw DiagramError("unknown arc id " + aid(a1));
    return d1;  // a circle absorbed into a1's component
  }
  if (d1.crossings.empty()) {
    if (d1.free_loops != 1 || a1 != 0)
      throw DiagramError("crossingless sum operand must be a single circle (arc id 0)");
    if (!arc_table(d2).count(a2)) throw DiagramError("unknown arc id " + aid(a2));
    return d2;
  }

  auto t1 = arc_table(d1);
  auto t2 = arc_table(d2);
  if (!t1.count(a1)) throw DiagramError("unknown arc id " + aid(a1));
  if (!t2.count(a2)) throw DiagramError("unknown arc id " + aid(a2));

  CrossingId coff = d1.next_crossing;
  ArcId aoff = d1.next_arc - 1;
  Diagram r = disjoint_union(d1, d2);

  ArcId b2 = a2 + aoff;
  ArcEnds e1 = t1.at(a1);
  ArcEnds e2 = t2.at(a2);
  PortRef h2{e2.head.crossing + coff, e2.head.port};
  // cut both arcs and cross-join respecting orientation:
  // a1: tail1 -> head2,  b2: tail2 -> head1
  r.at(h2.crossing).arc[h2.port] = a1;
  r.at(e1.head.crossing).arc[e1.head.port] = b2;
  return r;
}

Diagram relabel(const Diagram& d, const std::map<CrossingId, CrossingId>& cmap,
                const std::map<ArcId, ArcId>& amap) {
  auto mc = [&](CrossingId c) {
    auto it = cmap.find(c);
    return it == cmap.end() ? c : it->second;
  };
  auto ma = [&](ArcId a) {
    auto it = amap.find(a);
    ArcId r = it == amap.end() ? a : it->second;
    if (r == 0) throw DiagramError("relabel maps arc " + aid(a) + " to reserved id 0");
    return r;
  };
  Diagram r;
  r.free_loops = d.free_loops;
  for (auto& [id, cr] : d.crossings) {
    Crossing c2 = cr;
    for (auto& a : c2.arc) a = ma(a);
    if (!r.crossings.emplace(mc(id), c2).second)
      throw DiagramError("relabel collides on crossing id " + cid(mc(id)));
  }
  r.refresh_watermarks();
  return r;
}

namespace {

std::vector<int> encode_from(const Diagram& d, const std::map<ArcId, ArcEnds>& at,
                             CrossingId root) {
  std::map<CrossingId, int> idx;
  std::vector<CrossingId> order{root};
  idx[root] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (int p = 0; p < 4; ++p) {
      PortRef t = dart_target(d, at, Dart{order[i], p});
      if (!idx.count(t.crossing)) {
        idx[t.crossing] = static_cast<int>(order.size());
        order.push_back(t.crossing);
      }
    }
  }
  std::vector<int> enc;
  enc.reserve(order.size() * 9);
  for (CrossingId c : order) {
    enc.push_back(d.at(c).over_in);
    for (int p = 0; p < 4; ++p) {
      PortRef t = dart_target(d, at, Dart{c, p});
      enc.push_back(idx.at(t.crossing));
      enc.push_back(t.port);
    }
  }
  return enc;
}

}  // namespace

bool isomorphic(const Diagram& A, const Diagram& B) {
  if (A.free_loops != B.free_loops) return false;
  if (A.crossings.size() != B.crossings.size()) return false;
  if (A.crossings.empty()) return true;

  auto canon = [](const Diagram& d) {
    auto at = arc_table(d);
    // connected pieces of the underlying graph
    std::map<CrossingId, int> comp;
    int nc = 0;
    for (auto& [id, cr] : d.crossings) {
      if (comp.count(id)) continue;
      std::vector<CrossingId> stack{id};
      comp[id] = nc;
      while (!stack.empty()) {
        CrossingId c = stack.back();
        stack.pop_back();
        for (int p = 0; p < 4; ++p) {
          PortRef t = dart_target(d, at, Dart{c, p});
          if (!comp.count(t.crossing)) {
            comp[t.crossing] = nc;
            stack.push_back(t.crossing);
          }
        }
      }
      ++nc;
    }
    std::vector<std::vector<int>> encs(nc);
    for (auto& [id, cr] : d.crossings) {
      auto e = encode_from(d, at, id);
      auto& best = encs[comp[id]];
      if (best.empty() || e < best) best = std::move(e);
    }
    std::sort(encs.begin(), encs.end());
    return encs;
  };
  return canon(A) == canon(B);
}

}  // namespace knots
