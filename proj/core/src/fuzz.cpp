#include "knots/fuzz.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <vector>

#include "knots/codec.hpp"
#include "knots/hn.hpp"
#include "knots/invariants.hpp"
#include "knots/moves.hpp"

namespace knots {

void FuzzStats::note(bool ok, const std::string& what) {
  ++checked;
  if (ok) return;
  ++violations;
  if (first_violation.empty()) first_violation = what;
}

Braid random_braid(Rng& rng, int max_strands, int max_letters) {
  Braid b;
  b.strands = rng.uniform(2, std::max(2, max_strands));
  int letters = rng.uniform(1, std::max(1, max_letters));
  for (int i = 0; i < letters; ++i) {
    Letter l;
    l.index = rng.uniform(1, b.strands - 1);
    l.sign = rng.coin() ? 1 : -1;
    l.id = static_cast<CrossingId>(i);
    b.letters.push_back(l);
  }
  return b;
}

Diagram random_diagram(Rng& rng, int max_crossings) {
  Braid b = random_braid(rng, 5, std::max(1, max_crossings));
  Diagram d = closure(b);
  if (rng.uniform(0, 9) == 0) ++d.free_loops;
  int extra = rng.uniform(0, 3);
  for (int i = 0; i < extra; ++i) {
    std::vector<MoveRecord> pool;
    for (const MoveRecord& r : enumerate_moves(d)) {
      bool creates = r.kind == MoveKind::R1Create || r.kind == MoveKind::R2Create;
      int growth = r.kind == MoveKind::R1Create ? 1 : r.kind == MoveKind::R2Create ? 2 : 0;
      if (creates && static_cast<int>(d.crossings.size()) + growth > max_crossings)
        continue;
      pool.push_back(r);
    }
    if (pool.empty()) break;
    d = apply_move(d, rng.pick(pool)).d;
  }
  return d;
}

int crossing_graph_components(const Diagram& d) {
  if (d.crossings.empty()) return 0;
  std::map<CrossingId, CrossingId> parent;
  for (const auto& [id, c] : d.crossings) parent[id] = id;
  std::function<CrossingId(CrossingId)> find = [&](CrossingId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [a, ends] : arc_table(d))
    parent[find(ends.tail.crossing)] = find(ends.head.crossing);
  int comps = 0;
  for (const auto& [id, p] : parent)
    if (find(id) == id) ++comps;
  return comps;
}

LaurentPoly bracket_brute(const Diagram& d, int cap) {
  const int c = static_cast<int>(d.crossings.size());
  if (c > cap) throw CapError("brute bracket capped at " + std::to_string(cap));
  std::vector<CrossingId> ids;
  for (const auto& [id, cr] : d.crossings) ids.push_back(id);
  auto tab = arc_table(d);
  // nodes are (crossing, port); each carries one arc edge and one smoothing
  // edge per state, so union-find classes are exactly the state circles
  auto node = [&](CrossingId id, int port) {
    return static_cast<int>(std::lower_bound(ids.begin(), ids.end(), id) - ids.begin()) * 4 + port;
  };
  std::vector<int> base(4 * c);
  std::iota(base.begin(), base.end(), 0);
  std::vector<std::pair<int, int>> arc_edges;
  for (const auto& [a, ends] : tab)
    arc_edges.push_back({node(ends.tail.crossing, ends.tail.port),
                         node(ends.head.crossing, ends.head.port)});
  LaurentPoly total;
  for (long long state = 0; state < (1LL << c); ++state) {
    std::vector<int> parent = base;
    std::function<int(int)> find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    auto join = [&](int a, int b) { parent[find(a)] = find(b); };
    int a_count = 0;
    for (int i = 0; i < c; ++i) {
      bool a_state = ((state >> i) & 1) == 0;
      if (a_state) {
        ++a_count;
        join(i * 4 + 0, i * 4 + 1);
        join(i * 4 + 2, i * 4 + 3);
      } else {
        join(i * 4 + 1, i * 4 + 2);
        join(i * 4 + 3, i * 4 + 0);
      }
    }
    for (auto [x, y] : arc_edges) join(x, y);
    int loops = 0;
    for (int i = 0; i < 4 * c; ++i)
      if (find(i) == i) ++loops;
    loops += d.free_loops;
    LaurentPoly term = LaurentPoly::monomial(1, a_count - (c - a_count));
    if (loops > 1) term = term * delta_power(loops - 1);
    total += term;
  }
  return total;
}

namespace {

std::vector<long long> linking_profile(const Diagram& d) {
  LinkingInfo info = linking(d);
  std::vector<long long> vals;
  for (std::size_t i = 0; i < info.lk.size(); ++i)
    for (std::size_t j = i + 1; j < info.lk.size(); ++j)
      vals.push_back(info.lk[i][j]);
  std::sort(vals.begin(), vals.end());
  return vals;
}

std::string describe(const Diagram& d, const MoveRecord& r, const std::string& what) {
  std::ostringstream os;
  os << what << " after " << render_move(r) << " on:\n" << encode_text(d);
  return os.str();
}

}  // namespace

FuzzStats fuzz_move_invariance(std::uint64_t seed, long long pairs, int max_crossings) {
  Rng rng(seed);
  FuzzStats stats;
  while (stats.checked < pairs) {
    Diagram d = random_diagram(rng, max_crossings);
    std::vector<MoveRecord> moves = enumerate_moves(d);
    if (moves.empty()) continue;
    const MoveRecord& r = rng.pick(moves);
    ApplyResult step = apply_move(d, r);
    std::ostringstream bad;
    if (!validate(step.d).empty()) bad << "[invalid result]";
    if (components(step.d).count != components(d).count) bad << "[component count changed]";
    if (linking_profile(step.d) != linking_profile(d)) bad << "[linking changed]";
    if (fingerprint(step.d) != fingerprint(d)) bad << "[fingerprint changed]";
    auto face_ok = [](const Diagram& dd) {
      return faces(dd).size() ==
             dd.crossings.size() + 2 * static_cast<std::size_t>(crossing_graph_components(dd));
    };
    if (!face_ok(d) || !face_ok(step.d)) bad << "[face count formula broken]";
    stats.note(bad.str().empty(), describe(d, r, bad.str()));
  }
  return stats;
}

FuzzStats fuzz_surrogate_bounds(std::uint64_t seed, long long pairs, int max_crossings) {
  Rng rng(seed);
  FuzzStats stats;
  auto phi = [](const Diagram& dd) { return linking(dd).total_abs(); };
  while (stats.checked < pairs) {
    Diagram d = random_diagram(rng, max_crossings);
    std::vector<MoveRecord> moves = enumerate_moves(d);
    if (moves.empty()) continue;
    const MoveRecord& r = rng.pick(moves);
    ApplyResult step = apply_move(d, r);
    long long before = iu_generic(d, phi);
    long long after = iu_generic(step.d, phi);
    long long shift = std::llabs(after - before);
    long long allowed = 0;
    switch (step.applied.kind) {
      case MoveKind::R1Create:
      case MoveKind::R1Delete:
        allowed = 0;
        break;
      case MoveKind::R2Create:
      case MoveKind::R2Delete:
        allowed = step.applied.matched ? 1 : 0;
        break;
      case MoveKind::R3:
        allowed = 2;
        break;
    }
    std::ostringstream what;
    what << "surrogate sum moved by " << shift << " (allowed " << allowed << ")";
    stats.note(shift <= allowed, describe(d, r, what.str()));
  }
  return stats;
}

FuzzStats fuzz_bigon_semantics(std::uint64_t seed, long long bigons, int max_crossings) {
  Rng rng(seed);
  FuzzStats stats;
  while (stats.checked < bigons) {
    // plant a cancelling pair so bigons are plentiful
    Braid b = random_braid(rng, 5, std::max(1, max_crossings - 2));
    int index = rng.uniform(1, b.strands - 1);
    int sign = rng.coin() ? 1 : -1;
    int pos = rng.uniform(0, static_cast<int>(b.letters.size()));
    Letter first{index, sign, 0}, second{index, -sign, 0};
    b.letters.insert(b.letters.begin() + pos, {first, second});
    for (std::size_t i = 0; i < b.letters.size(); ++i)
      b.letters[i].id = static_cast<CrossingId>(i);
    Diagram d = closure(b);
    for (const MoveRecord& r : enumerate_moves(d)) {
      if (r.kind != MoveKind::R2Delete) continue;
      if (stats.checked >= bigons) break;
      CrossingId x = r.crossings[0], y = r.crossings[1];
      Diagram sx = smooth(d, x);
      Diagram sy = smooth(d, y);
      std::ostringstream bad;
      if (components(sx).count != components(sy).count)
        bad << "[corner smoothings differ in components]";
      if (r.matched) {
        if (fingerprint(crossing_change(sx, y)) != fingerprint(sy))
          bad << "[matched corners not related by one crossing change]";
      } else {
        if (fingerprint(sx) != fingerprint(sy))
          bad << "[unmatched corners have different fingerprints]";
      }
      stats.note(bad.str().empty(), describe(d, r, bad.str()));
    }
  }
  return stats;
}

FuzzStats fuzz_bracket_oracle(std::uint64_t seed, long long samples, int max_crossings) {
  Rng rng(seed);
  FuzzStats stats;
  while (stats.checked < samples) {
    Diagram d = random_diagram(rng, max_crossings);
    bool ok = bracket(d) == bracket_brute(d, std::max(max_crossings, 12));
    stats.note(ok, ok ? "" : "bracket mismatch on:\n" + encode_text(d));
  }
  return stats;
}

}  // namespace knots
