#include "knots/unknotting.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "knots/braid.hpp"
#include "knots/codec.hpp"
#include "knots/invariants.hpp"

namespace knots {

UInterval UInterval::range(long long lo, long long hi) {
  if (hi < lo) throw DiagramError("u interval: hi < lo");
  return {lo, hi};
}

std::string UInterval::str() const {
  std::ostringstream os;
  os << '[' << lo << ',';
  if (hi)
    os << *hi << ']';
  else
    os << "inf)";
  return os.str();
}

UInterval add(const UInterval& a, const UInterval& b) {
  UInterval r{a.lo + b.lo, std::nullopt};
  if (a.hi && b.hi) r.hi = *a.hi + *b.hi;
  return r;
}

UInterval scale(const UInterval& a, long long k) {
  if (k < 0) throw DiagramError("u interval: negative scale");
  if (k == 0) return UInterval::exact(0);
  UInterval r{a.lo * k, std::nullopt};
  if (a.hi) r.hi = *a.hi * k;
  return r;
}

UInterval intersect(const UInterval& a, const UInterval& b) {
  UInterval r{std::max(a.lo, b.lo), std::nullopt};
  if (a.hi && b.hi)
    r.hi = std::min(*a.hi, *b.hi);
  else if (a.hi)
    r.hi = *a.hi;
  else
    r.hi = b.hi;
  if (r.hi && *r.hi < r.lo)
    throw DiagramError("u enclosure: contradictory bounds " + a.str() + " vs " + b.str());
  return r;
}

std::string CensusId::str() const {
  switch (tag) {
    case CensusTag::Unknot:
      return "unknot";
    case CensusTag::Unlink:
      return "unlink(" + std::to_string(param) + ")";
    case CensusTag::T2Composite:
      return "T(2," + std::to_string(param) + ")#mirror";
    case CensusTag::Unknown:
      return "unknown";
  }
  return "unknown";
}

CensusId census_unknot() { return {CensusTag::Unknot, 1, LaurentPoly()}; }

CensusId census_unlink(int m) {
  if (m < 1) throw DiagramError("unlink needs m >= 1");
  if (m == 1) return census_unknot();
  return {CensusTag::Unlink, m, LaurentPoly()};
}

CensusId census_t2(int k) {
  if (k < 1) throw DiagramError("T(2,k) composite needs k >= 1");
  return {CensusTag::T2Composite, k, LaurentPoly()};
}

UInterval u_table(const CensusId& id, bool assume_conjecture) {
  switch (id.tag) {
    case CensusTag::Unknot:
    case CensusTag::Unlink:
      return UInterval::exact(0);
    case CensusTag::T2Composite: {
      int k = id.param;
      if (k < 1) throw DiagramError("u table: bad torus parameter");
      if (k == 1) return UInterval::exact(0);  // T(2,1) is the unknot
      if (k % 2 == 0) return UInterval::exact(k);
      return assume_conjecture ? UInterval::exact(k - 1) : UInterval::range(2, k - 1);
    }
    case CensusTag::Unknown:
      break;
  }
  throw DiagramError("u table: link not identified");
}

Diagram t2_composite_diagram(int k) {
  if (k < 1) throw DiagramError("T(2,k) composite needs k >= 1");
  Diagram half = closure(parse_braid("s1^" + std::to_string(k) + " @2"));
  ArcId a1 = arc_table(half).begin()->first;
  Diagram other = mirror(half);
  ArcId a2 = arc_table(other).begin()->first;
  return connected_sum(half, a1, other, a2);
}

Diagram unlink_diagram(int m) {
  if (m < 0) throw DiagramError("unlink needs m >= 0");
  Diagram d;
  d.free_loops = m;
  return d;
}

CensusFamily census_family(int max_k, int bracket_cap) {
  if (max_k < 1) throw DiagramError("census family needs max_k >= 1");
  CensusFamily fam;
  fam.max_k = max_k;
  fam.bracket_cap = bracket_cap;
  fam.t2.resize(max_k + 1);
  for (int k = 1; k <= max_k; ++k)
    fam.t2[k] = fingerprint(t2_composite_diagram(k), bracket_cap);
  return fam;
}

bool family_distinct(const CensusFamily& fam) {
  // distinct links must get distinct fingerprints; T2(1) == unknot by design
  for (int j = 2; j <= fam.max_k; ++j) {
    if (fam.t2[j] == LaurentPoly::constant(1)) return false;       // vs unknot
    if (fam.t2[j] == delta_power(j % 2 == 0 ? 2 : 1)) return false;  // vs unlink
    for (int k = j + 1; k <= fam.max_k; ++k)
      if (fam.t2[j] == fam.t2[k]) return false;
  }
  return true;
}

CensusId identify_link(const CensusFamily& fam, const Diagram& d) {
  int m = components(d).count;
  LaurentPoly fp = fingerprint(d, fam.bracket_cap);
  if (fp == delta_power(m - 1)) return census_unlink(m);
  for (int k = 2; k <= fam.max_k; ++k) {
    int comps = k % 2 == 0 ? 3 : 1;
    if (m == comps && fp == fam.t2[k]) return census_t2(k);
  }
  return {CensusTag::Unknown, 0, fp};
}

long long u_lower_linking(const Diagram& d) { return linking(d).total_abs(); }

std::string render_witness(const Witness& w) {
  std::ostringstream os;
  os << "changes";
  for (CrossingId c : w.changes) os << ' ' << c;
  os << '\n';
  os << render_moves(w.moves);
  return os.str();
}

Witness parse_witness(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  Witness w;
  bool have_header = false;
  std::ostringstream rest;
  while (std::getline(in, line)) {
    ++lineno;
    std::string body = line.substr(0, line.find('#'));
    if (body.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (!have_header) {
      std::istringstream ls(body);
      std::string kw;
      ls >> kw;
      if (kw != "changes") throw ParseError("witness must start with a 'changes' line", lineno);
      long long id;
      while (ls >> id) {
        if (id < 0) throw ParseError("negative crossing id", lineno);
        w.changes.push_back(static_cast<CrossingId>(id));
      }
      if (!ls.eof()) throw ParseError("bad crossing id in changes line", lineno);
      have_header = true;
    } else {
      rest << line << '\n';
    }
  }
  if (!have_header) throw ParseError("empty witness");
  w.moves = parse_moves(rest.str());
  return w;
}

ReplayResult verify_witness(const Diagram& d, const Witness& w) {
  Diagram cur = d;
  for (CrossingId c : w.changes) {
    if (!cur.crossings.count(c))
      throw MoveError("witness changes unknown crossing " + std::to_string(c));
    cur = crossing_change(cur, c);
  }
  return replay(cur, w.moves);
}

namespace {

std::optional<MoveRecord> first_deletion(const Diagram& d) {
  for (const MoveRecord& r : enumerate_moves(d))
    if (r.kind == MoveKind::R1Delete || r.kind == MoveKind::R2Delete) return r;
  return std::nullopt;
}

}  // namespace

std::pair<Diagram, std::vector<MoveRecord>> simplify_greedy(const Diagram& d,
                                                            int riii_budget) {
  Diagram cur = d;
  std::vector<MoveRecord> log;
  while (!cur.crossings.empty()) {
    if (auto del = first_deletion(cur)) {
      ApplyResult step = apply_move(cur, *del);
      cur = std::move(step.d);
      log.push_back(step.applied);
      continue;
    }
    // stuck: breadth-first over RIII moves until some deletion becomes legal
    struct Node {
      Diagram d;
      std::vector<MoveRecord> path;
    };
    std::set<std::string> seen{encode_text(cur)};
    std::deque<Node> queue{{cur, {}}};
    std::optional<Node> unlocked;
    while (!queue.empty() && !unlocked) {
      Node node = std::move(queue.front());
      queue.pop_front();
      if (static_cast<int>(node.path.size()) >= riii_budget) continue;
      for (const MoveRecord& r : enumerate_moves(node.d)) {
        if (r.kind != MoveKind::R3) continue;
        ApplyResult step = apply_move(node.d, r);
        if (!seen.insert(encode_text(step.d)).second) continue;
        Node next{std::move(step.d), node.path};
        next.path.push_back(step.applied);
        if (first_deletion(next.d)) {
          unlocked = std::move(next);
          break;
        }
        queue.push_back(std::move(next));
      }
    }
    if (!unlocked) break;
    for (const MoveRecord& r : unlocked->path) log.push_back(r);
    cur = std::move(unlocked->d);
  }
  return {cur, log};
}

SearchResult u_upper_search(const Diagram& d, const SearchBudget& budget) {
  std::vector<CrossingId> ids;
  for (const auto& [id, c] : d.crossings) ids.push_back(id);
  const int n = static_cast<int>(ids.size());
  const int comps = components(d).count;
  long long tried = 0;
  const int max_s = std::min<int>(budget.max_changes, n);
  for (int s = 0; s <= max_s; ++s) {
    // subsets of size s in lexicographic order over sorted ids
    std::vector<int> pick(s);
    for (int i = 0; i < s; ++i) pick[i] = i;
    while (true) {
      if (++tried > budget.max_subsets) return {};
      Diagram changed = d;
      std::vector<CrossingId> subset;
      for (int i : pick) {
        subset.push_back(ids[i]);
        changed = crossing_change(changed, ids[i]);
      }
      bool plausible = true;
      try {
        plausible = is_unlink_fingerprint(fingerprint(changed, budget.bracket_cap), comps);
      } catch (const CapError&) {
        // too big for the filter; fall through to the move search
      }
      if (plausible) {
        auto [reduced, moves] = simplify_greedy(changed, budget.riii_budget);
        if (reduced.crossings.empty()) {
          if (reduced.free_loops != comps)
            throw DiagramError("u search: component count drifted");
          return {s, Witness{subset, moves}};
        }
      }
      // advance the combination
      int i = s - 1;
      while (i >= 0 && pick[i] == n - s + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < s; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return {};
}

UInterval u_enclose(const Diagram& d, const std::optional<CensusId>& id,
                    bool assume_conjecture, const SearchBudget& budget) {
  UInterval acc = UInterval::at_least(u_lower_linking(d));
  if (id && id->tag != CensusTag::Unknown)
    acc = intersect(acc, u_table(*id, assume_conjecture));
  SearchResult found = u_upper_search(d, budget);
  if (found.changes) acc = intersect(acc, UInterval::range(0, *found.changes));
  return acc;
}

}  // namespace knots
