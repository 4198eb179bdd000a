#include "knots/moves.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>

#include "knots/errors.hpp"

namespace knots {
namespace {

std::string num(std::uint32_t v) { return std::to_string(v); }

// over-strand ports are the odd ones for either handedness
bool over_port(int p) { return p % 2 == 1; }

bool with_flow(const Diagram& d, Dart k) {
  return !is_in_port(d.at(k.c), k.port);
}

// strands keep going straight through a crossing removed by RI-/RII-
std::array<int, 4> pass_through_plan() { return {2, 3, 0, 1}; }

// A curl: one arc occupying two counterclockwise-consecutive ports t, t+1.
// The four patterns determine the crossing sign and which side of the strand
// the loop hangs on.
struct CurlInfo {
  int t;
  int sign;
  bool left;
};

CurlInfo classify_curl(int t) {
  switch (t & 3) {
    case 2: return {2, +1, true};
    case 0: return {0, +1, false};
    case 3: return {3, -1, true};
    default: return {1, -1, false};
  }
}

std::optional<CurlInfo> find_curl(const Crossing& c) {
  for (int t = 0; t < 4; ++t)
    if (c.arc[t] == c.arc[(t + 1) % 4]) return classify_curl(t);
  return std::nullopt;
}

// port wiring for building a curl: strand comes in at entry, leaves at exit,
// the loop arc runs loop_tail -> loop_head
struct CurlBuild {
  int over_in, entry, exit, loop_tail, loop_head;
};

CurlBuild curl_build(int sign, bool left) {
  if (sign > 0) return left ? CurlBuild{3, 0, 1, 2, 3} : CurlBuild{3, 3, 2, 1, 0};
  return left ? CurlBuild{1, 1, 2, 3, 0} : CurlBuild{1, 0, 3, 2, 1};
}

struct BigonInfo {
  Dart over_dart, under_dart;
  ArcId over_arc = 0, under_arc = 0;
  CrossingId c0 = 0, c1 = 0;  // corners in face order
  bool matched = false;
};

// Reads a face as a deletable RII bigon: two distinct corner crossings, one
// boundary arc over at both ends, the other under at both. The bigon is
// coherently oriented (matched) iff exactly one of its darts runs with its
// arc's flow.
std::optional<BigonInfo> read_bigon(const Diagram& d,
                                    const std::map<ArcId, ArcEnds>& at,
                                    const Face& f) {
  if (f.degree() != 2) return std::nullopt;
  Dart d0 = f.darts[0], d1 = f.darts[1];
  if (d0.c == d1.c) return std::nullopt;
  ArcId a0 = d.at(d0.c).arc[d0.port];
  ArcId a1 = d.at(d1.c).arc[d1.port];
  if (a0 == a1) return std::nullopt;
  auto arc_level = [&](ArcId a) {  // +1 over-over, -1 under-under, 0 mixed
    const ArcEnds& e = at.at(a);
    bool to = over_port(e.tail.port), ho = over_port(e.head.port);
    if (to && ho) return +1;
    if (!to && !ho) return -1;
    return 0;
  };
  int l0 = arc_level(a0), l1 = arc_level(a1);
  if (l0 * l1 != -1) return std::nullopt;
  BigonInfo b;
  b.c0 = d0.c;
  b.c1 = d1.c;
  b.over_dart = l0 > 0 ? d0 : d1;
  b.under_dart = l0 > 0 ? d1 : d0;
  b.over_arc = l0 > 0 ? a0 : a1;
  b.under_arc = l0 > 0 ? a1 : a0;
  b.matched = with_flow(d, d0) != with_flow(d, d1);
  return b;
}

struct TrigonInfo {
  std::array<CrossingId, 3> c;
  std::array<int, 3> arrive, depart;  // ports a_i, b_i = a_i + 1 ccw
  std::array<ArcId, 3> side;          // side[i] joins c[i] to c[i+1]
};

// Reads a face as a legal RIII triangle: three distinct crossings, three
// distinct side arcs, and among the sides one over-over and one under-under
// (the third is then mixed).
std::optional<TrigonInfo> read_trigon(const Diagram& d, const Face& f) {
  if (f.degree() != 3) return std::nullopt;
  TrigonInfo t;
  for (int i = 0; i < 3; ++i) {
    t.c[i] = f.darts[i].c;
    t.depart[i] = f.darts[i].port;
    t.arrive[i] = (f.darts[i].port + 3) % 4;
    t.side[i] = d.at(t.c[i]).arc[t.depart[i]];
  }
  if (t.c[0] == t.c[1] || t.c[0] == t.c[2] || t.c[1] == t.c[2])
    return std::nullopt;
  if (t.side[0] == t.side[1] || t.side[0] == t.side[2] ||
      t.side[1] == t.side[2])
    return std::nullopt;
  bool over_over = false, under_under = false;
  for (int i = 0; i < 3; ++i) {
    bool e1 = over_port(t.depart[i]);
    bool e2 = over_port(t.arrive[(i + 1) % 3]);
    if (e1 && e2) over_over = true;
    if (!e1 && !e2) under_under = true;
  }
  if (!over_over || !under_under) return std::nullopt;
  return t;
}

ApplyResult apply_r1_delete(const Diagram& d, const MoveRecord& r) {
  if (r.crossings.size() != 1) throw MoveError("RI- names exactly one crossing");
  CrossingId c = r.crossings[0];
  auto it = d.crossings.find(c);
  if (it == d.crossings.end()) throw MoveError("no crossing " + num(c));
  auto curl = find_curl(it->second);
  if (!curl) throw MoveError("no curl at crossing " + num(c));
  if (r.sign != 0 && r.sign != curl->sign)
    throw MoveError("curl at crossing " + num(c) + " has sign " +
                    (curl->sign > 0 ? std::string("+") : std::string("-")));
  ArcId loop_arc = it->second.arc[curl->t];
  auto sp = splice_out(d, {{c, pass_through_plan()}});

  ApplyResult res;
  res.d = std::move(sp.d);
  res.applied = r;
  res.applied.sign = curl->sign;
  res.applied.loop_left = curl->left;
  res.inverse.kind = MoveKind::R1Create;
  res.inverse.sign = curl->sign;
  res.inverse.loop_left = curl->left;
  res.inverse.arc1 = sp.merged_into.at(loop_arc);
  return res;
}

ApplyResult apply_r1_create(const Diagram& d, const MoveRecord& r) {
  if (r.sign != 1 && r.sign != -1) throw MoveError("RI+ needs sign + or -");
  Diagram nd = d;
  CurlBuild b = curl_build(r.sign, r.loop_left);
  Crossing c;
  c.over_in = b.over_in;
  if (r.arc1 == 0) {
    if (nd.free_loops < 1) throw MoveError("RI+ on a free loop needs one");
    nd.free_loops -= 1;
    ArcId e = nd.alloc_arc();
    c.arc[b.entry] = c.arc[b.exit] = e;
  } else {
    auto at = arc_table(d);
    auto ends = at.find(r.arc1);
    if (ends == at.end()) throw MoveError("no arc " + num(r.arc1));
    ArcId n = nd.alloc_arc();
    c.arc[b.entry] = r.arc1;
    c.arc[b.exit] = n;
    nd.at(ends->second.head.crossing).arc[ends->second.head.port] = n;
  }
  ArcId lp = nd.alloc_arc();
  c.arc[b.loop_tail] = c.arc[b.loop_head] = lp;
  CrossingId nc = nd.alloc_crossing();
  nd.crossings.emplace(nc, c);

  ApplyResult res;
  res.d = std::move(nd);
  res.applied = r;
  res.applied.crossings = {nc};
  res.inverse.kind = MoveKind::R1Delete;
  res.inverse.sign = r.sign;
  res.inverse.loop_left = r.loop_left;
  res.inverse.crossings = {nc};
  return res;
}

ApplyResult apply_r2_delete(const Diagram& d, const MoveRecord& r) {
  if (r.crossings.size() != 2 || r.crossings[0] == r.crossings[1])
    throw MoveError("RII- names two distinct crossings");
  for (CrossingId c : r.crossings)
    if (!d.crossings.count(c)) throw MoveError("no crossing " + num(c));
  std::set<CrossingId> want(r.crossings.begin(), r.crossings.end());
  auto at = arc_table(d);
  std::optional<BigonInfo> found;
  for (const Face& f : faces(d)) {
    auto b = read_bigon(d, at, f);
    if (!b || std::set<CrossingId>{b->c0, b->c1} != want) continue;
    if (b->matched != r.matched) continue;
    found = b;
    break;
  }
  if (!found)
    throw MoveError("no " + std::string(r.matched ? "matched" : "unmatched") +
                    " bigon over crossings " + num(r.crossings[0]) + ", " +
                    num(r.crossings[1]));
  auto sp = splice_out(
      d, {{r.crossings[0], pass_through_plan()},
          {r.crossings[1], pass_through_plan()}});

  ApplyResult res;
  res.d = std::move(sp.d);
  res.applied = r;
  res.inverse.kind = MoveKind::R2Create;
  res.inverse.arc1 = sp.merged_into.at(found->over_arc);
  res.inverse.side1_left = with_flow(d, found->over_dart);
  res.inverse.arc2 = sp.merged_into.at(found->under_arc);
  res.inverse.side2_left = with_flow(d, found->under_dart);
  return res;
}

// compass directions in counterclockwise order
constexpr int kS = 0, kE = 1, kN = 2, kW = 3;

// ports of a crossing whose under-strand enters at compass u: port of
// compass direction dir is the counterclockwise distance from u
std::array<int, 4> ports_from(int u) {
  std::array<int, 4> port{};
  for (int k = 0; k < 4; ++k) port[(u + k) % 4] = k;
  return port;
}

// Pushes arc1 across arc2 ("finger move"): two new crossings x (west) and y
// (east) appear, arc1 passing over both. The local picture has arc1 drawn
// along the bottom with its site dart pointing east and arc2 along the top
// pointing west; side flags say whether each dart runs with its arc's flow.
ApplyResult apply_r2_create(const Diagram& d, const MoveRecord& r) {
  if (r.arc1 == r.arc2 && r.arc1 != 0)
    throw MoveError("pushing an arc across itself is not supported");
  auto at = arc_table(d);
  int loops_needed = (r.arc1 == 0) + (r.arc2 == 0);
  if (d.free_loops < loops_needed)
    throw MoveError("RII+ names more free loops than the diagram has");
  for (ArcId a : {r.arc1, r.arc2})
    if (a != 0 && !at.count(a)) throw MoveError("no arc " + num(a));

  auto dart_of = [&](ArcId a, bool left) {
    const ArcEnds& e = at.at(a);
    return left ? Dart{e.tail.crossing, e.tail.port}
                : Dart{e.head.crossing, e.head.port};
  };
  if (r.arc1 != 0 && r.arc2 != 0) {
    Dart d1 = dart_of(r.arc1, r.side1_left);
    Dart d2 = dart_of(r.arc2, r.side2_left);
    bool together = false;
    for (const Face& f : faces(d)) {
      bool h1 = std::find(f.darts.begin(), f.darts.end(), d1) != f.darts.end();
      if (!h1) continue;
      together =
          std::find(f.darts.begin(), f.darts.end(), d2) != f.darts.end();
      break;
    }
    if (!together)
      throw MoveError("arcs " + num(r.arc1) + " and " + num(r.arc2) +
                      " do not bound a common face on those sides");
  }

  Diagram nd = d;
  nd.free_loops -= loops_needed;
  // faces sit to the right of their boundary darts, so the chosen darts point
  // west along the bottom and east along the top; flow runs the other way
  // when the tail dart (side=true) was picked
  bool east1 = !r.side1_left;  // arc1's flow runs east in the local picture
  bool west2 = !r.side2_left;  // arc2's flow runs west
  // entry compass of each strand at each crossing
  int s1_x = east1 ? kS : kN, s1_y = east1 ? kN : kS;
  int s2_x = west2 ? kE : kW, s2_y = west2 ? kE : kW;
  auto px = ports_from(s2_x);  // arc2 is the under strand
  auto py = ports_from(s2_y);

  ArcId f_top = nd.alloc_arc();
  ArcId h_mid = nd.alloc_arc();
  ArcId f_w, f_e;
  if (r.arc1 == 0) {
    f_w = f_e = nd.alloc_arc();
  } else {
    ArcId fresh = nd.alloc_arc();
    f_w = east1 ? r.arc1 : fresh;
    f_e = east1 ? fresh : r.arc1;
    const ArcEnds& e1 = at.at(r.arc1);
    nd.at(e1.head.crossing).arc[e1.head.port] = fresh;
  }
  ArcId h_w, h_e;
  if (r.arc2 == 0) {
    h_w = h_e = nd.alloc_arc();
  } else {
    ArcId fresh = nd.alloc_arc();
    h_e = west2 ? r.arc2 : fresh;
    h_w = west2 ? fresh : r.arc2;
    const ArcEnds& e2 = at.at(r.arc2);
    nd.at(e2.head.crossing).arc[e2.head.port] = fresh;
  }

  Crossing cx, cy;
  cx.over_in = px[s1_x];
  cy.over_in = py[s1_y];
  cx.arc[px[kN]] = f_top;
  cx.arc[px[kS]] = f_w;
  cx.arc[px[kE]] = h_mid;
  cx.arc[px[kW]] = h_w;
  cy.arc[py[kN]] = f_top;
  cy.arc[py[kS]] = f_e;
  cy.arc[py[kE]] = h_e;
  cy.arc[py[kW]] = h_mid;
  CrossingId x = nd.alloc_crossing();
  CrossingId y = nd.alloc_crossing();
  nd.crossings.emplace(x, cx);
  nd.crossings.emplace(y, cy);

  // classify the created bigon (the face between f_top and h_mid)
  auto nat = arc_table(nd);
  std::optional<BigonInfo> created;
  for (const Face& f : faces(nd)) {
    auto b = read_bigon(nd, nat, f);
    if (b && ((b->over_arc == f_top && b->under_arc == h_mid))) {
      created = b;
      break;
    }
  }
  if (!created) throw MoveError("internal: RII+ failed to form a bigon");

  ApplyResult res;
  res.d = std::move(nd);
  res.applied = r;
  res.applied.crossings = {x, y};
  res.applied.matched = created->matched;
  res.inverse.kind = MoveKind::R2Delete;
  res.inverse.crossings = {x, y};
  res.inverse.matched = created->matched;
  return res;
}

ApplyResult apply_r3(const Diagram& d, const MoveRecord& r) {
  if (r.crossings.size() != 3) throw MoveError("RIII names three crossings");
  std::set<CrossingId> want(r.crossings.begin(), r.crossings.end());
  if (want.size() != 3) throw MoveError("RIII needs three distinct crossings");
  for (CrossingId c : want)
    if (!d.crossings.count(c)) throw MoveError("no crossing " + num(c));
  std::optional<TrigonInfo> found;
  for (const Face& f : faces(d)) {
    auto t = read_trigon(d, f);
    if (!t || std::set<CrossingId>{t->c[0], t->c[1], t->c[2]} != want) continue;
    found = t;
    break;
  }
  if (!found)
    throw MoveError("no slidable triangle over crossings " +
                    num(r.crossings[0]) + ", " + num(r.crossings[1]) + ", " +
                    num(r.crossings[2]));

  // Slide the triangle across: every strand's entry and exit ports at each
  // corner move to the diagonally opposite pair, so side arcs reverse
  // direction around the triangle and external arcs shift one corner over.
  const TrigonInfo& t = *found;
  Diagram nd = d;
  for (int i = 0; i < 3; ++i) {
    int prev = (i + 2) % 3, next = (i + 1) % 3;
    Crossing& c = nd.at(t.c[i]);
    c.arc[t.arrive[i]] = d.at(t.c[prev]).arc[(t.depart[prev] + 2) % 4];
    c.arc[t.depart[i]] = d.at(t.c[next]).arc[(t.arrive[next] + 2) % 4];
    c.arc[(t.arrive[i] + 2) % 4] = t.side[prev];
    c.arc[(t.depart[i] + 2) % 4] = t.side[i];
  }

  ApplyResult res;
  res.d = std::move(nd);
  res.applied = r;
  res.inverse = r;
  return res;
}

}  // namespace

int MoveTally::total() const {
  return r1_create_pos + r1_create_neg + r1_delete_pos + r1_delete_neg +
         r2_create_matched + r2_create_unmatched + r2_delete_matched +
         r2_delete_unmatched + r3;
}

void MoveTally::add(const MoveRecord& r) {
  switch (r.kind) {
    case MoveKind::R1Create:
      (r.sign > 0 ? r1_create_pos : r1_create_neg)++;
      break;
    case MoveKind::R1Delete:
      (r.sign > 0 ? r1_delete_pos : r1_delete_neg)++;
      break;
    case MoveKind::R2Create:
      (r.matched ? r2_create_matched : r2_create_unmatched)++;
      break;
    case MoveKind::R2Delete:
      (r.matched ? r2_delete_matched : r2_delete_unmatched)++;
      break;
    case MoveKind::R3:
      r3++;
      break;
  }
}

ApplyResult apply_move(const Diagram& d, const MoveRecord& r) {
  switch (r.kind) {
    case MoveKind::R1Delete: return apply_r1_delete(d, r);
    case MoveKind::R1Create: return apply_r1_create(d, r);
    case MoveKind::R2Delete: return apply_r2_delete(d, r);
    case MoveKind::R2Create: return apply_r2_create(d, r);
    case MoveKind::R3: return apply_r3(d, r);
  }
  throw MoveError("unknown move kind");
}

std::vector<MoveRecord> enumerate_moves(const Diagram& d) {
  std::vector<MoveRecord> out;
  auto at = arc_table(d);
  auto fs = faces(d);
  for (const Face& f : fs) {
    if (f.degree() == 1) {
      Dart k = f.darts[0];
      CurlInfo info = classify_curl((k.port + 3) % 4);
      MoveRecord r;
      r.kind = MoveKind::R1Delete;
      r.sign = info.sign;
      r.loop_left = info.left;
      r.crossings = {k.c};
      out.push_back(r);
    } else if (f.degree() == 2) {
      auto b = read_bigon(d, at, f);
      if (!b) continue;
      MoveRecord r;
      r.kind = MoveKind::R2Delete;
      r.crossings = {b->c0, b->c1};
      r.matched = b->matched;
      out.push_back(r);
    } else if (f.degree() == 3) {
      auto t = read_trigon(d, f);
      if (!t) continue;
      MoveRecord r;
      r.kind = MoveKind::R3;
      r.crossings = {t->c[0], t->c[1], t->c[2]};
      out.push_back(r);
    }
  }
  for (const auto& [a, ends] : at) {
    for (int sign : {+1, -1}) {
      for (bool left : {true, false}) {
        MoveRecord r;
        r.kind = MoveKind::R1Create;
        r.sign = sign;
        r.loop_left = left;
        r.arc1 = a;
        out.push_back(r);
      }
    }
  }
  for (const Face& f : fs) {
    for (std::size_t i = 0; i < f.degree(); ++i) {
      for (std::size_t j = 0; j < f.degree(); ++j) {
        if (i == j) continue;
        ArcId ai = d.at(f.darts[i].c).arc[f.darts[i].port];
        ArcId aj = d.at(f.darts[j].c).arc[f.darts[j].port];
        if (ai == aj) continue;
        MoveRecord r;
        r.kind = MoveKind::R2Create;
        r.arc1 = ai;
        r.side1_left = with_flow(d, f.darts[i]);
        r.arc2 = aj;
        r.side2_left = with_flow(d, f.darts[j]);
        out.push_back(r);
      }
    }
  }
  return out;
}

bool classify_r2(const Diagram& d, CrossingId x, CrossingId y) {
  auto at = arc_table(d);
  std::set<CrossingId> want{x, y};
  for (const Face& f : faces(d)) {
    auto b = read_bigon(d, at, f);
    if (b && std::set<CrossingId>{b->c0, b->c1} == want) return b->matched;
  }
  throw MoveError("no deletable bigon over crossings " + num(x) + ", " + num(y));
}

ReplayResult replay(const Diagram& d, const std::vector<MoveRecord>& moves) {
  ReplayResult res{d, {}};
  for (std::size_t i = 0; i < moves.size(); ++i) {
    try {
      auto step = apply_move(res.final, moves[i]);
      res.final = std::move(step.d);
      res.tally.add(step.applied);
    } catch (const MoveError& e) {
      throw MoveError(e.what(), int(i));
    }
  }
  return res;
}

std::string render_move(const MoveRecord& r) {
  std::ostringstream out;
  auto sign_str = [&] { return r.sign > 0 ? "+" : "-"; };
  switch (r.kind) {
    case MoveKind::R1Delete:
      out << "RI-";
      if (r.sign != 0) out << " sign=" << sign_str();
      out << " at=" << (r.crossings.empty() ? 0 : r.crossings[0]);
      break;
    case MoveKind::R1Create:
      out << "RI+ sign=" << sign_str() << " side=" << (r.loop_left ? "L" : "R")
          << " at=" << r.arc1;
      break;
    case MoveKind::R2Delete:
      out << "RII- class=" << (r.matched ? "matched" : "unmatched") << " at=";
      for (std::size_t i = 0; i < r.crossings.size(); ++i)
        out << (i ? " " : "") << r.crossings[i];
      break;
    case MoveKind::R2Create:
      out << "RII+ over=" << r.arc1 << "/" << (r.side1_left ? "L" : "R")
          << " under=" << r.arc2 << "/" << (r.side2_left ? "L" : "R");
      break;
    case MoveKind::R3:
      out << "RIII at=";
      for (std::size_t i = 0; i < r.crossings.size(); ++i)
        out << (i ? " " : "") << r.crossings[i];
      break;
  }
  return out.str();
}

std::string render_moves(const std::vector<MoveRecord>& moves) {
  std::string out;
  for (const MoveRecord& r : moves) out += render_move(r) + "\n";
  return out;
}

namespace {

int parse_sign_token(const std::string& v, int line) {
  if (v == "+" || v == "+1") return +1;
  if (v == "-" || v == "-1") return -1;
  throw ParseError("sign must be + or -, got '" + v + "'", line);
}

bool parse_side_token(const std::string& v, int line) {
  if (v == "L") return true;
  if (v == "R") return false;
  throw ParseError("side must be L or R, got '" + v + "'", line);
}

std::uint32_t parse_id(const std::string& v, int line) {
  try {
    size_t used = 0;
    long long x = std::stoll(v, &used);
    if (used != v.size() || x < 0) throw std::invalid_argument(v);
    return std::uint32_t(x);
  } catch (const std::exception&) {
    throw ParseError("bad id '" + v + "'", line);
  }
}

// "arc/side" pair used by RII+ operands
std::pair<ArcId, bool> parse_site(const std::string& v, int line) {
  auto slash = v.find('/');
  if (slash == std::string::npos)
    throw ParseError("expected <arc>/<L|R>, got '" + v + "'", line);
  return {parse_id(v.substr(0, slash), line),
          parse_side_token(v.substr(slash + 1), line)};
}

}  // namespace

std::vector<MoveRecord> parse_moves(const std::string& text) {
  std::vector<MoveRecord> out;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::string head;
    if (!(ls >> head)) continue;

    MoveRecord r;
    bool need_sign = false, need_side = false, need_class = false;
    bool need_sites = false;
    std::size_t want_ids = 0;
    if (head == "RI-") {
      r.kind = MoveKind::R1Delete;
      want_ids = 1;
    } else if (head == "RI+") {
      r.kind = MoveKind::R1Create;
      want_ids = 1;
      need_sign = need_side = true;
    } else if (head == "RII-") {
      r.kind = MoveKind::R2Delete;
      want_ids = 2;
      need_class = true;
    } else if (head == "RII+") {
      r.kind = MoveKind::R2Create;
      need_sites = true;
    } else if (head == "RIII") {
      r.kind = MoveKind::R3;
      want_ids = 3;
    } else {
      throw ParseError("unknown move '" + head + "'", line);
    }

    std::vector<std::uint32_t> ids;
    bool in_at = false;
    bool saw_sign = false, saw_side = false, saw_class = false;
    bool saw_over = false, saw_under = false;
    std::string tok;
    while (ls >> tok) {
      auto eq = tok.find('=');
      if (eq == std::string::npos) {
        if (!in_at) throw ParseError("unexpected token '" + tok + "'", line);
        ids.push_back(parse_id(tok, line));
        continue;
      }
      std::string key = tok.substr(0, eq), value = tok.substr(eq + 1);
      in_at = false;
      if (key == "at") {
        ids.push_back(parse_id(value, line));
        in_at = true;
      } else if (key == "sign") {
        r.sign = parse_sign_token(value, line);
        saw_sign = true;
      } else if (key == "side") {
        r.loop_left = parse_side_token(value, line);
        saw_side = true;
      } else if (key == "class") {
        if (value == "matched")
          r.matched = true;
        else if (value == "unmatched")
          r.matched = false;
        else
          throw ParseError("class must be matched or unmatched", line);
        saw_class = true;
      } else if (key == "over") {
        std::tie(r.arc1, r.side1_left) = parse_site(value, line);
        saw_over = true;
      } else if (key == "under") {
        std::tie(r.arc2, r.side2_left) = parse_site(value, line);
        saw_under = true;
      } else {
        throw ParseError("unknown key '" + key + "'", line);
      }
    }
    if (need_sign && !saw_sign) throw ParseError("missing sign=", line);
    if (need_side && !saw_side) throw ParseError("missing side=", line);
    if (need_class && !saw_class) throw ParseError("missing class=", line);
    if (need_sites && (!saw_over || !saw_under))
      throw ParseError("RII+ needs over= and under=", line);
    if (r.kind == MoveKind::R1Create) {
      if (ids.size() != 1) throw ParseError("RI+ needs at=<arc>", line);
      r.arc1 = ids[0];
    } else if (want_ids != 0) {
      if (ids.size() != want_ids)
        throw ParseError(head + " needs " + std::to_string(want_ids) +
                             " crossing ids",
                         line);
      r.crossings = ids;
    } else if (!ids.empty()) {
      throw ParseError("unexpected at= ids", line);
    }
    out.push_back(r);
  }
  return out;
}

}  // namespace knots
