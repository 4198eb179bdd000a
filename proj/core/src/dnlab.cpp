#include "knots/dnlab.hpp"

#include <map>
#include <memory>
#include <sstream>

#include <nlohmann/json.hpp>

#include "knots/braid.hpp"
#include "knots/invariants.hpp"

namespace knots {

namespace {

[[noreturn]] void fail(const std::string& what) {
  throw Error("dn report cross-check failed: " + what);
}

void require(bool ok, const std::string& what) {
  if (!ok) fail(what);
}

std::string quarter_str(long long q) {
  if (q % 4 == 0) return std::to_string(q / 4);
  if (q % 2 == 0) return std::to_string(q / 2) + "/2";
  return std::to_string(q) + "/4";
}

// T(2,1) # mirror is the unknot, so those census ids name the same link
bool same_link(const CensusId& a, const CensusId& b) {
  auto canon = [](const CensusId& id) {
    if (id.tag == CensusTag::T2Composite && id.param == 1) return census_unknot();
    if (id.tag == CensusTag::Unlink && id.param == 1) return census_unknot();
    CensusId c = id;
    c.fingerprint = LaurentPoly();
    return c;
  };
  return canon(a) == canon(b);
}

UOracle census_oracle(const std::vector<CensusEntry>& census, bool flag) {
  auto table = std::make_shared<std::map<CrossingId, UInterval>>();
  for (const CensusEntry& e : census)
    (*table)[e.crossing] = u_table(e.identified, flag);
  return [table](const Diagram&, CrossingId at) {
    auto it = table->find(at);
    if (it == table->end())
      throw DiagramError("census has no entry for crossing " + std::to_string(at));
    return it->second;
  };
}

}  // namespace

Diagram dn_diagram(int n) { return closure(dn_word(n)); }

std::vector<MoveRecord> unknotting_sequence(int n) {
  Braid w = dn_word(n);
  std::vector<MoveRecord> seq;
  while (w.strands > 2) {
    ReductionStep step = reduce_once(w);
    seq.insert(seq.end(), step.moves.begin(), step.moves.end());
    w = std::move(step.word);
  }
  // w is now s1^-n s1^n on 2 strands; cancel pairs inside out
  if (static_cast<int>(w.letters.size()) != 2 * n)
    throw Error("dn sequence: unexpected terminal word " + render_braid(w));
  for (int i = 0; i < n; ++i) {
    MoveRecord r;
    r.kind = MoveKind::R2Delete;
    r.crossings = {w.letters[n - 1 - i].id, w.letters[n + i].id};
    r.matched = true;  // replay verifies the class
    seq.push_back(r);
  }
  return seq;
}

std::vector<CensusEntry> dn_census(int n, bool assume_conjecture, const DnCaps& caps) {
  if (n > caps.census_n)
    throw CapError("census capped at n <= " + std::to_string(caps.census_n));
  Braid w = dn_word(n);
  Diagram d = closure(w);
  CensusFamily fam = census_family(n, caps.bracket_cap);
  if (!family_distinct(fam))
    throw Error("census family fingerprints collide at max_k=" + std::to_string(n));
  std::vector<CensusEntry> out;
  const int staircase = 2 * n - 1;  // letters beyond this are the sn^n block
  for (int pos = 0; pos < static_cast<int>(w.letters.size()); ++pos) {
    const Letter& letter = w.letters[pos];
    CensusEntry e;
    e.crossing = letter.id;
    e.sign = crossing_sign(d, letter.id);
    e.predicted = pos < staircase ? census_t2(letter.index) : census_unknot();
    Diagram sm = smooth(d, letter.id);
    e.smoothed_components = components(sm).count;
    e.identified = identify_link(fam, sm);
    if (!same_link(e.identified, e.predicted))
      throw Error("census mismatch at crossing " + std::to_string(letter.id) +
                  ": predicted " + e.predicted.str() + ", identified " +
                  e.identified.str());
    e.u = u_table(e.identified, assume_conjecture);
    out.push_back(std::move(e));
  }
  return out;
}

DnReport dn_report(int n, bool assume_conjecture, const DnCaps& caps) {
  if (n < 1) throw DiagramError("dn report needs n >= 1");
  if (n > caps.verify_n)
    throw CapError("dn verification capped at n <= " + std::to_string(caps.verify_n));
  DnReport r;
  r.n = n;
  r.assume_conjecture = assume_conjecture;

  Diagram d = dn_diagram(n);
  r.crossings = static_cast<int>(d.crossings.size());
  for (const auto& [id, c] : d.crossings) (sign_of(c) > 0 ? r.positive : r.negative)++;
  r.writhe_value = writhe(d);
  r.components = components(d).count;
  require(r.crossings == 3 * n - 1 && r.positive == 2 * n - 1 && r.negative == n,
          "crossing counts");
  require(r.writhe_value == n - 1, "writhe");
  require(r.components == 2, "component count");

  std::vector<MoveRecord> seq = unknotting_sequence(n);
  ReplayResult rep = replay(d, seq);
  require(rep.final.crossings.empty() && rep.final.free_loops == 2,
          "sequence must end at the crossing-free 2-component picture");
  r.sequence_length = seq.size();
  r.tally = rep.tally;
  MoveTally expect;
  expect.r1_delete_pos = n - 1;
  expect.r2_delete_matched = n;
  expect.r3 = n * (n - 1) / 2;
  require(r.tally == expect, "sequence tally");
  require(static_cast<long long>(r.sequence_length) == (1LL * n * n + 3 * n - 2) / 2,
          "sequence length");

  r.census = dn_census(n, assume_conjecture, caps);
  require(static_cast<int>(r.census.size()) == r.crossings, "census size");

  UOracle on = census_oracle(r.census, true);
  UOracle off = census_oracle(r.census, false);
  const UInterval u_link = UInterval::exact(0);  // pinned by the replayed sequence

  IuValue iu_on = iu(d, on, u_link);
  IuValue iu_off = iu(d, off, u_link);
  IuValue pp_on = iu_eps_delta(d, +1, +1, on, u_link);
  IuValue pp_off = iu_eps_delta(d, +1, +1, off, u_link);

  // closed form: doubled staircase sum plus the lone top term
  auto closed = [n](bool flag) {
    UInterval cf = UInterval::exact(0);
    for (int k = 1; k < n; ++k) cf = add(cf, scale(u_table(census_t2(k), flag), 2));
    return add(cf, u_table(census_t2(n), flag));
  };
  auto displayed = [n](bool flag) {
    UInterval s = UInterval::exact(0);
    for (int k = 1; k < n; ++k) s = add(s, u_table(census_t2(k), flag));
    return add(s, u_table(census_t2(n), flag));
  };
  require(iu_on.total == IuInterval::from_u(closed(true)),
          "crossing-wise iu vs closed form (conjectural)");
  require(iu_off.total == IuInterval::from_u(closed(false)),
          "crossing-wise iu vs closed form (certified)");
  require(iu_on.total == IuInterval::exact2(2LL * n * (n - 1)),
          "conjectural iu must equal n^2-n");
  require(iu_off.total.hi2 == iu_on.total.hi2, "iu upper ends must agree");
  if (n >= 2) {
    long long est = n % 2 == 0 ? 1LL * n * n + 4 * n - 8 : 1LL * n * n + 4 * n - 9;
    require(iu_off.total.lo2 == est, "certified iu lower end vs parity estimate");
  }
  require(pp_on.total == iu_on.total + IuInterval::exact2(6LL * n - 4),
          "(+1,+1) shift");

  IuValue zero;
  zero.total = IuInterval::exact2(0);
  r.bound_all_conjectural = move_lower_bound(pp_on, zero, BoundMode::AllMoves);
  r.bound_all_certified = move_lower_bound(pp_off, zero, BoundMode::AllMoves);
  long long len4 = 4 * static_cast<long long>(r.sequence_length);
  require(r.bound_all_conjectural.lo4 == 2LL * (n * n + 2 * n - 2),
          "conjectural all-move bound formula");
  require(r.bound_all_conjectural.lo4 <= len4 && r.bound_all_certified.lo4 <= len4,
          "all-move bounds must not exceed the sequence length");

  SplitPartition split{{0}, {1}};
  IuValue sp_on = iu_split(d, split, on);
  IuValue sp_off = iu_split(d, split, off);
  r.split_conjectural = move_lower_bound(sp_on, zero, BoundMode::MatchedR2AndR3);
  r.split_certified = move_lower_bound(sp_off, zero, BoundMode::MatchedR2AndR3);
  require(r.split_conjectural.lo4 ==
              (n % 2 == 0 ? 1LL * n * n - 2 * n : 1LL * n * n - 2 * n + 1),
          "conjectural split bound formula");
  require(r.split_certified.lo4 >= 4LL * (n - 2), "certified split bound vs n-2");
  require(r.split_conjectural.lo4 <= len4 && r.split_certified.lo4 <= len4,
          "split bounds must not exceed the sequence length");

  r.iu_total = (assume_conjecture ? iu_on : iu_off).total;
  r.iu_pp = (assume_conjecture ? pp_on : pp_off).total;
  r.sigma_consistent = IuInterval::from_u(closed(assume_conjecture));
  r.sigma_displayed = IuInterval::from_u(displayed(assume_conjecture));
  require(r.sigma_consistent == r.iu_total, "consistent sigma reading vs iu");
  return r;
}

namespace {

std::string bound_str(const MoveBound& b) {
  std::ostringstream os;
  os << ">= " << quarter_str(b.lo4);
  if (b.hi4) os << "  (gap/2 in [" << quarter_str(b.lo4) << ',' << quarter_str(*b.hi4) << "])";
  os << ", so at least " << b.certified_moves() << " move"
     << (b.certified_moves() == 1 ? "" : "s");
  return os.str();
}

}  // namespace

std::string report_table(const DnReport& r) {
  std::ostringstream os;
  os << "D_" << r.n << " report  ("
     << (r.assume_conjecture ? "assuming the odd-torus conjecture" : "certified intervals only")
     << ")\n";
  os << "  crossings " << r.crossings << " (" << r.positive << " positive, "
     << r.negative << " negative), writhe " << r.writhe_value << ", components "
     << r.components << "\n";
  os << "  unknotting sequence: " << r.sequence_length << " moves verified  [RI- "
     << r.tally.r1_delete_pos + r.tally.r1_delete_neg << ", RII- matched "
     << r.tally.r2_delete_matched << ", RIII " << r.tally.r3 << "]\n";
  os << "  census:\n";
  for (const CensusEntry& e : r.census)
    os << "    crossing " << e.crossing << "  sign " << (e.sign > 0 ? '+' : '-')
       << "  smooths to " << e.identified.str() << "  u " << e.u.str() << "\n";
  os << "  iu            " << r.iu_total.str() << "\n";
  os << "  iu_{+1,+1}    " << r.iu_pp.str() << "\n";
  os << "  sigma (displayed reading)  " << r.sigma_displayed.str() << "\n";
  os << "  sigma (consistent reading) " << r.sigma_consistent.str() << "\n";
  os << "  all-move bound, conjectural: " << bound_str(r.bound_all_conjectural) << "\n";
  os << "  all-move bound, certified:   " << bound_str(r.bound_all_certified) << "\n";
  os << "  split bound, conjectural:    " << bound_str(r.split_conjectural) << "\n";
  os << "  split bound, certified:      " << bound_str(r.split_certified) << "\n";
  return os.str();
}

namespace {

nlohmann::json interval_json(const UInterval& u) {
  nlohmann::json j;
  j["lo"] = u.lo;
  if (u.hi)
    j["hi"] = *u.hi;
  else
    j["hi"] = nullptr;
  return j;
}

nlohmann::json iu_json(const IuInterval& v) {
  nlohmann::json j;
  if (v.lo2)
    j["lo2"] = *v.lo2;
  else
    j["lo2"] = nullptr;
  if (v.hi2)
    j["hi2"] = *v.hi2;
  else
    j["hi2"] = nullptr;
  j["text"] = v.str();
  return j;
}

nlohmann::json bound_json(const MoveBound& b) {
  nlohmann::json j;
  j["mode"] = b.mode == BoundMode::AllMoves ? "all-moves" : "matched-r2-and-r3";
  j["lo4"] = b.lo4;
  if (b.hi4)
    j["hi4"] = *b.hi4;
  else
    j["hi4"] = nullptr;
  j["certified_moves"] = b.certified_moves();
  return j;
}

}  // namespace

std::string report_json(const DnReport& r) {
  nlohmann::json j;
  j["n"] = r.n;
  j["assume_conjecture"] = r.assume_conjecture;
  j["crossings"] = {{"total", r.crossings}, {"positive", r.positive}, {"negative", r.negative}};
  j["writhe"] = r.writhe_value;
  j["components"] = r.components;
  j["sequence"] = {{"length", r.sequence_length},
                   {"r1_delete", r.tally.r1_delete_pos + r.tally.r1_delete_neg},
                   {"r2_delete_matched", r.tally.r2_delete_matched},
                   {"r3", r.tally.r3}};
  nlohmann::json census = nlohmann::json::array();
  for (const CensusEntry& e : r.census) {
    nlohmann::json je;
    je["crossing"] = e.crossing;
    je["sign"] = e.sign;
    je["predicted"] = e.predicted.str();
    je["identified"] = e.identified.str();
    je["smoothed_components"] = e.smoothed_components;
    je["u"] = interval_json(e.u);
    census.push_back(std::move(je));
  }
  j["census"] = std::move(census);
  j["iu"] = iu_json(r.iu_total);
  j["iu_pp"] = iu_json(r.iu_pp);
  j["sigma_displayed"] = iu_json(r.sigma_displayed);
  j["sigma_consistent"] = iu_json(r.sigma_consistent);
  j["bound_all_conjectural"] = bound_json(r.bound_all_conjectural);
  j["bound_all_certified"] = bound_json(r.bound_all_certified);
  j["split_conjectural"] = bound_json(r.split_conjectural);
  j["split_certified"] = bound_json(r.split_certified);
  return j.dump(2);
}

}  // namespace knots
