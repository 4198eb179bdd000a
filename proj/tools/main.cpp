#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "knots/braid.hpp"
#include "knots/codec.hpp"
#include "knots/diagram.hpp"
#include "knots/dnlab.hpp"
#include "knots/fuzz.hpp"
#include "knots/hn.hpp"
#include "knots/invariants.hpp"
#include "knots/moves.hpp"
#include "knots/unknotting.hpp"

using namespace knots;
using nlohmann::json;

namespace {

// exit codes: 0 success, 1 property/bound violation, 2 input error, 3 cap hit
constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;
constexpr int kExitCap = 3;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void spill(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path);
  out << content;
}

Diagram load_diagram(const std::string& path) {
  std::string text = slurp(path);
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return decode_json(text);
  return decode_text(text);
}

json interval_json(const UInterval& u) {
  json j;
  j["lo"] = u.lo;
  j["hi"] = u.hi ? json(*u.hi) : json(nullptr);
  j["text"] = u.str();
  return j;
}

json iu_interval_json(const IuInterval& v) {
  json j;
  j["lo2"] = v.lo2 ? json(*v.lo2) : json(nullptr);
  j["hi2"] = v.hi2 ? json(*v.hi2) : json(nullptr);
  j["text"] = v.str();
  return j;
}

json bound_json(const MoveBound& b) {
  json j;
  j["mode"] = b.mode == BoundMode::AllMoves ? "all-moves" : "matched-r2-and-r3";
  j["lo4"] = b.lo4;
  j["hi4"] = b.hi4 ? json(*b.hi4) : json(nullptr);
  j["certified_moves"] = b.certified_moves();
  return j;
}

int cmd_invariants(const std::string& path, const std::string& format, int cap) {
  Diagram d = load_diagram(path);
  LinkingInfo lk = linking(d);
  LaurentPoly fp = fingerprint(d, cap);
  int pos = 0, neg = 0;
  for (const auto& [id, c] : d.crossings) (sign_of(c) > 0 ? pos : neg)++;
  bool unlinkish = is_unlink_fingerprint(fp, lk.comps.count);
  if (format == "json") {
    json j;
    j["crossings"] = {{"total", d.crossings.size()}, {"positive", pos}, {"negative", neg}};
    j["free_loops"] = d.free_loops;
    j["components"] = lk.comps.count;
    j["writhe"] = writhe(d);
    j["linking"] = lk.lk;
    j["linking_total"] = lk.total();
    j["linking_total_abs"] = lk.total_abs();
    j["fingerprint"] = fp.str();
    j["unlink_fingerprint"] = unlinkish;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "crossings " << d.crossings.size() << " (" << pos << " positive, "
              << neg << " negative), free loops " << d.free_loops << "\n";
    std::cout << "components " << lk.comps.count << "\n";
    std::cout << "writhe " << writhe(d) << "\n";
    std::cout << "linking matrix:\n";
    for (const auto& row : lk.lk) {
      for (int v : row) std::cout << "  " << v;
      std::cout << "\n";
    }
    std::cout << "linking total " << lk.total() << ", total |lk| " << lk.total_abs()
              << "\n";
    std::cout << "fingerprint " << fp.str()
              << (unlinkish ? "  (matches the unlink)" : "") << "\n";
  }
  return 0;
}

int cmd_iu(const std::string& path, const std::string& format, bool conjecture,
           int cap, int riii_budget, long long subset_budget, int max_changes) {
  Diagram d = load_diagram(path);
  CensusFamily fam = census_family(8, cap);
  UOracle oracle = [&fam, conjecture](const Diagram& sm, CrossingId) {
    CensusId id = identify_link(fam, sm);
    if (id.tag == CensusTag::Unknown)
      return UInterval::at_least(u_lower_linking(sm));
    return u_table(id, conjecture);
  };
  SearchBudget budget;
  budget.max_changes = max_changes;
  budget.riii_budget = riii_budget;
  budget.max_subsets = subset_budget;
  budget.bracket_cap = cap;
  CensusId own = identify_link(fam, d);
  std::optional<CensusId> id;
  if (own.tag != CensusTag::Unknown) id = own;
  UInterval u_link = u_enclose(d, id, conjecture, budget);

  IuValue plain = iu(d, oracle, u_link);
  IuValue zero;
  zero.total = IuInterval::exact2(0);
  MoveBound plain_bound = move_lower_bound(plain, zero, BoundMode::MatchedR2AndR3);

  json j;
  j["diagram"] = {{"crossings", d.crossings.size()},
                  {"components", components(d).count},
                  {"identified", own.str()}};
  j["assume_conjecture"] = conjecture;
  j["u_link"] = interval_json(u_link);
  j["iu"] = iu_interval_json(plain.total);
  j["bound_matched_r2_r3"] = bound_json(plain_bound);
  json terms = json::array();
  for (const IuTerm& t : plain.terms) {
    json jt;
    jt["crossing"] = t.crossing;
    jt["sign"] = t.sign;
    jt["u"] = interval_json(t.u);
    jt["contribution"] = iu_interval_json(t.contribution);
    terms.push_back(std::move(jt));
  }
  j["terms"] = std::move(terms);
  json variants;
  for (int eps : {-1, 1})
    for (int delta : {-1, 1}) {
      IuValue v = iu_eps_delta(d, eps, delta, oracle, u_link);
      json jv;
      jv["total"] = iu_interval_json(v.total);
      jv["bound_all_moves"] = bound_json(move_lower_bound(v, zero, BoundMode::AllMoves));
      variants[(eps > 0 ? "+1," : "-1,") + std::string(delta > 0 ? "+1" : "-1")] =
          std::move(jv);
    }
  j["variants"] = std::move(variants);

  if (format == "json") {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "diagram: " << d.crossings.size() << " crossings, "
              << components(d).count << " components, identified " << own.str()
              << "\n";
    std::cout << "u(link) enclosure " << u_link.str() << "\n";
    std::cout << "iu " << plain.total.str() << "  (matched RII/RIII moves >= "
              << plain_bound.certified_moves() << ")\n";
    for (const IuTerm& t : plain.terms)
      std::cout << "  crossing " << t.crossing << "  sign "
                << (t.sign > 0 ? '+' : '-') << "  u " << t.u.str()
                << "  contribution " << t.contribution.str() << "\n";
    for (auto& [name, jv] : j["variants"].items())
      std::cout << "iu_{" << name << "} " << jv["total"]["text"].get<std::string>()
                << "  (all moves >= " << jv["bound_all_moves"]["certified_moves"]
                << ")\n";
  }
  return 0;
}

int cmd_verify(const std::string& diagram_path, const std::string& moves_path,
               const std::string& witness_path, const std::string& format) {
  Diagram d = load_diagram(diagram_path);
  ReplayResult res;
  std::size_t changes = 0;
  if (!witness_path.empty()) {
    Witness w = parse_witness(slurp(witness_path));
    changes = w.changes.size();
    res = verify_witness(d, w);
  } else {
    res = replay(d, parse_moves(slurp(moves_path)));
  }
  bool trivialized = res.final.crossings.empty();
  if (format == "json") {
    json j;
    j["moves"] = res.tally.total();
    j["changes"] = changes;
    j["tally"] = {{"r1_create", res.tally.r1_create_pos + res.tally.r1_create_neg},
                  {"r1_delete", res.tally.r1_delete_pos + res.tally.r1_delete_neg},
                  {"r2_create", res.tally.r2_create_matched + res.tally.r2_create_unmatched},
                  {"r2_delete", res.tally.r2_delete_matched + res.tally.r2_delete_unmatched},
                  {"r3", res.tally.r3}};
    j["final"] = {{"crossings", res.final.crossings.size()},
                  {"free_loops", res.final.free_loops}};
    j["trivialized"] = trivialized;
    std::cout << j.dump(2) << "\n";
  } else {
    if (!witness_path.empty()) std::cout << "crossing changes: " << changes << "\n";
    std::cout << "replayed " << res.tally.total() << " moves\n";
    std::cout << "  RI+ " << res.tally.r1_create_pos + res.tally.r1_create_neg
              << ", RI- " << res.tally.r1_delete_pos + res.tally.r1_delete_neg
              << ", RII+ " << res.tally.r2_create_matched + res.tally.r2_create_unmatched
              << ", RII- " << res.tally.r2_delete_matched + res.tally.r2_delete_unmatched
              << ", RIII " << res.tally.r3 << "\n";
    std::cout << "final: " << res.final.crossings.size() << " crossings, "
              << res.final.free_loops << " free loops\n";
  }
  // a witness must end at the crossing-free picture to certify anything
  if (!witness_path.empty() && !trivialized) {
    std::cerr << "witness does not reach a crossing-free diagram\n";
    return kExitViolation;
  }
  return 0;
}

int cmd_dn(int n, bool conjecture, const std::string& format, const DnCaps& caps,
           const std::string& export_diagram, const std::string& export_sequence) {
  if (n < 1) throw ParseError("dn: n must be >= 1");
  if (n > caps.verify_n)
    throw CapError("dn is capped at n <= " + std::to_string(caps.verify_n) +
                   " (raise --verify-cap to override)");
  if (!export_diagram.empty()) spill(export_diagram, encode_text(dn_diagram(n)));
  if (!export_sequence.empty())
    spill(export_sequence, render_moves(unknotting_sequence(n)));
  if (n > caps.census_n) {
    std::cerr << "warning: n > " << caps.census_n
              << ", running sequence verification only (raise --census-cap for the "
                 "full report)\n";
    std::vector<MoveRecord> seq = unknotting_sequence(n);
    ReplayResult res = replay(dn_diagram(n), seq);
    if (!res.final.crossings.empty() || res.final.free_loops != 2) {
      std::cerr << "sequence did not reach the trivial picture\n";
      return kExitViolation;
    }
    if (format == "json") {
      json j;
      j["n"] = n;
      j["sequence"] = {{"length", seq.size()},
                       {"r1_delete", res.tally.r1_delete_pos},
                       {"r2_delete_matched", res.tally.r2_delete_matched},
                       {"r3", res.tally.r3}};
      j["census"] = nullptr;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "D_" << n << ": verified " << seq.size() << " moves  [RI- "
                << res.tally.r1_delete_pos << ", RII- matched "
                << res.tally.r2_delete_matched << ", RIII " << res.tally.r3 << "]\n";
    }
    return 0;
  }
  DnReport report = dn_report(n, conjecture, caps);
  std::cout << (format == "json" ? report_json(report) : report_table(report));
  if (format == "json") std::cout << "\n";
  return 0;
}

int cmd_census(int n, bool conjecture, const std::string& format, const DnCaps& caps) {
  std::vector<CensusEntry> census = dn_census(n, conjecture, caps);
  if (format == "json") {
    json arr = json::array();
    for (const CensusEntry& e : census) {
      json je;
      je["crossing"] = e.crossing;
      je["sign"] = e.sign;
      je["predicted"] = e.predicted.str();
      je["identified"] = e.identified.str();
      je["smoothed_components"] = e.smoothed_components;
      je["u"] = interval_json(e.u);
      arr.push_back(std::move(je));
    }
    std::cout << arr.dump(2) << "\n";
  } else {
    for (const CensusEntry& e : census)
      std::cout << "crossing " << e.crossing << "  sign " << (e.sign > 0 ? '+' : '-')
                << "  smooths to " << e.identified.str() << "  ("
                << e.smoothed_components << " components)  u " << e.u.str() << "\n";
  }
  return 0;
}

int cmd_fuzz(std::uint64_t seed, long long count, int max_crossings,
             const std::string& format) {
  struct Suite {
    const char* name;
    FuzzStats stats;
  };
  Suite suites[] = {
      {"move-invariance", fuzz_move_invariance(seed, count, max_crossings)},
      {"surrogate-bounds", fuzz_surrogate_bounds(seed + 1, count, max_crossings)},
      {"bigon-semantics", fuzz_bigon_semantics(seed + 2, count, max_crossings)},
      {"bracket-oracle",
       fuzz_bracket_oracle(seed + 3, std::max(1LL, count / 4),
                           std::min(max_crossings, 10))},
  };
  bool all_pass = true;
  json j;
  for (const Suite& s : suites) {
    all_pass = all_pass && s.stats.pass();
    if (format == "json") {
      j[s.name] = {{"checked", s.stats.checked},
                   {"violations", s.stats.violations},
                   {"first_violation", s.stats.first_violation}};
    } else {
      std::cout << s.name << ": " << s.stats.checked << " checked, "
                << s.stats.violations << " violations\n";
      if (!s.stats.pass())
        std::cout << "  first violation: " << s.stats.first_violation << "\n";
    }
  }
  if (format == "json") std::cout << j.dump(2) << "\n";
  return all_pass ? 0 : kExitViolation;
}

int cmd_encode(const std::string& braid_word, const std::string& in_path,
               const std::string& format, const std::string& out_path) {
  Diagram d;
  if (!braid_word.empty())
    d = closure(parse_braid(braid_word));
  else
    d = load_diagram(in_path);
  std::vector<std::string> problems = validate(d);
  if (!problems.empty()) throw DiagramError("invalid diagram: " + problems.front());
  std::string text = format == "json" ? encode_json(d) : encode_text(d);
  if (format == "json") text += "\n";
  if (out_path.empty())
    std::cout << text;
  else
    spill(out_path, text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"computational toolkit for link diagrams, Reidemeister moves, and "
               "crossing-smoothing lower bounds"};
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  std::string path, moves_path, witness_path, braid_word, out_path;
  bool conjecture = false;
  int cap = 24;
  int riii_budget = 8;
  long long subset_budget = 200000;
  int max_changes = 2;
  int n = 0;
  DnCaps caps;
  std::uint64_t seed = 1;
  long long count = 200;
  int fuzz_crossings = 12;
  std::string export_diagram, export_sequence;

  CLI::App* inv = app.add_subcommand("invariants", "components, writhe, linking, fingerprint");
  inv->add_option("file", path, "diagram file (text or JSON)")->required();
  inv->add_option("--max-crossings", cap, "fingerprint crossing cap")->capture_default_str();

  CLI::App* iu_cmd = app.add_subcommand("iu", "crossing-smoothing sums and move bounds");
  iu_cmd->add_option("file", path, "diagram file")->required();
  iu_cmd->add_flag("--assume-conjecture", conjecture, "pin odd composite u to k-1");
  iu_cmd->add_option("--max-crossings", cap, "fingerprint crossing cap")->capture_default_str();
  iu_cmd->add_option("--riii-budget", riii_budget, "RIII depth in the search")->capture_default_str();
  iu_cmd->add_option("--subset-budget", subset_budget, "search subset budget")->capture_default_str();
  iu_cmd->add_option("--max-changes", max_changes, "largest crossing subset tried")->capture_default_str();

  CLI::App* verify = app.add_subcommand("verify", "replay a move sequence or witness");
  verify->add_option("file", path, "diagram file")->required();
  CLI::Option* mopt = verify->add_option("--moves", moves_path, "move sequence file");
  verify->add_option("--witness", witness_path, "witness file (changes + moves)")
      ->excludes(mopt);

  CLI::App* dn = app.add_subcommand("dn", "build, verify, and report on D_n");
  dn->add_option("n", n, "family parameter")->required();
  dn->add_flag("--assume-conjecture", conjecture, "pin odd composite u to k-1");
  dn->add_option("--census-cap", caps.census_n, "largest n for the fingerprint census")->capture_default_str();
  dn->add_option("--verify-cap", caps.verify_n, "largest n for move verification")->capture_default_str();
  dn->add_option("--max-crossings", caps.bracket_cap, "fingerprint crossing cap")->capture_default_str();
  dn->add_option("--export-diagram", export_diagram, "write the diagram file here");
  dn->add_option("--export-sequence", export_sequence, "write the move sequence here");

  CLI::App* census = app.add_subcommand("census", "per-crossing smoothing census of D_n");
  census->add_option("n", n, "family parameter")->required();
  census->add_flag("--assume-conjecture", conjecture, "pin odd composite u to k-1");
  census->add_option("--census-cap", caps.census_n, "largest n for the census")->capture_default_str();
  census->add_option("--max-crossings", caps.bracket_cap, "fingerprint crossing cap")->capture_default_str();

  CLI::App* fuzz = app.add_subcommand("fuzz", "randomized property suites");
  fuzz->add_option("--seed", seed, "rng seed")->capture_default_str();
  fuzz->add_option("--count", count, "samples per suite")->capture_default_str();
  fuzz->add_option("--max-crossings", fuzz_crossings, "diagram size limit")->capture_default_str();

  CLI::App* encode = app.add_subcommand("encode", "braid or diagram to text/JSON");
  CLI::Option* bopt = encode->add_option("--braid", braid_word, "braid word, e.g. \"s1^-1 s2 @3\"");
  encode->add_option("--in", path, "diagram file to re-encode")->excludes(bopt);
  encode->add_option("--out", out_path, "write here instead of stdout");

  CLI::App* decode = app.add_subcommand("decode", "parse, validate, and re-emit a diagram");
  decode->add_option("file", path, "diagram file")->required();

  try {
    app.parse(argc, argv);
    if (inv->parsed()) return cmd_invariants(path, format, cap);
    if (iu_cmd->parsed())
      return cmd_iu(path, format, conjecture, cap, riii_budget, subset_budget,
                    max_changes);
    if (verify->parsed()) {
      if (moves_path.empty() && witness_path.empty())
        throw CLI::RequiredError("--moves or --witness");
      return cmd_verify(path, moves_path, witness_path, format);
    }
    if (dn->parsed())
      return cmd_dn(n, conjecture, format, caps, export_diagram, export_sequence);
    if (census->parsed()) return cmd_census(n, conjecture, format, caps);
    if (fuzz->parsed()) return cmd_fuzz(seed, count, fuzz_crossings, format);
    if (encode->parsed()) {
      if (braid_word.empty() && path.empty())
        throw CLI::RequiredError("--braid or --in");
      return cmd_encode(braid_word, path, format, out_path);
    }
    if (decode->parsed()) return cmd_encode("", path, format, out_path);
    return kExitInput;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const CapError& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kExitCap;
  } catch (const MoveError& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kExitViolation;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitViolation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitViolation;
  }
}
