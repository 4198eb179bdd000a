#include "knots/codec.hpp"

#include <map>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

#include "knots/errors.hpp"

namespace knots {
namespace {

// Splits into lines, dropping '#' comments; keeps 1-based line numbers.
std::vector<std::pair<int, std::string>> content_lines(const std::string& text) {
  std::vector<std::pair<int, std::string>> out;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
    if (!blank) out.emplace_back(number, line);
  }
  return out;
}

// "key=value" with a specific key, or throw.
std::string expect_kv(const std::string& tok, const std::string& key, int line) {
  auto eq = tok.find('=');
  if (eq == std::string::npos || tok.substr(0, eq) != key)
    throw ParseError("expected " + key + "=..., got '" + tok + "'", line);
  return tok.substr(eq + 1);
}

long long parse_int(const std::string& s, const std::string& what, int line) {
  try {
    size_t used = 0;
    long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError("bad " + what + " '" + s + "'", line);
  }
}

void validate_or_throw(const Diagram& d, int line) {
  auto problems = validate(d);
  if (!problems.empty()) throw ParseError(problems.front(), line);
}

}  // namespace

std::string encode_text(const Diagram& d) {
  std::ostringstream out;
  out << "diagram crossings=" << d.crossings.size() << " loops=" << d.free_loops
      << "\n";
  std::map<ArcId, ArcId> rename;
  auto canon = [&](ArcId a) {
    auto [it, fresh] = rename.emplace(a, ArcId(rename.size() + 1));
    (void)fresh;
    return it->second;
  };
  for (const auto& [id, c] : d.crossings) {
    out << "X";
    for (int p = 0; p < 4; ++p) out << " " << canon(c.arc[p]);
    out << " h=" << (c.over_in == 3 ? "L" : "R") << "\n";
  }
  return out.str();
}

Diagram decode_text(const std::string& text) {
  auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("empty input", 1);

  std::istringstream head(lines[0].second);
  int head_line = lines[0].first;
  std::string word, tok;
  head >> word;
  if (word != "diagram")
    throw ParseError("expected 'diagram' header, got '" + word + "'", head_line);
  head >> tok;
  long long ncross = parse_int(expect_kv(tok, "crossings", head_line),
                               "crossing count", head_line);
  head >> tok;
  long long loops =
      parse_int(expect_kv(tok, "loops", head_line), "loop count", head_line);
  if (head >> tok) throw ParseError("trailing token '" + tok + "'", head_line);
  if (ncross < 0 || loops < 0)
    throw ParseError("counts must be nonnegative", head_line);
  if (lines.size() != size_t(ncross) + 1)
    throw ParseError("expected " + std::to_string(ncross) +
                         " crossing lines, found " +
                         std::to_string(lines.size() - 1),
                     head_line);

  Diagram d;
  d.free_loops = int(loops);
  for (long long i = 0; i < ncross; ++i) {
    int line = lines[i + 1].first;
    std::istringstream in(lines[i + 1].second);
    in >> word;
    if (word != "X") throw ParseError("expected 'X', got '" + word + "'", line);
    Crossing c;
    for (int p = 0; p < 4; ++p) {
      if (!(in >> tok)) throw ParseError("missing arc label", line);
      long long a = parse_int(tok, "arc label", line);
      if (a <= 0) throw ParseError("arc labels must be positive", line);
      c.arc[p] = ArcId(a);
    }
    if (!(in >> tok)) throw ParseError("missing handedness", line);
    std::string h = expect_kv(tok, "h", line);
    if (h == "L")
      c.over_in = 3;
    else if (h == "R")
      c.over_in = 1;
    else
      throw ParseError("handedness must be L or R, got '" + h + "'", line);
    if (in >> tok) throw ParseError("trailing token '" + tok + "'", line);
    d.crossings.emplace(CrossingId(i), c);
  }
  d.refresh_watermarks();
  validate_or_throw(d, head_line);
  return d;
}

std::string encode_json(const Diagram& d) {
  nlohmann::json j;
  j["crossings"] = nlohmann::json::array();
  for (const auto& [id, c] : d.crossings) {
    j["crossings"].push_back({{"id", id},
                              {"ports", {c.arc[0], c.arc[1], c.arc[2], c.arc[3]}},
                              {"over_in", c.over_in}});
  }
  j["free_loops"] = d.free_loops;
  return j.dump(2) + "\n";
}

Diagram decode_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what(), 1);
  }
  Diagram d;
  try {
    d.free_loops = j.at("free_loops").get<int>();
    for (const auto& jc : j.at("crossings")) {
      CrossingId id = jc.at("id").get<CrossingId>();
      Crossing c;
      const auto& ports = jc.at("ports");
      if (!ports.is_array() || ports.size() != 4)
        throw ParseError("ports must hold 4 arc labels", 1);
      for (int p = 0; p < 4; ++p) c.arc[p] = ports.at(p).get<ArcId>();
      c.over_in = jc.at("over_in").get<int>();
      if (!d.crossings.emplace(id, c).second)
        throw ParseError("duplicate crossing id " + std::to_string(id), 1);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what(), 1);
  }
  if (d.free_loops < 0) throw ParseError("free_loops must be nonnegative", 1);
  for (const auto& [id, c] : d.crossings)
    for (int p = 0; p < 4; ++p)
      if (c.arc[p] <= 0) throw ParseError("arc labels must be positive", 1);
  d.refresh_watermarks();
  validate_or_throw(d, 1);
  return d;
}

}  // namespace knots
