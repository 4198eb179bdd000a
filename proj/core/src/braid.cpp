#include "knots/braid.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "knots/errors.hpp"

namespace knots {

Braid parse_braid(const std::string& text) {
  std::istringstream in(text);
  std::string tok;
  std::vector<std::pair<int, int>> gens;  // (index, exponent)
  int strands = 0;
  bool closed = false;
  while (in >> tok) {
    if (closed) throw ParseError("token '" + tok + "' after @strands", 1);
    if (tok[0] == '@') {
      try {
        size_t used = 0;
        strands = std::stoi(tok.substr(1), &used);
        if (used != tok.size() - 1) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw ParseError("bad strand count '" + tok + "'", 1);
      }
      if (strands < 1) throw ParseError("strand count must be positive", 1);
      closed = true;
      continue;
    }
    if (tok[0] != 's')
      throw ParseError("expected generator s<i>, got '" + tok + "'", 1);
    std::string body = tok.substr(1);
    auto caret = body.find('^');
    std::string idx_s = body.substr(0, caret);
    std::string exp_s =
        caret == std::string::npos ? "1" : body.substr(caret + 1);
    int index = 0, exp = 0;
    try {
      size_t used = 0;
      index = std::stoi(idx_s, &used);
      if (used != idx_s.size() || idx_s.empty()) throw std::invalid_argument(tok);
      exp = std::stoi(exp_s, &used);
      if (used != exp_s.size() || exp_s.empty()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw ParseError("bad generator '" + tok + "'", 1);
    }
    if (index < 1) throw ParseError("generator index must be >= 1", 1);
    if (exp == 0) throw ParseError("zero exponent in '" + tok + "'", 1);
    gens.emplace_back(index, exp);
  }
  if (!closed) throw ParseError("missing @<strands> terminator", 1);

  Braid b;
  b.strands = strands;
  CrossingId next = 0;
  for (auto [index, exp] : gens) {
    if (index >= strands)
      throw ParseError("generator s" + std::to_string(index) + " needs " +
                           std::to_string(index + 1) + " strands, word has " +
                           std::to_string(strands),
                       1);
    int sign = exp > 0 ? 1 : -1;
    for (int i = 0; i < std::abs(exp); ++i)
      b.letters.push_back({index, sign, next++});
  }
  return b;
}

std::string render_braid(const Braid& b) {
  std::ostringstream out;
  size_t i = 0;
  while (i < b.letters.size()) {
    size_t j = i;
    while (j < b.letters.size() && b.letters[j].index == b.letters[i].index &&
           b.letters[j].sign == b.letters[i].sign)
      ++j;
    int exp = int(j - i) * b.letters[i].sign;
    out << "s" << b.letters[i].index;
    if (exp != 1) out << "^" << exp;
    out << " ";
    i = j;
  }
  out << "@" << b.strands;
  return out.str();
}

std::vector<int> strand_permutation(const Braid& b) {
  // cur[p] = strand currently at position p (0-based)
  std::vector<int> cur(b.strands);
  std::iota(cur.begin(), cur.end(), 0);
  for (const Letter& l : b.letters) std::swap(cur[l.index - 1], cur[l.index]);
  std::vector<int> out(b.strands);
  for (int p = 0; p < b.strands; ++p) out[cur[p]] = p;
  return out;
}

int cycle_count(const std::vector<int>& perm) {
  std::vector<char> seen(perm.size(), 0);
  int cycles = 0;
  for (size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (size_t j = i; !seen[j]; j = size_t(perm[j])) seen[j] = 1;
  }
  return cycles;
}

Diagram closure(const Braid& b) {
  Diagram d;
  // cur[p] = arc currently descending at position p (1-based positions)
  std::vector<ArcId> cur(size_t(b.strands) + 1, 0);
  std::vector<PortRef> first_in(size_t(b.strands) + 1, PortRef{0, -1});
  std::vector<ArcId> top(size_t(b.strands) + 1, 0);
  ArcId next_arc = 1;
  for (int p = 1; p <= b.strands; ++p) top[p] = cur[p] = next_arc++;

  for (const Letter& l : b.letters) {
    if (l.index < 1 || l.index >= b.strands)
      throw DiagramError("letter index out of range for strand count");
    int i = l.index;
    Crossing c;
    // note: s_i^-1 is the positive crossing (over from the right, h=L)
    int under_in_pos, over_in_pos, under_out_pos, over_out_pos;
    if (l.sign > 0) {
      c.over_in = 1;
      under_in_pos = i + 1;  // port 0 (NE)
      over_in_pos = i;       // port 1 (NW)
      under_out_pos = i;     // port 2 (SW)
      over_out_pos = i + 1;  // port 3 (SE)
    } else {
      c.over_in = 3;
      under_in_pos = i;      // port 0 (NW)
      over_in_pos = i + 1;   // port 3 (NE)
      over_out_pos = i;      // port 1 (SW)
      under_out_pos = i + 1; // port 2 (SE)
    }
    auto attach_in = [&](int port, int pos) {
      c.arc[port] = cur[pos];
      if (first_in[pos].port < 0 && cur[pos] == top[pos])
        first_in[pos] = {l.id, port};
    };
    attach_in(0, under_in_pos);
    attach_in(c.over_in, over_in_pos);
    c.arc[2] = cur[under_out_pos] = next_arc++;
    c.arc[over_out_port(c)] = cur[over_out_pos] = next_arc++;
    if (!d.crossings.emplace(l.id, c).second)
      throw DiagramError("duplicate letter id " + std::to_string(l.id));
  }

  for (int p = 1; p <= b.strands; ++p) {
    if (cur[p] == top[p]) {
      ++d.free_loops;  // position never crossed anything
    } else {
      // the final descending arc wraps around and is the top arc
      d.at(first_in[p].crossing).arc[first_in[p].port] = cur[p];
    }
  }
  d.refresh_watermarks();
  return d;
}

Braid dn_word(int n) {
  if (n < 1) throw DiagramError("D_n needs n >= 1");
  std::ostringstream w;
  w << "s1^-1 ";
  for (int j = 2; j <= n; ++j) w << "s" << j << "^-1 s" << j - 1 << "^-1 ";
  w << "s" << n << "^" << n << " @" << n + 1;
  return parse_braid(w.str());
}

ReductionStep reduce_once(const Braid& b) {
  // Recognize s1^-k (s2^-1 s1^-1) ... (sm^-1 s[m-1]^-1) sm^l, m >= 2.
  const auto& ls = b.letters;
  size_t pos = 0;
  int k = 0;
  while (pos < ls.size() && ls[pos].index == 1 && ls[pos].sign < 0) ++pos, ++k;
  if (k < 1) throw DiagramError("word lacks a leading s1^- block");
  int m = 1;
  while (pos + 1 < ls.size() && ls[pos].index == m + 1 && ls[pos].sign < 0 &&
         ls[pos + 1].index == m && ls[pos + 1].sign < 0) {
    pos += 2;
    ++m;
  }
  if (m < 2) throw DiagramError("word has no descending pair to absorb");
  int l = 0;
  while (pos < ls.size() && ls[pos].index == m && ls[pos].sign > 0) ++pos, ++l;
  if (l < 1 || pos != ls.size() || b.strands != m + 1)
    throw DiagramError("word does not match the reducible shape");

  ReductionStep step;
  step.word = b;
  auto& w = step.word.letters;

  // Slide the s1^- block right through the first (s2^-1 s1^-1) pair: each
  // braid-relation rewrite s1 s2 s1 -> s2 s1 s2 (inverses included) is an
  // RIII on the closure and reverses the order of the three letter ids.
  for (int t = 0; t < k; ++t) {
    size_t at = size_t(k - 1 - t);  // rewrite positions at, at+1, at+2
    MoveRecord r3;
    r3.kind = MoveKind::R3;
    r3.crossings = {w[at].id, w[at + 1].id, w[at + 2].id};
    step.moves.push_back(r3);
    std::swap(w[at].id, w[at + 2].id);
    w[at].index = 2;
    w[at + 1].index = 1;
    w[at + 2].index = 2;
  }

  // Now w = s2^-1 s1^-1 s2^-k (s3^-1 s2^-1) ... sm^l and the lone s1^-1 at
  // position 1 closes a monogon: remove it (RI- on a positive crossing) and
  // shift every index down one.
  MoveRecord destab;
  destab.kind = MoveKind::R1Delete;
  destab.sign = +1;
  destab.crossings = {w[1].id};
  step.moves.push_back(destab);
  w.erase(w.begin() + 1);
  for (Letter& letter : w) --letter.index;
  step.word.strands = m;
  return step;
}

}  // namespace knots
