#include "knots/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace knots {

LaurentPoly LaurentPoly::monomial(Coeff c, int exp) {
  LaurentPoly p;
  if (c != 0) p.terms_[exp] = std::move(c);
  return p;
}

Coeff LaurentPoly::coeff(int exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? Coeff(0) : it->second;
}

int LaurentPoly::min_exp() const {
  if (terms_.empty()) throw std::runtime_error("min_exp of zero polynomial");
  return terms_.begin()->first;
}

int LaurentPoly::max_exp() const {
  if (terms_.empty()) throw std::runtime_error("max_exp of zero polynomial");
  return terms_.rbegin()->first;
}

void LaurentPoly::add_term(int exp, const Coeff& c) {
  if (c == 0) return;
  auto it = terms_.find(exp);
  if (it == terms_.end()) {
    terms_.emplace(exp, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (auto& [ea, ca] : a.terms_)
    for (auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

LaurentPoly LaurentPoly::scaled(const Coeff& c) const {
  LaurentPoly r;
  if (c == 0) return r;
  for (auto& [e, k] : terms_) r.terms_[e] = k * c;
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
  LaurentPoly r = constant(1);
  LaurentPoly base = *this;
  while (k) {
    if (k & 1u) r *= base;
    base *= base;
    k >>= 1u;
  }
  return r;
}

std::optional<LaurentPoly> LaurentPoly::div_exact(const LaurentPoly& num,
                                                  const LaurentPoly& den) {
  if (den.is_zero()) return std::nullopt;
  if (num.is_zero()) return LaurentPoly();
  LaurentPoly rem = num, quot;
  const int den_deg = den.max_exp();
  // any exact quotient spans exactly this exponent window
  const int quot_min = num.min_exp() - den.min_exp();
  const Coeff& den_lead = den.terms_.rbegin()->second;
  while (!rem.is_zero()) {
    const int rem_deg = rem.max_exp();
    if (rem_deg - den_deg < quot_min) return std::nullopt;
    const Coeff& rem_lead = rem.terms_.rbegin()->second;
    if (rem_lead % den_lead != 0) return std::nullopt;
    LaurentPoly t = monomial(rem_lead / den_lead, rem_deg - den_deg);
    quot += t;
    rem -= t * den;
    if (!rem.is_zero() && rem.max_exp() >= rem_deg) return std::nullopt;
  }
  return quot;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const int e = it->first;
    Coeff c = it->second;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    const bool unit = (c == 1);
    if (e == 0) {
      os << c;
    } else {
      if (!unit) os << c;
      os << "A";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

}  // namespace knots
