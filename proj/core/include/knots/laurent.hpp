#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <string>

namespace knots {

using Coeff = boost::multiprecision::cpp_int;

// Laurent polynomial in one variable A with integer coefficients.
// Always canonical: zero coefficients are never stored, so operator== is
// structural equality and hashing/printing are stable.
class LaurentPoly {
public:
  LaurentPoly() = default;

  static LaurentPoly monomial(Coeff c, int exp);
  static LaurentPoly constant(long long c) { return monomial(Coeff(c), 0); }

  bool is_zero() const { return terms_.empty(); }
  const std::map<int, Coeff>& terms() const { return terms_; }
  Coeff coeff(int exp) const;
  // min/max exponent of a nonzero polynomial; throws on zero
  int min_exp() const;
  int max_exp() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  // multiply by scalar
  LaurentPoly scaled(const Coeff& c) const;
  // nonnegative integer power
  LaurentPoly pow(unsigned k) const;

  bool operator==(const LaurentPoly& o) const = default;

  // exact division; nullopt when den does not divide num (or den == 0)
  static std::optional<LaurentPoly> div_exact(const LaurentPoly& num,
                                              const LaurentPoly& den);

  // exponent-descending text form, e.g. "-A^3 + 2 + A^-1"; zero prints "0"
  std::string str() const;

private:
  std::map<int, Coeff> terms_;
  void add_term(int exp, const Coeff& c);
};

}  // namespace knots
