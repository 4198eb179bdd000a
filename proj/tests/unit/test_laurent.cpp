#include <doctest.h>

#include "knots/laurent.hpp"

using knots::LaurentPoly;

TEST_CASE("laurent arithmetic basics") {
  LaurentPoly a = LaurentPoly::monomial(2, 3);    // 2A^3
  LaurentPoly b = LaurentPoly::monomial(-1, -2);  // -A^-2
  CHECK((a + b).coeff(3) == 2);
  CHECK((a + b).coeff(-2) == -1);
  CHECK((a + b).coeff(0) == 0);
  CHECK((a * b).coeff(1) == -2);
  CHECK((a - a).is_zero());
  CHECK(LaurentPoly().is_zero());
  CHECK(LaurentPoly::constant(0).is_zero());
}

TEST_CASE("laurent ring identities") {
  LaurentPoly x = LaurentPoly::monomial(1, 1) + LaurentPoly::constant(3);
  LaurentPoly y = LaurentPoly::monomial(-2, -1) + LaurentPoly::monomial(1, 2);
  LaurentPoly z = LaurentPoly::monomial(5, 0) - LaurentPoly::monomial(1, -3);
  CHECK(x * y == y * x);
  CHECK((x + y) * z == x * z + y * z);
  CHECK(x * (y * z) == (x * y) * z);
  CHECK(x + (-x) == LaurentPoly());
  CHECK(x * LaurentPoly::constant(1) == x);
  CHECK((x * LaurentPoly()).is_zero());
}

TEST_CASE("laurent pow") {
  LaurentPoly x = LaurentPoly::monomial(1, 1) + LaurentPoly::monomial(1, -1);
  CHECK(x.pow(0) == LaurentPoly::constant(1));
  CHECK(x.pow(1) == x);
  CHECK(x.pow(3) == x * x * x);
  // binomial check: (A + A^-1)^2 = A^2 + 2 + A^-2
  LaurentPoly sq = x.pow(2);
  CHECK(sq.coeff(2) == 1);
  CHECK(sq.coeff(0) == 2);
  CHECK(sq.coeff(-2) == 1);
}

TEST_CASE("laurent exponent range") {
  LaurentPoly x = LaurentPoly::monomial(4, 7) + LaurentPoly::monomial(1, -5);
  CHECK(x.min_exp() == -5);
  CHECK(x.max_exp() == 7);
  CHECK_THROWS(LaurentPoly().min_exp());
}

TEST_CASE("laurent exact division") {
  LaurentPoly d = LaurentPoly::monomial(-1, 2) + LaurentPoly::monomial(-1, -2);
  LaurentPoly p = d * d * LaurentPoly::monomial(3, -1);
  auto q = LaurentPoly::div_exact(p, d);
  REQUIRE(q.has_value());
  CHECK(*q == d * LaurentPoly::monomial(3, -1));
  // A^2 + 1 is not divisible by delta
  CHECK(!LaurentPoly::div_exact(
             LaurentPoly::monomial(1, 2) + LaurentPoly::constant(1), d)
             .has_value());
  CHECK(LaurentPoly::div_exact(LaurentPoly(), d).has_value());
}

TEST_CASE("laurent rendering") {
  CHECK(LaurentPoly().str() == "0");
  CHECK(LaurentPoly::constant(1).str() == "1");
  LaurentPoly p = LaurentPoly::monomial(-1, 3) + LaurentPoly::constant(2) +
                  LaurentPoly::monomial(1, -1);
  CHECK(p.str() == "-A^3 + 2 + A^-1");
}
