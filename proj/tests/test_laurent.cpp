#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "weavekh/error.hpp"
#include "weavekh/laurent.hpp"

using namespace weavekh;

namespace {

LaurentPoly random_poly(std::mt19937_64& rng, const std::string& var = "q") {
  std::uniform_int_distribution<int> terms(0, 6);
  std::uniform_int_distribution<int> expo(-8, 8);
  std::uniform_int_distribution<long> coef(-50, 50);
  LaurentPoly p(var);
  for (int k = terms(rng); k > 0; --k) p += LaurentPoly::monomial(coef(rng), expo(rng), var);
  return p;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::kInvalidArgument;
}

}  // namespace

TEST_CASE("canonical form drops zero coefficients") {
  const auto p = LaurentPoly::from_coeffs({0, 3, 0, -3, 0}, -2);
  CHECK(p.size() == 2);
  CHECK(p.min_degree() == -1);
  CHECK(p.max_degree() == 1);
  CHECK((p - p).is_zero());
  CHECK(LaurentPoly::from_coeffs({0, 0}).is_zero());
}

TEST_CASE("degree queries on zero throw") {
  const LaurentPoly zero;
  CHECK(code_of([&] { (void)zero.min_degree(); }) == ErrorCode::kInvalidArgument);
  CHECK(code_of([&] { (void)zero.span(); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("small products") {
  // (1 - q)(1 + q) = 1 - q^2
  const auto a = LaurentPoly::from_coeffs({1, -1});
  const auto b = LaurentPoly::from_coeffs({1, 1});
  CHECK(a * b == LaurentPoly::from_coeffs({1, 0, -1}));
  // (q^-1 + q)^2 = q^-2 + 2 + q^2
  const auto c = LaurentPoly::from_coeffs({1, 0, 1}, -1);
  CHECK(c * c == LaurentPoly::from_coeffs({1, 0, 2, 0, 1}, -2));
  CHECK(shift(c, 3) == LaurentPoly::from_coeffs({1, 0, 1}, 2));
}

TEST_CASE("variable mismatch is rejected") {
  const auto q = LaurentPoly::monomial(1, 1, "q");
  const auto t = LaurentPoly::monomial(1, 1, "t");
  CHECK(code_of([&] { (void)(q + t); }) == ErrorCode::kVariableMismatch);
  CHECK(code_of([&] { (void)(q * t); }) == ErrorCode::kVariableMismatch);
  CHECK_FALSE(q == t);
  CHECK(q.renamed("t") == t);
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(20240611);
  for (int k = 0; k < 200; ++k) {
    const auto a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == LaurentPoly());
  }
}

TEST_CASE("exact division round trip") {
  std::mt19937_64 rng(7);
  int checked = 0;
  for (int k = 0; k < 200; ++k) {
    const auto a = random_poly(rng), b = random_poly(rng);
    if (b.is_zero()) continue;
    CHECK(exact_div(a * b, b) == a);
    ++checked;
  }
  CHECK(checked > 100);
}

TEST_CASE("exact division by 1 - q^2") {
  const auto den = LaurentPoly::from_coeffs({1, 0, -1});
  const auto quo = LaurentPoly::from_coeffs({2, -1, 0, 5}, -3);
  CHECK(exact_div(den * quo, den) == quo);
  const auto bad = den * quo + LaurentPoly::constant(1);
  CHECK(code_of([&] { exact_div(bad, den); }) == ErrorCode::kNonExactDivision);
  CHECK(code_of([&] { exact_div(bad, LaurentPoly()); }) == ErrorCode::kInvalidArgument);
  CHECK(exact_div(LaurentPoly(), den).is_zero());
}

TEST_CASE("exponent scaling and evaluation") {
  const auto p = LaurentPoly::from_coeffs({1, -2, 3}, -1);
  const auto p2 = scale_exponents(p, 2);
  CHECK(p2 == LaurentPoly::from_coeffs({1, 0, -2, 0, 3}, -2));
  CHECK(eval_float(p, 2.0) == doctest::Approx(0.5 - 2 + 6));
  CHECK(eval_float(LaurentPoly::from_coeffs({4, 1}), 0.0) == doctest::Approx(4.0));
  CHECK(code_of([&] { eval_float(p, 0.0); }) == ErrorCode::kZeroWithNegativeExponent);
}

TEST_CASE("palindromic test") {
  CHECK(is_palindromic(LaurentPoly::from_coeffs({1, -1, 1, -1, 1}, -2)));
  CHECK(is_palindromic(LaurentPoly::from_coeffs({2, 0, 2}, -1)));
  CHECK_FALSE(is_palindromic(LaurentPoly::from_coeffs({2, 0, 2}, 5)));
  CHECK_FALSE(is_palindromic(LaurentPoly::from_coeffs({1, 2})));
}

TEST_CASE("big coefficients do not overflow") {
  auto p = LaurentPoly::from_coeffs({1, 1});
  LaurentPoly acc = LaurentPoly::constant(1);
  for (int k = 0; k < 200; ++k) acc *= p;
  BigInt expected = 1;
  for (int k = 1; k <= 100; ++k) expected = expected * (200 - k + 1) / k;  // C(200,100)
  CHECK(acc.coeff(100) == expected);
  CHECK(exact_div(acc, p) == [&] {
    LaurentPoly r = LaurentPoly::constant(1);
    for (int k = 0; k < 199; ++k) r *= p;
    return r;
  }());
}

TEST_CASE("bivariate arithmetic and t = -1") {
  const auto a = BiLaurentPoly::monomial(2, 1, 3) + BiLaurentPoly::monomial(-1, 0, -1);
  const auto b = BiLaurentPoly::monomial(1, -2, 1);
  const auto ab = a * b;
  CHECK(ab.coeff(-1, 4) == 2);
  CHECK(ab.coeff(-2, 0) == -1);
  CHECK(exact_div(ab, b) == a);
  CHECK(exact_div(ab, a) == b);
  CHECK(a.at_t_minus_one() == LaurentPoly::monomial(-2, 3, "Q") + LaurentPoly::monomial(-1, -1, "Q"));
  CHECK(code_of([&] { exact_div(ab + BiLaurentPoly::monomial(1, 0, 0), a); }) ==
        ErrorCode::kNonExactDivision);
}

TEST_CASE("knight substitution") {
  // 3 Q^-4 - Q^2 + Q^6  ->  3 t^-2 Q^-4 + t Q^2 - t^3 Q^6
  const auto p = LaurentPoly::monomial(3, -4, "Q") - LaurentPoly::monomial(1, 2, "Q") +
                 LaurentPoly::monomial(1, 6, "Q");
  const auto k = substitute_knight(p);
  CHECK(k.coeff(-2, -4) == 3);
  CHECK(k.coeff(1, 2) == 1);
  CHECK(k.coeff(3, 6) == -1);
  // Undoing the sign twist at t = -1 recovers p(-Q^2) style values: t = -1 gives p itself.
  CHECK(k.at_t_minus_one() == p);
  CHECK(code_of([&] { substitute_knight(LaurentPoly::monomial(1, 3, "Q")); }) ==
        ErrorCode::kOddExponent);
}
