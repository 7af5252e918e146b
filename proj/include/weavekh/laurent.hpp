#pragma once

// Exact Laurent polynomials with arbitrary-precision integer coefficients,
// in one variable (LaurentPoly) and in two variables t, Q (BiLaurentPoly).
//
// Both types are kept in canonical form: no stored coefficient is zero and
// the zero polynomial has no terms. Values are immutable once built; every
// operation returns a fresh polynomial.

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>

namespace weavekh {

using BigInt = mpz_class;

class LaurentPoly {
 public:
  using TermMap = std::map<int, BigInt>;

  LaurentPoly() : var_("q") {}
  explicit LaurentPoly(std::string var) : var_(std::move(var)) {}
  LaurentPoly(std::string var, TermMap terms);

  static LaurentPoly monomial(const BigInt& coeff, int exponent, std::string var = "q");
  static LaurentPoly constant(const BigInt& coeff, std::string var = "q") {
    return monomial(coeff, 0, std::move(var));
  }
  /// Builds sum_k coeffs[k] * var^(low + k); convenient for small literals.
  static LaurentPoly from_coeffs(std::initializer_list<long> coeffs, int low = 0,
                                 std::string var = "q");

  const std::string& var() const { return var_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  // Degrees of the zero polynomial are undefined; both throw kInvalidArgument.
  int min_degree() const;
  int max_degree() const;
  int span() const { return max_degree() - min_degree(); }

  BigInt coeff(int exponent) const;

  /// Same terms under a different variable label (e.g. q -> t).
  LaurentPoly renamed(std::string var) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const BigInt& scalar);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const BigInt& s) { return a *= s; }
  friend LaurentPoly operator*(const BigInt& s, LaurentPoly a) { return a *= s; }

  // Equality compares terms and the variable label.
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.var_ == b.var_ && a.terms_ == b.terms_;
  }

 private:
  void check_var(const LaurentPoly& other) const;

  std::string var_;
  TermMap terms_;
};

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b);
/// Multiplication by var^k.
LaurentPoly shift(const LaurentPoly& a, int k);
/// Quotient of an exact division; throws kNonExactDivision on a nonzero remainder.
LaurentPoly exact_div(const LaurentPoly& num, const LaurentPoly& den);
/// p(var^k): every exponent multiplied by k (k != 0).
LaurentPoly scale_exponents(const LaurentPoly& p, int k);
/// Floating-point evaluation, for spot checks only.
double eval_float(const LaurentPoly& p, double x);
/// p(x) == p(1/x): symmetric about exponent 0, not merely about its own centre.
bool is_palindromic(const LaurentPoly& p);

/// Laurent polynomial in t and Q, keyed by (t-exponent, Q-exponent).
class BiLaurentPoly {
 public:
  using Exponent = std::pair<int, int>;
  using TermMap = std::map<Exponent, BigInt>;

  BiLaurentPoly() = default;
  explicit BiLaurentPoly(TermMap terms);

  static BiLaurentPoly monomial(const BigInt& coeff, int t_exp, int q_exp);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  BigInt coeff(int t_exp, int q_exp) const;

  /// Substitutes t = -1 and collects powers of Q.
  LaurentPoly at_t_minus_one() const;

  BiLaurentPoly operator-() const;
  BiLaurentPoly& operator+=(const BiLaurentPoly& rhs);
  BiLaurentPoly& operator-=(const BiLaurentPoly& rhs);
  friend BiLaurentPoly operator+(BiLaurentPoly a, const BiLaurentPoly& b) { return a += b; }
  friend BiLaurentPoly operator-(BiLaurentPoly a, const BiLaurentPoly& b) { return a -= b; }
  friend BiLaurentPoly operator*(const BiLaurentPoly& a, const BiLaurentPoly& b);
  friend bool operator==(const BiLaurentPoly& a, const BiLaurentPoly& b) = default;

 private:
  TermMap terms_;
};

/// Exact division in Z[t^{±1}, Q^{±1}]; throws kNonExactDivision otherwise.
BiLaurentPoly exact_div(const BiLaurentPoly& num, const BiLaurentPoly& den);

/// Formal rule c*Q^(2k) -> c*(-1)^k * t^k * Q^(2k), i.e. Q^2 -> -X, X -> tQ^2.
/// Throws kOddExponent if an odd power of Q is present.
BiLaurentPoly substitute_knight(const LaurentPoly& p);

}  // namespace weavekh
