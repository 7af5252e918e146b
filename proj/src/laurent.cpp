#include "weavekh/laurent.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "weavekh/error.hpp"

namespace weavekh {
namespace {

template <typename Map>
void erase_zeros(Map& terms) {
  std::erase_if(terms, [](const auto& kv) { return kv.second == 0; });
}

template <typename Map, typename Key>
void accumulate(Map& terms, const Key& key, const BigInt& value) {
  if (value == 0) return;
  auto [it, inserted] = terms.try_emplace(key, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) terms.erase(it);
  }
}

// Dense convolution for the univariate product. Both inputs are nonzero.
LaurentPoly::TermMap dense_product(const LaurentPoly::TermMap& a, const LaurentPoly::TermMap& b) {
  const int a_lo = a.begin()->first;
  const int b_lo = b.begin()->first;
  const std::size_t a_len = static_cast<std::size_t>(a.rbegin()->first - a_lo) + 1;
  const std::size_t b_len = static_cast<std::size_t>(b.rbegin()->first - b_lo) + 1;

  std::vector<BigInt> out(a_len + b_len - 1);
  for (const auto& [ea, ca] : a) {
    const std::size_t off = static_cast<std::size_t>(ea - a_lo);
    for (const auto& [eb, cb] : b) {
      mpz_addmul(out[off + static_cast<std::size_t>(eb - b_lo)].get_mpz_t(), ca.get_mpz_t(),
                 cb.get_mpz_t());
    }
  }

  LaurentPoly::TermMap terms;
  for (std::size_t k = 0; k < out.size(); ++k) {
    if (out[k] != 0) terms.emplace_hint(terms.end(), a_lo + b_lo + static_cast<int>(k), std::move(out[k]));
  }
  return terms;
}

}  // namespace

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly::LaurentPoly(std::string var, TermMap terms)
    : var_(std::move(var)), terms_(std::move(terms)) {
  erase_zeros(terms_);
}

LaurentPoly LaurentPoly::monomial(const BigInt& coeff, int exponent, std::string var) {
  LaurentPoly p(std::move(var));
  if (coeff != 0) p.terms_.emplace(exponent, coeff);
  return p;
}

LaurentPoly LaurentPoly::from_coeffs(std::initializer_list<long> coeffs, int low, std::string var) {
  TermMap terms;
  int e = low;
  for (long c : coeffs) {
    if (c != 0) terms.emplace(e, BigInt(c));
    ++e;
  }
  return LaurentPoly(std::move(var), std::move(terms));
}

int LaurentPoly::min_degree() const {
  if (terms_.empty()) throw Error(ErrorCode::kInvalidArgument, "degree of the zero polynomial");
  return terms_.begin()->first;
}

int LaurentPoly::max_degree() const {
  if (terms_.empty()) throw Error(ErrorCode::kInvalidArgument, "degree of the zero polynomial");
  return terms_.rbegin()->first;
}

BigInt LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? BigInt(0) : it->second;
}

LaurentPoly LaurentPoly::renamed(std::string var) const {
  LaurentPoly p(*this);
  p.var_ = std::move(var);
  return p;
}

void LaurentPoly::check_var(const LaurentPoly& other) const {
  if (var_ != other.var_) {
    throw Error(ErrorCode::kVariableMismatch, "'" + var_ + "' vs '" + other.var_ + "'");
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p(*this);
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  check_var(rhs);
  for (const auto& [e, c] : rhs.terms_) accumulate(terms_, e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  check_var(rhs);
  for (const auto& [e, c] : rhs.terms_) accumulate(terms_, e, BigInt(-c));
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const BigInt& scalar) {
  if (scalar == 0) {
    terms_.clear();
  } else {
    for (auto& [e, c] : terms_) c *= scalar;
  }
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_var(b);
  if (a.is_zero() || b.is_zero()) return LaurentPoly(a.var_);
  if (a.size() == 1 || b.size() == 1) {
    const auto& single = a.size() == 1 ? a : b;
    const auto& other = a.size() == 1 ? b : a;
    const auto& [e, c] = *single.terms_.begin();
    LaurentPoly::TermMap terms;
    for (const auto& [eo, co] : other.terms_) terms.emplace_hint(terms.end(), eo + e, co * c);
    return LaurentPoly(a.var_, std::move(terms));
  }
  return LaurentPoly(a.var_, dense_product(a.terms_, b.terms_));
}

// ---------------------------------------------------------------------------
// Free functions

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }

LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

LaurentPoly shift(const LaurentPoly& a, int k) {
  LaurentPoly::TermMap terms;
  for (const auto& [e, c] : a.terms()) terms.emplace_hint(terms.end(), e + k, c);
  return LaurentPoly(a.var(), std::move(terms));
}

LaurentPoly exact_div(const LaurentPoly& num, const LaurentPoly& den) {
  if (num.var() != den.var()) {
    throw Error(ErrorCode::kVariableMismatch, "'" + num.var() + "' vs '" + den.var() + "'");
  }
  if (den.is_zero()) throw Error(ErrorCode::kInvalidArgument, "division by the zero polynomial");
  if (num.is_zero()) return LaurentPoly(num.var());

  // Ascending synthetic division. An exact quotient has exponents in
  // [min(num) - min(den), max(num) - max(den)]; leaving that window means
  // the remainder cannot vanish.
  const auto& [den_lo, den_lead] = *den.terms().begin();
  const int q_lo = num.min_degree() - den_lo;
  const int q_hi = num.max_degree() - den.max_degree();

  LaurentPoly::TermMap rem = num.terms();
  LaurentPoly::TermMap quot;
  BigInt q_coeff;
  while (!rem.empty()) {
    const auto [e, c] = *rem.begin();
    const int qe = e - den_lo;
    if (qe < q_lo || qe > q_hi || !mpz_divisible_p(c.get_mpz_t(), den_lead.get_mpz_t())) {
      throw Error(ErrorCode::kNonExactDivision, "nonzero remainder");
    }
    mpz_divexact(q_coeff.get_mpz_t(), c.get_mpz_t(), den_lead.get_mpz_t());
    for (const auto& [de, dc] : den.terms()) accumulate(rem, qe + de, BigInt(-q_coeff * dc));
    quot.emplace_hint(quot.end(), qe, q_coeff);
  }
  return LaurentPoly(num.var(), std::move(quot));
}

LaurentPoly scale_exponents(const LaurentPoly& p, int k) {
  if (k == 0) throw Error(ErrorCode::kInvalidArgument, "exponent scale must be nonzero");
  LaurentPoly::TermMap terms;
  for (const auto& [e, c] : p.terms()) terms.emplace(e * k, c);
  return LaurentPoly(p.var(), std::move(terms));
}

double eval_float(const LaurentPoly& p, double x) {
  if (p.is_zero()) return 0.0;
  if (x == 0.0) {
    if (p.min_degree() < 0) {
      throw Error(ErrorCode::kZeroWithNegativeExponent, "evaluation at 0");
    }
    return p.coeff(0).get_d();
  }
  // Coefficients beyond double range lose precision; this is a spot-check tool.
  double sum = 0.0;
  for (const auto& [e, c] : p.terms()) sum += c.get_d() * std::pow(x, e);
  return sum;
}

bool is_palindromic(const LaurentPoly& p) {
  for (const auto& [e, c] : p.terms()) {
    if (p.coeff(-e) != c) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// BiLaurentPoly

BiLaurentPoly::BiLaurentPoly(TermMap terms) : terms_(std::move(terms)) { erase_zeros(terms_); }

BiLaurentPoly BiLaurentPoly::monomial(const BigInt& coeff, int t_exp, int q_exp) {
  BiLaurentPoly p;
  if (coeff != 0) p.terms_.emplace(Exponent{t_exp, q_exp}, coeff);
  return p;
}

BigInt BiLaurentPoly::coeff(int t_exp, int q_exp) const {
  auto it = terms_.find({t_exp, q_exp});
  return it == terms_.end() ? BigInt(0) : it->second;
}

LaurentPoly BiLaurentPoly::at_t_minus_one() const {
  LaurentPoly::TermMap out;
  for (const auto& [key, c] : terms_) {
    accumulate(out, key.second, key.first % 2 == 0 ? c : BigInt(-c));
  }
  return LaurentPoly("Q", std::move(out));
}

BiLaurentPoly BiLaurentPoly::operator-() const {
  BiLaurentPoly p(*this);
  for (auto& [key, c] : p.terms_) c = -c;
  return p;
}

BiLaurentPoly& BiLaurentPoly::operator+=(const BiLaurentPoly& rhs) {
  for (const auto& [key, c] : rhs.terms_) accumulate(terms_, key, c);
  return *this;
}

BiLaurentPoly& BiLaurentPoly::operator-=(const BiLaurentPoly& rhs) {
  for (const auto& [key, c] : rhs.terms_) accumulate(terms_, key, BigInt(-c));
  return *this;
}

BiLaurentPoly operator*(const BiLaurentPoly& a, const BiLaurentPoly& b) {
  BiLaurentPoly::TermMap out;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      accumulate(out, BiLaurentPoly::Exponent{ka.first + kb.first, ka.second + kb.second},
                 BigInt(ca * cb));
    }
  }
  return BiLaurentPoly(std::move(out));
}

BiLaurentPoly exact_div(const BiLaurentPoly& num, const BiLaurentPoly& den) {
  if (den.is_zero()) throw Error(ErrorCode::kInvalidArgument, "division by the zero polynomial");
  if (num.is_zero()) return {};

  // Division by the lexicographically lowest term (t first, then Q). Lex order
  // on Laurent monomials is multiplicative, so each step strictly raises the
  // lowest remaining term; an exact quotient lives inside the per-variable
  // degree box computed below.
  auto bounds = [](const BiLaurentPoly& p) {
    int t_lo = p.terms().begin()->first.first, t_hi = p.terms().rbegin()->first.first;
    int q_lo = p.terms().begin()->first.second, q_hi = q_lo;
    for (const auto& [key, c] : p.terms()) {
      q_lo = std::min(q_lo, key.second);
      q_hi = std::max(q_hi, key.second);
    }
    return std::array<int, 4>{t_lo, t_hi, q_lo, q_hi};
  };
  const auto nb = bounds(num);
  const auto db = bounds(den);
  const auto& [lead_key, lead] = *den.terms().begin();

  BiLaurentPoly::TermMap rem = num.terms();
  BiLaurentPoly::TermMap quot;
  BigInt q_coeff;
  while (!rem.empty()) {
    const auto [key, c] = *rem.begin();
    const int qt = key.first - lead_key.first;
    const int qq = key.second - lead_key.second;
    const bool in_box = qt >= nb[0] - db[0] && qt <= nb[1] - db[1] && qq >= nb[2] - db[2] &&
                        qq <= nb[3] - db[3];
    if (!in_box || !mpz_divisible_p(c.get_mpz_t(), lead.get_mpz_t())) {
      throw Error(ErrorCode::kNonExactDivision, "nonzero remainder");
    }
    mpz_divexact(q_coeff.get_mpz_t(), c.get_mpz_t(), lead.get_mpz_t());
    for (const auto& [dk, dc] : den.terms()) {
      accumulate(rem, BiLaurentPoly::Exponent{qt + dk.first, qq + dk.second}, BigInt(-q_coeff * dc));
    }
    quot.emplace(BiLaurentPoly::Exponent{qt, qq}, q_coeff);
  }
  return BiLaurentPoly(std::move(quot));
}

BiLaurentPoly substitute_knight(const LaurentPoly& p) {
  BiLaurentPoly::TermMap out;
  for (const auto& [e, c] : p.terms()) {
    if (e % 2 != 0) {
      throw Error(ErrorCode::kOddExponent, "Q^" + std::to_string(e) + " in knight substitution");
    }
    const int k = e / 2;
    out.emplace(BiLaurentPoly::Exponent{k, e}, k % 2 == 0 ? c : BigInt(-c));
  }
  return BiLaurentPoly(std::move(out));
}

}  // namespace weavekh
