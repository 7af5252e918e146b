#include "weavekh/hecke.hpp"

#include <map>
#include <string>

#include "weavekh/error.hpp"

namespace weavekh::hecke {
namespace {

const LaurentPoly& q() {
  static const LaurentPoly p = LaurentPoly::from_coeffs({0, 1});
  return p;
}
const LaurentPoly& q_minus_1() {
  static const LaurentPoly p = LaurentPoly::from_coeffs({-1, 1});
  return p;
}
const LaurentPoly& q_squared() {
  static const LaurentPoly p = LaurentPoly::from_coeffs({0, 0, 1});
  return p;
}
const LaurentPoly& q_minus_1_squared() {
  static const LaurentPoly p = LaurentPoly::from_coeffs({1, -2, 1});
  return p;
}
const LaurentPoly& q_times_q_minus_1() {
  static const LaurentPoly p = LaurentPoly::from_coeffs({0, -1, 1});
  return p;
}

// ---------------------------------------------------------------------------
// Word rewriting in H_3. A word is a string over {'1','2'}; the empty word is
// the unit. Rules:
//   ii  -> (q-1) i + q        (quadratic relation)
//   212 -> 121                (braid relation)
// Irreducible words are exactly "", "1", "2", "12", "21", "121".

using WordSum = std::map<std::string, LaurentPoly>;

void add_to(WordSum& sum, const std::string& word, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = sum.try_emplace(word, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) sum.erase(it);
  }
}

WordSum reduce_word(const std::string& word) {
  for (std::size_t i = 0; i + 1 < word.size(); ++i) {
    if (word[i] == word[i + 1]) {
      const std::string head = word.substr(0, i);
      const std::string tail = word.substr(i + 2);
      WordSum out;
      for (const auto& [w, c] : reduce_word(head + word[i] + tail)) add_to(out, w, q_minus_1() * c);
      for (const auto& [w, c] : reduce_word(head + tail)) add_to(out, w, q() * c);
      return out;
    }
  }
  if (auto pos = word.find("212"); pos != std::string::npos) {
    return reduce_word(word.substr(0, pos) + "121" + word.substr(pos + 3));
  }
  WordSum out;
  add_to(out, word, LaurentPoly::constant(1));
  return out;
}

constexpr std::array<const char*, kDim> kWords = {"", "1", "2", "12", "21", "121"};

Basis basis_of(const std::string& word) {
  for (std::size_t k = 0; k < kDim; ++k) {
    if (word == kWords[k]) return static_cast<Basis>(k);
  }
  throw Error(ErrorCode::kInvalidArgument, "word '" + word + "' is not reduced");
}

using ProductTable = std::array<std::array<HeckeElement, kDim>, kDim>;

ProductTable build_table() {
  ProductTable table;
  for (std::size_t a = 0; a < kDim; ++a) {
    for (std::size_t b = 0; b < kDim; ++b) {
      HeckeElement e;
      for (const auto& [w, c] : reduce_word(std::string(kWords[a]) + kWords[b])) e[basis_of(w)] += c;
      table[a][b] = std::move(e);
    }
  }
  return table;
}

}  // namespace

// ---------------------------------------------------------------------------
// HeckeElement

HeckeElement::HeckeElement() = default;

HeckeElement HeckeElement::basis(Basis b) {
  HeckeElement e;
  e[b] = LaurentPoly::constant(1);
  return e;
}

HeckeElement HeckeElement::from_coeffs(const HeckeCoeffs& row) {
  return HeckeElement({row.c0, row.c1, row.c2, row.c12, row.c21, row.c121});
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& rhs) {
  for (std::size_t k = 0; k < kDim; ++k) coeffs_[k] += rhs.coeffs_[k];
  return *this;
}

HeckeElement& HeckeElement::operator*=(const LaurentPoly& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

// ---------------------------------------------------------------------------
// Recursion

HeckeCoeffs initial_coeffs() {
  HeckeCoeffs row;
  row.n = 1;
  row.c1 = LaurentPoly::from_coeffs({1, -1});
  row.c12 = LaurentPoly::constant(1);
  return row;
}

HeckeCoeffs step(const HeckeCoeffs& prev) {
  if (prev.n < 1) throw Error(ErrorCode::kInvalidArgument, "step() needs a row with n >= 1");
  HeckeCoeffs next;
  next.n = prev.n + 1;
  next.c0 = q_squared() * prev.c21 - q_times_q_minus_1() * prev.c1;
  next.c1 = -(q_minus_1_squared() * prev.c1) - q_minus_1() * prev.c0 + q_squared() * prev.c121;
  next.c2 = q() * prev.c1;
  next.c12 = q_minus_1() * prev.c1 + prev.c0;
  next.c21 = -(q_minus_1() * prev.c2) + q() * prev.c12 - q_minus_1_squared() * prev.c21 +
             q_times_q_minus_1() * prev.c121;
  next.c121 = prev.c2 + q_minus_1() * prev.c21;
  return next;
}

HeckeCoeffs coeffs(int n) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "coeffs() needs n >= 1");
  HeckeCoeffs row = initial_coeffs();
  while (row.n < n) row = step(row);
  return row;
}

void for_each_row(int n_max, const std::function<void(const HeckeCoeffs&)>& sink) {
  if (n_max < 1) return;
  HeckeCoeffs row = initial_coeffs();
  sink(row);
  while (row.n < n_max) {
    row = step(row);
    sink(row);
  }
}

// ---------------------------------------------------------------------------
// Oracle

const HeckeElement& basis_product(Basis a, Basis b) {
  static const ProductTable table = build_table();
  return table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
}

HeckeElement hecke_mul(const HeckeElement& a, const HeckeElement& b) {
  HeckeElement out;
  for (std::size_t i = 0; i < kDim; ++i) {
    if (a.coeffs()[i].is_zero()) continue;
    for (std::size_t j = 0; j < kDim; ++j) {
      if (b.coeffs()[j].is_zero()) continue;
      out += (a.coeffs()[i] * b.coeffs()[j]) *
             HeckeElement(basis_product(static_cast<Basis>(i), static_cast<Basis>(j)));
    }
  }
  return out;
}

HeckeElement scaled_generator() {
  HeckeElement x;
  x[Basis::kT1] = -q_minus_1();
  x[Basis::kT1T2] = LaurentPoly::constant(1);
  return x;
}

HeckeElement oracle_power(int n) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "oracle_power() needs n >= 1");
  const HeckeElement x = scaled_generator();
  HeckeElement acc = x;
  for (int k = 1; k < n; ++k) acc = hecke_mul(acc, x);
  return acc;
}

bool verify_row(int n) { return HeckeElement::from_coeffs(coeffs(n)) == oracle_power(n); }

}  // namespace weavekh::hecke
