#pragma once

// Image of the braid (sigma_1 sigma_2^-1)^n in the Hecke algebra H_3 over
// Z[q^{±1}], expanded in the ordered basis {1, T1, T2, T1T2, T2T1, T1T2T1}.
//
// Two independent routes are provided: the six-term coefficient recursion
// (initial_coeffs / step / coeffs), and a general H_3 multiplication
// (hecke_mul) whose basis table is derived by rewriting words with the
// defining relations. verify_row() checks one against the other.

#include <array>
#include <cstddef>
#include <functional>

#include "weavekh/laurent.hpp"

namespace weavekh::hecke {

enum class Basis : std::size_t { kOne = 0, kT1, kT2, kT1T2, kT2T1, kT1T2T1 };

inline constexpr std::size_t kDim = 6;

/// Coefficients C_{n,*}(q) of rho((T1 T2^-1)^n) = q^-n * sum C_{n,b} b.
/// The q^-n prefactor is implicit; only n is stored.
struct HeckeCoeffs {
  int n = 0;
  LaurentPoly c0, c1, c2, c12, c21, c121;

  friend bool operator==(const HeckeCoeffs&, const HeckeCoeffs&) = default;
};

/// General element of H_3: one coefficient per basis element, no prefactor.
class HeckeElement {
 public:
  HeckeElement();
  explicit HeckeElement(std::array<LaurentPoly, kDim> coeffs) : coeffs_(std::move(coeffs)) {}

  static HeckeElement basis(Basis b);
  static HeckeElement from_coeffs(const HeckeCoeffs& row);

  const LaurentPoly& operator[](Basis b) const { return coeffs_[static_cast<std::size_t>(b)]; }
  LaurentPoly& operator[](Basis b) { return coeffs_[static_cast<std::size_t>(b)]; }
  const std::array<LaurentPoly, kDim>& coeffs() const { return coeffs_; }

  HeckeElement& operator+=(const HeckeElement& rhs);
  HeckeElement& operator*=(const LaurentPoly& scalar);
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend HeckeElement operator*(const LaurentPoly& s, HeckeElement a) { return a *= s; }
  friend bool operator==(const HeckeElement&, const HeckeElement&) = default;

 private:
  std::array<LaurentPoly, kDim> coeffs_;
};

HeckeCoeffs initial_coeffs();
HeckeCoeffs step(const HeckeCoeffs& prev);
/// The n-th row, by n - 1 applications of step(); n >= 1.
HeckeCoeffs coeffs(int n);
/// Streams rows 1..n_max to `sink` in order.
void for_each_row(int n_max, const std::function<void(const HeckeCoeffs&)>& sink);

/// Product in H_3 from the word-rewriting basis table.
HeckeElement hecke_mul(const HeckeElement& a, const HeckeElement& b);
/// Product of two basis elements, reduced to the ordered basis.
const HeckeElement& basis_product(Basis a, Basis b);

/// q * T1 T2^-1 = -(q-1) T1 + T1T2.
HeckeElement scaled_generator();
/// (q * T1 T2^-1)^n by repeated hecke_mul.
HeckeElement oracle_power(int n);
/// True iff coeffs(n) matches oracle_power(n) coefficient by coefficient.
bool verify_row(int n);

}  // namespace weavekh::hecke
