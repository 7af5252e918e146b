#pragma once

// Jones polynomial V_{W(3,n)}(t) assembled from the Hecke coefficient row,
// plus a Kauffman-bracket state sum over braid closures used as an
// independent check for small crossing numbers.

#include <vector>

#include "weavekh/diagram.hpp"
#include "weavekh/hecke.hpp"
#include "weavekh/laurent.hpp"

namespace weavekh::jones {

/// Polynomial in z with Laurent-in-q coefficients; by_z_power[k] multiplies z^k.
struct TracePoly {
  std::vector<LaurentPoly> by_z_power;

  friend bool operator==(const TracePoly&, const TracePoly&) = default;
};

/// Linear extension of Tr(1)=1, Tr(T1)=Tr(T2)=z, Tr(T1T2)=Tr(T2T1)=z^2,
/// Tr(T1T2T1)=z((q-1)z+q).
TracePoly trace_h3(const hecke::HeckeElement& e);

struct JonesResult {
  int n = 0;
  LaurentPoly v{"t"};
  int min_deg = 0;
  int max_deg = 0;
  int span = 0;
  /// False when 3 | n: the closure is a three-component link.
  bool is_knot = true;
};

/// V = t^(-n-1) ((1+t)^2 C0 + (1+t)(C1+C2) t^2 + (C12+C21) t^4), with q renamed t.
JonesResult jones_from_coeffs(const hecke::HeckeCoeffs& row);
JonesResult jones_w3(int n);

inline constexpr int kMaxOracleCrossings = 24;

/// Jones polynomial of the braid closure by the bracket state sum, writhe
/// normalised, A^-4 = t. Throws kTooManyCrossings above kMaxOracleCrossings
/// and kFractionalExponent for closures whose polynomial needs t^(1/2).
LaurentPoly kauffman_oracle(const diagram::BraidWord& word);

}  // namespace weavekh::jones
