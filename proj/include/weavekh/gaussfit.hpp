#pragma once

// Normal-density model of a Betti line. The logarithms of the normalized
// ranks are fitted by least squares with q(x) = -(alpha x^2 - beta x + delta),
// and rho(x) = A exp(q(x)) is normalized to unit mass, giving
// mu = beta / (2 alpha) and sigma = 1 / sqrt(2 alpha).

#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "weavekh/laurent.hpp"

namespace weavekh::gaussfit {

/// Fits use every i with a nonzero rank; zero ranks have no logarithm.
inline constexpr std::string_view kFitPointSet = "nonzero_support";

struct NormalizedPoint {
  int i = 0;
  BigInt rank;
  double value = 0.0;      // rank / total
  double log_value = 0.0;  // ln(rank) - ln(total), from mantissa/exponent splits
};

struct NormalizedBetti {
  int n = 0;
  BigInt total;
  std::vector<NormalizedPoint> points;

  /// Normalized rank at i; 0 where no rank is stored.
  double at(int i) const;
  double sum() const;
};

struct GaussianFit {
  int n = 0;
  double alpha = 0.0;
  double beta = 0.0;
  double delta = 0.0;
  double mu = 0.0;
  double sigma = 0.0;
  double a_n = 0.0;
  double l2 = 0.0;
  double l1 = 0.0;
  std::vector<std::pair<double, double>> fit_points;  // (i, ln normalized rank)
};

struct Deviations {
  double l2 = 0.0;
  double l1 = 0.0;
};

/// Natural logarithm of a positive big integer without overflow.
long double log_bigint(const BigInt& value);

/// Throws kEmptyLine for an empty line and kInvalidArgument for a rank <= 0.
NormalizedBetti normalize(int n, std::span<const std::pair<int, BigInt>> line);

/// Least-squares quadratic through (x, y) pairs. Throws kDegenerateFit with
/// fewer than three distinct abscissae or when the fit is not concave (alpha <= 0).
GaussianFit fit_log_points(int n, std::span<const std::pair<double, double>> points);
GaussianFit fit_quadratic(const NormalizedBetti& nb);

double density(const GaussianFit& fit, double x);

/// L2 and L1 distances between rho(i) and the normalized ranks over
/// i = -2n .. 2n+1.
Deviations deviations(const GaussianFit& fit, const NormalizedBetti& nb);

/// fit_quadratic() followed by deviations(), with l2/l1 filled in.
GaussianFit fit_line(const NormalizedBetti& nb);

}  // namespace weavekh::gaussfit
