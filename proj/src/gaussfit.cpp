#include "weavekh/gaussfit.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <set>
#include <string>

#include "weavekh/error.hpp"

namespace weavekh::gaussfit {

double NormalizedBetti::at(int i) const {
  for (const auto& p : points) {
    if (p.i == i) return p.value;
  }
  return 0.0;
}

double NormalizedBetti::sum() const {
  long double s = 0.0L;
  for (const auto& p : points) s += p.value;
  return static_cast<double>(s);
}

long double log_bigint(const BigInt& value) {
  if (value <= 0) throw Error(ErrorCode::kInvalidArgument, "logarithm of a non-positive integer");
  long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, value.get_mpz_t());
  return std::log(static_cast<long double>(mantissa)) +
         static_cast<long double>(exponent) * std::numbers::ln2_v<long double>;
}

NormalizedBetti normalize(int n, std::span<const std::pair<int, BigInt>> line) {
  if (line.empty()) throw Error(ErrorCode::kEmptyLine, "no ranks to normalize");
  NormalizedBetti nb;
  nb.n = n;
  nb.total = 0;
  for (const auto& [i, r] : line) {
    if (r <= 0) throw Error(ErrorCode::kInvalidArgument, "rank at i=" + std::to_string(i) + " is not positive");
    nb.total += r;
  }
  const long double log_total = log_bigint(nb.total);
  nb.points.reserve(line.size());
  for (const auto& [i, r] : line) {
    const mpq_class ratio(r, nb.total);
    nb.points.push_back({i, r, ratio.get_d(), static_cast<double>(log_bigint(r) - log_total)});
  }
  return nb;
}

GaussianFit fit_log_points(int n, std::span<const std::pair<double, double>> points) {
  std::set<double> distinct;
  for (const auto& [x, y] : points) distinct.insert(x);
  if (distinct.size() < 3) {
    throw Error(ErrorCode::kDegenerateFit, "need at least three distinct points, got " +
                                               std::to_string(distinct.size()));
  }

  // Normal equations in the centered variable u = x - m.
  long double m = 0.0L;
  for (const auto& [x, y] : points) m += x;
  m /= static_cast<long double>(points.size());

  Eigen::Matrix<long double, 3, 3> normal = Eigen::Matrix<long double, 3, 3>::Zero();
  Eigen::Matrix<long double, 3, 1> rhs = Eigen::Matrix<long double, 3, 1>::Zero();
  for (const auto& [x, y] : points) {
    const long double u = x - m;
    const long double powers[3] = {1.0L, u, u * u};
    for (int r = 0; r < 3; ++r) {
      rhs(r) += powers[r] * y;
      for (int c = 0; c < 3; ++c) normal(r, c) += powers[r] * powers[c];
    }
  }
  const auto lu = normal.fullPivLu();
  if (lu.rank() < 3) throw Error(ErrorCode::kDegenerateFit, "singular normal equations");
  const Eigen::Matrix<long double, 3, 1> k = lu.solve(rhs);

  // y = k0 + k1 (x - m) + k2 (x - m)^2 = -(alpha x^2 - beta x + delta)
  const long double alpha = -k(2);
  const long double beta = k(1) - 2.0L * k(2) * m;
  const long double delta = -(k(0) - k(1) * m + k(2) * m * m);
  if (!(alpha > 0.0L)) {
    throw Error(ErrorCode::kDegenerateFit, "fitted quadratic is not concave (alpha <= 0)");
  }

  GaussianFit fit;
  fit.n = n;
  fit.alpha = static_cast<double>(alpha);
  fit.beta = static_cast<double>(beta);
  fit.delta = static_cast<double>(delta);
  fit.mu = static_cast<double>(beta / (2.0L * alpha));
  fit.sigma = static_cast<double>(1.0L / std::sqrt(2.0L * alpha));
  fit.a_n = static_cast<double>(std::exp(-(beta * beta / (4.0L * alpha) - delta)) *
                                std::sqrt(alpha / std::numbers::pi_v<long double>));
  fit.fit_points.assign(points.begin(), points.end());
  return fit;
}

GaussianFit fit_quadratic(const NormalizedBetti& nb) {
  std::vector<std::pair<double, double>> pts;
  pts.reserve(nb.points.size());
  for (const auto& p : nb.points) pts.emplace_back(p.i, p.log_value);
  return fit_log_points(nb.n, pts);
}

double density(const GaussianFit& fit, double x) {
  return fit.a_n * std::exp(-(fit.alpha * x * x - fit.beta * x + fit.delta));
}

Deviations deviations(const GaussianFit& fit, const NormalizedBetti& nb) {
  long double sq = 0.0L;
  long double abs_sum = 0.0L;
  for (int i = -2 * nb.n; i <= 2 * nb.n + 1; ++i) {
    const long double diff = density(fit, i) - nb.at(i);
    sq += diff * diff;
    abs_sum += std::fabs(diff);
  }
  return {static_cast<double>(std::sqrt(sq)), static_cast<double>(abs_sum)};
}

GaussianFit fit_line(const NormalizedBetti& nb) {
  GaussianFit fit = fit_quadratic(nb);
  const auto dev = deviations(fit, nb);
  fit.l2 = dev.l2;
  fit.l1 = dev.l1;
  return fit;
}

}  // namespace weavekh::gaussfit
