#include "infomax/randkit/special.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace infomax {

double digamma(double x) {
  if (!(x > 0.0)) throw std::invalid_argument("digamma: x must be positive");
  double result = 0.0;
  // Shift into the asymptotic regime.
  while (x < 10.0) {
    result -= 1.0 / x;
    x += 1.0;
  }
  // Asymptotic series with Bernoulli-number coefficients.
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  result += std::log(x) - 0.5 * inv;
  result -= inv2 * (1.0 / 12.0 - inv2 * (1.0 / 120.0 - inv2 * (1.0 / 252.0 - inv2 * (1.0 / 240.0 - inv2 / 132.0))));
  return result;
}

double log_sum_exp(const Eigen::Ref<const Vector>& v) {
  if (v.size() == 0) throw std::invalid_argument("log_sum_exp: empty vector");
  const double m = v.maxCoeff();
  if (!std::isfinite(m)) {
    // All -inf (or a stray +inf/NaN, which propagates).
    return m;
  }
  double s = 0.0;
  for (int i = 0; i < v.size(); ++i) s += std::exp(v[i] - m);
  return m + std::log(s);
}

double log_normal_pdf(double y, double mean, double var) {
  const double r = y - mean;
  return -0.5 * std::log(2.0 * std::numbers::pi * var) - r * r / (2.0 * var);
}

double sigmoid(double eta) {
  if (eta >= 0.0) return 1.0 / (1.0 + std::exp(-eta));
  const double e = std::exp(eta);
  return e / (1.0 + e);
}

double log_sigmoid(double eta) {
  // -softplus(-eta)
  if (eta >= 0.0) return -std::log1p(std::exp(-eta));
  return eta - std::log1p(std::exp(eta));
}

}  // namespace infomax
