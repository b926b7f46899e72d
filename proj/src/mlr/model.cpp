#include "infomax/mlr/model.hpp"

#include "infomax/randkit/special.hpp"

#include <cmath>
#include <stdexcept>

namespace infomax::mlr {

void MlrParams::validate() const {
  if (weights.rows() < 1) throw std::invalid_argument("mlr params: K must be >= 1");
  if (pi.size() != weights.rows()) throw std::invalid_argument("mlr params: pi size != K");
  if ((pi.array() < -1e-12).any() || std::abs(pi.sum() - 1.0) > 1e-9) {
    throw std::invalid_argument("mlr params: pi not on the simplex");
  }
  if (!(sigma_sq > 0.0)) throw std::invalid_argument("mlr params: sigma_sq must be positive");
}

double component_loglik(const Eigen::Ref<const Vector>& x, double y,
                        const Eigen::Ref<const Vector>& w, double sigma_sq) {
  if (!(sigma_sq > 0.0)) throw std::invalid_argument("component_loglik: sigma_sq must be positive");
  return log_normal_pdf(y, w.dot(x), sigma_sq);
}

double GaussianMixture1d::pdf(double y) const {
  double acc = 0.0;
  for (int k = 0; k < means.size(); ++k) {
    acc += weights[k] * std::exp(-0.5 * (y - means[k]) * (y - means[k]) / sigma_sq);
  }
  return acc / std::sqrt(2.0 * M_PI * sigma_sq);
}

double GaussianMixture1d::log_pdf(double y) const {
  Vector terms(means.size());
  for (int k = 0; k < means.size(); ++k) {
    terms[k] = (weights[k] > 0.0 ? std::log(weights[k]) : -std::numeric_limits<double>::infinity()) +
               log_normal_pdf(y, means[k], sigma_sq);
  }
  return log_sum_exp(terms);
}

GaussianMixture1d marginal_predictive(const Eigen::Ref<const Vector>& x, const MlrParams& params) {
  params.validate();
  GaussianMixture1d mix;
  mix.means = params.weights * x;
  mix.weights = params.pi;
  mix.sigma_sq = params.sigma_sq;
  return mix;
}

}  // namespace infomax::mlr
