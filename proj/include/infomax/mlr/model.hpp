#pragma once

#include "infomax/core/types.hpp"

namespace infomax::mlr {

/// Mixture-of-linear-regressions parameters: state weights (one row per
/// state), mixing probabilities, and a shared observation noise variance.
struct MlrParams {
  Matrix weights;  // K x D
  Vector pi;       // K, on the simplex
  double sigma_sq = 1.0;

  int K() const { return static_cast<int>(weights.rows()); }
  int D() const { return static_cast<int>(weights.cols()); }
  void validate() const;
};

/// log N(y | w.x, sigma_sq)
double component_loglik(const Eigen::Ref<const Vector>& x, double y,
                        const Eigen::Ref<const Vector>& w, double sigma_sq);

/// Mixture of Gaussians over the scalar output, with one component per
/// state and a shared variance.
struct GaussianMixture1d {
  Vector means;
  Vector weights;
  double sigma_sq = 1.0;

  double pdf(double y) const;
  double log_pdf(double y) const;
};

/// Predictive p(y | x, params), the latent marginalized out.
GaussianMixture1d marginal_predictive(const Eigen::Ref<const Vector>& x, const MlrParams& params);

}  // namespace infomax::mlr
