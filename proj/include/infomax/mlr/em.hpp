#pragma once

#include "infomax/core/rng.hpp"
#include "infomax/core/types.hpp"
#include "infomax/mlr/model.hpp"

namespace infomax::mlr {

struct EmOptions {
  int max_iters = 500;
  double tol = 1e-6;
  int n_starts = 4;
};

struct MlrEmResult {
  MlrParams params;
  double loglik = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Maximum-likelihood fit of a K-state MLR (weights, mixing, shared noise
/// variance) by EM with multiple perturbed starts.
MlrEmResult em_fit(const Matrix& X, const Vector& Y, int K, const EmOptions& opts, RngStream& rng);

double em_loglik(const Matrix& X, const Vector& Y, const MlrParams& params);

}  // namespace infomax::mlr
