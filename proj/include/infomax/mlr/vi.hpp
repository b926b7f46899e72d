#pragma once

#include "infomax/core/config.hpp"
#include "infomax/core/rng.hpp"
#include "infomax/core/types.hpp"
#include "infomax/samples.hpp"

#include <vector>

namespace infomax::mlr {

/// Mean-field variational state: per-trial responsibilities and a Gaussian
/// posterior per state weight vector.
struct MlrVariationalState {
  Matrix phi;                 // T x K, rows on the simplex
  Matrix mu;                  // K x D posterior means
  std::vector<Matrix> Sigma;  // K posterior covariances
  int iterations = 0;
  bool converged = false;
  double final_loglik = 0.0;
};

/// Coordinate-ascent updates until the data log-likelihood stabilizes
/// (config.vi_tol) or config.vi_max_iters is hit. The rng only perturbs
/// the responsibility initialization away from the symmetric fixed point.
MlrVariationalState vi_run(const ExperimentLog& log, const ExperimentConfig& config, RngStream& rng);

/// Draws M parameter bundles: weights from the Gaussian posteriors, pi
/// from assignment proportions under the responsibilities.
ParamSampleSet vi_sample(const MlrVariationalState& state, double sigma_sq, int M, RngStream& rng);

}  // namespace infomax::mlr
