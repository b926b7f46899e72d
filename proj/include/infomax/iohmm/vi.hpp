#pragma once

#include "infomax/core/config.hpp"
#include "infomax/core/rng.hpp"
#include "infomax/iohmm/model.hpp"
#include "infomax/samples.hpp"

#include <vector>

namespace infomax::iohmm {

/// Mean-field variational posteriors: Dirichlet over the initial state
/// distribution and each transition row, Gaussian (Laplace) over each
/// state's augmented GLM weights, plus the latent-state marginals from the
/// last forward-backward pass.
struct IoHmmVariationalState {
  Vector alpha0;                  // q(pi0)
  Matrix alphaA;                  // row j: q(A_{j,:})
  Matrix w_mean;                  // K x (D+1), augmented rows [slope..., -bias]
  std::vector<Matrix> w_cov;      // K covariances (augmented coordinates)
  Matrix unary;                   // T x K
  std::vector<Matrix> pairwise;   // T-1 of K x K
  int iterations = 0;
  bool converged = false;
  double final_loglik = 0.0;
};

IoHmmVariationalState vi_run(const ExperimentLog& log, const ExperimentConfig& config,
                             RngStream& rng);

/// M independent draws from the variational posteriors.
ParamSampleSet vi_sample(const IoHmmVariationalState& state, int M, RngStream& rng);

}  // namespace infomax::iohmm
