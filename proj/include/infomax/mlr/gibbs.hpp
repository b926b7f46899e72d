#pragma once

#include "infomax/core/config.hpp"
#include "infomax/core/rng.hpp"
#include "infomax/core/types.hpp"
#include "infomax/mlr/model.hpp"
#include "infomax/samples.hpp"

#include <optional>
#include <vector>

namespace infomax::mlr {

struct MlrGibbsState {
  std::vector<int> z;  // 0-based state per trial
  MlrParams params;
};

/// Latent posteriors p(z_t = k | y_t, x_t, params), one row per trial.
Matrix z_posteriors(const Matrix& X, const Vector& Y, const MlrParams& params);

/// Samples every z_t from its conditional.
std::vector<int> gibbs_z_step(const ExperimentLog& log, const MlrParams& params, RngStream& rng);

/// pi | z ~ Dir(n_k + alpha) with the flat default alpha = 1.
Vector gibbs_pi_step(const std::vector<int>& z, int K, RngStream& rng, double alpha = 1.0);

/// Conjugate draw of w_k from the trials currently assigned to state k.
/// An empty state returns a prior draw.
Vector gibbs_w_step(const Matrix& X, const Vector& Y, const std::vector<int>& z, int k,
                    const Vector& w0, double sigma0_sq, double sigma_sq, RngStream& rng);

/// Conjugate posterior moments for the linear-Gaussian weight update
/// (information form): Sigma' = (I/sigma0_sq + X'X/sigma_sq)^-1,
/// mean = Sigma' (w0/sigma0_sq + X'y/sigma_sq).
void conjugate_posterior(const Matrix& Xk, const Vector& Yk, const Vector& w0, double sigma0_sq,
                         double sigma_sq, Vector* mean, Matrix* cov);

/// Full Gibbs run: z/pi/w sweeps, M retained samples after burn_in.
/// Optional init pins the starting state (tests, warm starts); otherwise
/// z is uniform, pi uniform, and weights are prior draws.
ParamSampleSet gibbs_run(const ExperimentLog& log, const ExperimentConfig& config, RngStream& rng,
                         const std::optional<MlrGibbsState>& init = std::nullopt, int chain_id = 0);

}  // namespace infomax::mlr
