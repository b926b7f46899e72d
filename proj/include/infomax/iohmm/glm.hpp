#pragma once

#include "infomax/core/config.hpp"
#include "infomax/core/rng.hpp"
#include "infomax/core/types.hpp"
#include "infomax/samples.hpp"

#include <functional>

namespace infomax::iohmm {

struct GlmPrior {
  Vector w0;           // over augmented weights
  double sigma0_sq = 10.0;
};

/// A concave log-density to be maximized: value, gradient, Hessian.
struct ConcaveObjective {
  std::function<double(const Vector&)> value;
  std::function<Vector(const Vector&)> grad;
  std::function<Matrix(const Vector&)> hess;
};

struct NewtonResult {
  Vector x;
  Matrix neg_hess;  // -Hessian at the maximum
  bool converged = false;
  int iterations = 0;
};

/// Newton ascent with step halving; throws after max_iter steps without
/// reaching the gradient tolerance.
NewtonResult newton_maximize(const ConcaveObjective& obj, Vector init, double grad_tol = 1e-8,
                             int max_iter = 100);

struct LaplaceMhStats {
  long proposals = 0;
  long accepts = 0;
  double acceptance_rate() const { return proposals ? double(accepts) / proposals : 0.0; }
};

struct LaplaceMhResult {
  Vector w;
  bool accepted = false;
  double alpha = 0.0;  // acceptance probability of the proposal
};

/// One Laplace-proposal Metropolis-Hastings step on an unnormalized
/// log-posterior: find the mode, propose from N(mode, -H^-1), accept with
/// the usual independence-sampler ratio.
LaplaceMhResult laplace_mh_step(const ConcaveObjective& log_post, const Vector& w_old,
                                RngStream& rng);

/// Bernoulli-GLM log posterior over augmented weights. Phi holds one
/// augmented input per row; optional per-trial weights scale the
/// likelihood terms (responsibility-weighted Laplace updates).
ConcaveObjective bernoulli_glm_objective(const Matrix& Phi, const Vector& y, const GlmPrior& prior,
                                         const Vector* trial_weights = nullptr);

/// One Gibbs move for a state's GLM weights: Laplace-MH against the
/// posterior restricted to the trials currently assigned to the state.
/// Zero trials reduce to a prior-only target.
Vector glm_sample_posterior(const Matrix& Phi, const Vector& y, const GlmPrior& prior,
                            const Vector& w_old, RngStream& rng, LaplaceMhStats* stats = nullptr);

/// Posterior of a single Bernoulli GLM fit to all trials (the
/// model-mismatch baseline): a K=1 chain of glm_sample_posterior.
ParamSampleSet glm_mismatch_posterior(const ExperimentLog& log, const GlmPrior& prior, int M,
                                      int burn_in, RngStream& rng, LaplaceMhStats* stats = nullptr);

}  // namespace infomax::iohmm
