#pragma once

#include "infomax/core/config.hpp"
#include "infomax/core/rng.hpp"
#include "infomax/core/types.hpp"
#include "infomax/samples.hpp"

namespace infomax::harness {

/// Generative-model state for closed-loop simulation. The IO-HMM latent
/// persists across trials and evolves by the transition matrix
/// independently of the chosen inputs; MLR/MGLM redraw it each trial.
/// State transitions and emissions draw from separate substreams, so the
/// latent trajectory is identical across strategies that share a
/// simulator stream.
struct SimulatorState {
  ModelFamily family = ModelFamily::Mlr;
  ParamBundle truth;
  double sigma_sq = 0.1;  // MLR noise
  int z = -1;             // current latent (IO-HMM)
  RngStream rng_state;
  RngStream rng_emit;

  static SimulatorState create(const ExperimentConfig& config, const RngStream& base);
};

/// Emits one response at input x and advances the latent state.
double simulate_response(SimulatorState& state, const Eigen::Ref<const Vector>& x);

/// The generative truth as a parameter bundle (for metrics).
ParamBundle truth_bundle(const ExperimentConfig& config);

}  // namespace infomax::harness
