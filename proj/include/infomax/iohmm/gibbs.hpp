#pragma once

#include "infomax/core/config.hpp"
#include "infomax/core/rng.hpp"
#include "infomax/iohmm/glm.hpp"
#include "infomax/iohmm/model.hpp"
#include "infomax/samples.hpp"

#include <optional>
#include <vector>

namespace infomax::iohmm {

struct IoHmmGibbsInit {
  std::vector<int> z;
  IoHmmParams params;
};

/// Gibbs sweep order: per state, weights via Laplace-MH and a Dirichlet
/// transition-row draw from the counts; then a joint latent-path draw;
/// then the initial-state distribution. Retains M/chains samples after
/// config.burn_in sweeps.
ParamSampleSet gibbs_run(const ExperimentLog& log, const ExperimentConfig& config, RngStream& rng,
                         const std::optional<IoHmmGibbsInit>& init = std::nullopt,
                         int chain_id = 0, LaplaceMhStats* stats = nullptr);

struct MglmGibbsInit {
  std::vector<int> z;
  std::vector<GlmWeights> weights;
  Vector pi;
};

/// Mixture-of-GLMs sampler: states are redrawn independently per trial.
ParamSampleSet mglm_gibbs_run(const ExperimentLog& log, const ExperimentConfig& config,
                              RngStream& rng,
                              const std::optional<MglmGibbsInit>& init = std::nullopt,
                              int chain_id = 0, LaplaceMhStats* stats = nullptr);

}  // namespace infomax::iohmm
