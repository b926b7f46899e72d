#pragma once

#include "infomax/core/candidates.hpp"
#include "infomax/core/types.hpp"

#include <cstdint>
#include <string>

namespace infomax {

/// Full experiment description: model family and size, inference budgets,
/// prior hyperparameters, selection strategy, candidate set, and (for
/// simulations) the generative truth. Persisted as a flat key=value file;
/// see the repository README for the schema.
struct ExperimentConfig {
  ModelFamily family = ModelFamily::Mlr;
  int K = 1;
  int D = 1;
  int T = 0;
  int M = 500;        // retained posterior samples
  int burn_in = 100;  // discarded sweeps (per chain)
  int chains = 1;

  double sigma_sq = 0.1;    // MLR observation noise (fixed, known)
  Vector w0;                // prior mean; empty means zeros
  double sigma0_sq = 10.0;  // prior variance
  double alpha = 1.0;       // Dirichlet prior concentration

  Strategy strategy = Strategy::Random;
  CandidateSpec candidates;

  int warmup = 10;  // random trials before infomax kicks in
  int refit_every = 1;
  int metric_cadence = 1;

  int vi_draws = 10;  // Monte Carlo draws for VI likelihood expectations
  int vi_max_iters = 500;
  double vi_tol = 1e-6;

  std::uint64_t seed = 1;
  int threads = 0;  // 0 = hardware concurrency (replication/chain level)

  // Generative truth for simulations. Weights are one state per row:
  // MLR rows are w_k; GLM-family rows are [slope..., bias].
  Matrix true_weights;
  Vector true_pi;
  Matrix true_trans;

  std::string preset;  // name, when built from a preset

  void validate() const;
  int weight_cols() const;  // D for MLR, D+1 for GLM families

  Vector prior_mean(int dim) const;  // w0 resized/zero-filled to dim

  void save(const std::string& path) const;
  static ExperimentConfig load(const std::string& path);

  std::string serialize() const;
  static ExperimentConfig deserialize(const std::string& text);

  std::uint64_t hash() const;
};

}  // namespace infomax
