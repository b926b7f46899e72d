#pragma once

#include "infomax/core/candidates.hpp"
#include "infomax/core/config.hpp"
#include "infomax/core/rng.hpp"
#include "infomax/core/types.hpp"
#include "infomax/metrics.hpp"
#include "infomax/samples.hpp"

#include <optional>
#include <string>
#include <vector>

namespace infomax::harness {

struct RunResult {
  ExperimentLog log;
  std::vector<MetricRow> metrics;
  std::vector<int> selections;
  SelectionHistogram histogram;
  std::uint64_t config_hash = 0;
  std::uint64_t seed = 0;
};

/// Closed-loop simulation: select (warm-up random, then per strategy),
/// observe from the generative truth, refit, record metrics.
RunResult run_closed_loop(const ExperimentConfig& config, RngStream& rng);

/// Pool-based loop: selection reveals and consumes a stored row. Metrics
/// are computed against the given reference bundle (a full-pool fit).
RunResult run_pool(const ExperimentConfig& config, CandidateSet pool, RngStream& rng,
                   const ParamBundle& reference);

struct CurveRow {
  std::string strategy;
  int t = 0;
  std::string metric;
  double mean = 0.0;
  double sem = 0.0;
  double lo = 0.0;  // 95% normal-approximation CI
  double hi = 0.0;
  int n = 0;
};

struct ReplicatedResult {
  std::vector<RunResult> runs;
  std::vector<CurveRow> curves;
};

/// Replications with distinct seeds, aggregated into per-trial mean and
/// 95% CI curves. Runs execute concurrently on up to `threads` workers
/// (0 = hardware concurrency); results are merged in replication order.
ReplicatedResult run_replicated(const ExperimentConfig& config, int n_reps, RngStream& rng,
                                int threads = 0,
                                const std::optional<CandidateSet>& pool = std::nullopt,
                                const ParamBundle* reference = nullptr);

/// C independent Gibbs chains, each retaining M/C samples; merged in chain
/// order. Runs chains on separate threads when threads != 1.
ParamSampleSet run_parallel_chains(const ExperimentLog& log, const ExperimentConfig& config, int C,
                                   RngStream& rng, int threads = 0);

struct DecodingEvalRow {
  std::string model;  // "infomax-gibbs", "random", "truth"
  double accuracy = 0.0;
};

struct DecodingEvalResult {
  std::vector<DecodingEvalRow> rows;
  std::vector<int> true_states;          // eval trials
  Matrix infomax_posteriors;             // eval_T x K
  Matrix random_posteriors;
  Matrix truth_posteriors;
};

/// Trains one model with infomax-Gibbs selection and one with random
/// selection (train_T trials each), then decodes eval_T fresh trials with
/// both and with the generative truth.
DecodingEvalResult run_state_decoding_eval(const ExperimentConfig& config, int train_T, int eval_T,
                                           RngStream& rng);

/// Refits the posterior for the configured family with the configured
/// sampler role. Used by the loop and by benchmarks.
ParamSampleSet refit_gibbs(const ExperimentLog& log, const ExperimentConfig& config,
                           RngStream& rng);

std::vector<CurveRow> aggregate_curves(const std::vector<RunResult>& runs,
                                       const std::string& strategy);

}  // namespace infomax::harness
