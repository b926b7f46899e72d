#pragma once

#include "infomax/core/candidates.hpp"
#include "infomax/core/types.hpp"
#include "infomax/samples.hpp"

namespace infomax {

struct MiOptions {
  int grid_points = 2048;   // trapezoid nodes for continuous outputs
  double span_sigmas = 6.0; // grid extends this many sigmas past extreme means
  int threads = 1;          // candidate-level parallelism in select_input
};

class ExperimentLog;

/// Per-sample predictive descriptors for one candidate input, plus the
/// consensus (arithmetic mean) predictive.
struct PredictiveSet {
  bool binary = false;
  // Binary outputs: one Bernoulli parameter per sample.
  Vector bernoulli_p;
  double consensus_p = 0.0;
  // Continuous outputs: per-sample mixture means (M x K), mixture weights
  // (M x K), shared variance.
  Matrix means;
  Matrix weights;
  double sigma_sq = 0.0;
};

PredictiveSet predictive_set(const ParamSampleSet& samples, const Eigen::Ref<const Vector>& x);

/// Sample-based mutual information between the next output at x and the
/// parameters: the average KL from each per-sample predictive to the
/// consensus predictive, in nats. Continuous outputs use deterministic
/// trapezoid quadrature.
double mutual_information(const ParamSampleSet& samples, const Eigen::Ref<const Vector>& x,
                          const MiOptions& options = {});

/// Fills samples.state_predictive with each sample's distribution over the
/// latent state of the next trial given the log (IO-HMM only; other
/// families need no attachment).
void attach_state_predictives(ParamSampleSet& samples, const ExperimentLog& log);

struct SelectionResult {
  int index = -1;
  Vector mi;  // per-candidate table; NaN for consumed pool rows
};

/// Argmax of mutual information over the candidate set. Ties break to the
/// lowest index; consumed pool rows are skipped.
SelectionResult select_input(const ParamSampleSet& samples, const CandidateSet& candidates,
                             const MiOptions& options = {});

}  // namespace infomax
