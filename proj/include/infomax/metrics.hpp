#pragma once

#include "infomax/core/candidates.hpp"
#include "infomax/core/rng.hpp"
#include "infomax/core/types.hpp"
#include "infomax/mlr/em.hpp"
#include "infomax/samples.hpp"

#include <string>
#include <vector>

namespace infomax {

/// Posterior entropy proxy: log det of the sample covariance of the
/// flattened bundles, with a 1e-10 diagonal jitter so degenerate sample
/// sets stay finite.
double posterior_entropy(const ParamSampleSet& samples);

struct AlignedRmse {
  double weights = 0.0;
  double pi = 0.0;
  double trans = 0.0;             // IO-HMM only; NaN otherwise
  std::vector<int> permutation;   // applied to the estimate's states
};

/// RMSE per parameter block after the single state permutation that
/// minimizes weight RMSE (applied jointly to weights, pi, and both axes
/// of the transition matrix).
AlignedRmse aligned_rmse(const ParamBundle& estimate, const ParamBundle& truth);

struct BicResult {
  double bic = 0.0;
  double loglik = 0.0;
  bool em_converged = true;
  mlr::MlrParams fit;
};

/// BIC for a K-state MLR with k = K*D + (K-1) + 1 free parameters, the
/// likelihood maximized by EM. Only the MLR family is supported.
BicResult bic(const ExperimentLog& log, ModelFamily family, int K, RngStream& rng,
              const mlr::EmOptions& opts = {});

struct MetricRow {
  int t = 0;
  std::string strategy;
  double entropy = 0.0;
  double rmse_w = 0.0;
  double rmse_trans = 0.0;
  double rmse_pi = 0.0;
  int selected_idx = -1;
  Vector selected_x;
  double wall_ms = 0.0;
};

struct HistogramBucket {
  std::string kind;  // "index", "angle_deg", "abs_mag"
  double key = 0.0;
  long count = 0;
};

struct SelectionHistogram {
  std::vector<long> counts;  // per candidate index
  std::vector<HistogramBucket> buckets;
};

/// Counts of selected candidate indices plus geometry-aware summaries:
/// angle buckets for circle grids, |x| buckets (width 0.5) for line grids.
SelectionHistogram selection_histogram(const std::vector<int>& selections,
                                       const CandidateSet& candidates);

}  // namespace infomax
