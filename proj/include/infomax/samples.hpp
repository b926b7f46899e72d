#pragma once

#include "infomax/core/types.hpp"

#include <vector>

namespace infomax {

/// One posterior draw of a parameter bundle.
///   Mlr:   weights K x D, pi = mixing, trans empty
///   IoHmm: weights K x (D+1) rows [slope..., bias], pi = initial state dist,
///          trans = K x K transition matrix
///   Mglm:  weights K x (D+1), pi = mixing, trans empty
///   Glm:   weights 1 x (D+1), pi/trans empty
struct ParamBundle {
  ModelFamily family = ModelFamily::Mlr;
  Matrix weights;
  Vector pi;
  Matrix trans;
  int chain = 0;
};

/// M posterior samples of a parameter bundle, all from one family and size.
struct ParamSampleSet {
  ModelFamily family = ModelFamily::Mlr;
  int K = 0;
  int D = 0;               // input dimension (excludes the GLM bias column)
  double sigma_sq = 0.0;   // MLR observation noise (fixed, known)
  std::vector<ParamBundle> samples;

  // Per-sample distribution over the latent state of the *next* trial,
  // one row per sample. Attached by the selection layer for IO-HMMs (it
  // depends on the data log); defaults to pi0 when absent.
  Matrix state_predictive;

  int size() const { return static_cast<int>(samples.size()); }
  void validate() const;

  /// Canonical flattening: weights row-major, then transition rows
  /// (IO-HMM), then pi. Used by posterior entropy.
  Vector flatten(const ParamBundle& b) const;
  int flat_dim() const;

  /// Posterior mean bundle (no label alignment applied).
  ParamBundle mean_bundle() const;
};

/// Merges sample sets in argument order, preserving chain provenance.
ParamSampleSet merge_sample_sets(const std::vector<ParamSampleSet>& sets);

/// Relabels states: row k of the result is row perm[k] of the input, with
/// pi and both axes of the transition matrix permuted to match.
ParamBundle permute_states(const ParamBundle& b, const std::vector<int>& perm);

}  // namespace infomax
