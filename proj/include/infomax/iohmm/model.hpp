#pragma once

#include "infomax/core/types.hpp"

#include <vector>

namespace infomax::iohmm {

/// Per-state Bernoulli-GLM weights: p(y=1 | x) = sigmoid(slope.x - bias).
/// Equivalently the augmented vector [slope..., -bias] acting on [x..., 1].
struct GlmWeights {
  Vector slope;
  double bias = 0.0;
};

/// Augmented form: [slope..., -bias], for inference over a single vector.
Vector to_augmented(const GlmWeights& w);
GlmWeights from_augmented(const Eigen::Ref<const Vector>& v);

/// Appends the constant-1 coordinate to an input.
Vector augment_input(const Eigen::Ref<const Vector>& x);
/// Stacks augmented inputs, one row per trial.
Matrix augment_design(const Matrix& X);

double bernoulli_glm_prob(const Eigen::Ref<const Vector>& x, const GlmWeights& w);
double bernoulli_glm_prob(double x, double slope, double bias);

/// log p(y | x, w) for y in {0, 1}.
double bernoulli_glm_loglik(double y, const Eigen::Ref<const Vector>& x, const GlmWeights& w);

struct IoHmmParams {
  std::vector<GlmWeights> weights;  // K states
  Matrix trans;                     // K x K, rows on the simplex
  Vector pi0;                       // initial state distribution

  int K() const { return static_cast<int>(weights.size()); }
  int D() const { return weights.empty() ? 0 : static_cast<int>(weights.front().slope.size()); }
  void validate() const;
};

/// K x (D+1) matrix with readable rows [slope..., bias]; the bundle
/// convention used across sample sets, configs, and metrics.
Matrix readable_weight_matrix(const std::vector<GlmWeights>& weights);
std::vector<GlmWeights> weights_from_readable(const Matrix& m);

/// T x K matrix with L(t,k) = p(y_t | x_t, w_k).
Matrix likelihood_matrix(const Matrix& X, const Vector& Y, const std::vector<GlmWeights>& weights);
Matrix log_likelihood_matrix(const Matrix& X, const Vector& Y,
                             const std::vector<GlmWeights>& weights);

}  // namespace infomax::iohmm
