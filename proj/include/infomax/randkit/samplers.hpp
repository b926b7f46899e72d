#pragma once

#include "infomax/core/rng.hpp"
#include "infomax/core/types.hpp"

namespace infomax {

struct MvnParams {
  Vector mean;
  Matrix cov;  // symmetric PSD
};

struct DirichletParams {
  Vector alpha;  // all entries positive
};

/// Draw from a multivariate normal. The covariance is factored with a
/// Cholesky jitter ladder (1e-10 escalating tenfold to 1e-4); failure past
/// the ladder signals an ill-conditioned covariance. An exactly zero
/// covariance returns the mean.
Vector sample_mvn(const MvnParams& p, RngStream& rng);

/// Cholesky factor of cov + jitter, sharing the ladder with sample_mvn.
/// Useful when many draws reuse one factorization.
Matrix mvn_cholesky(const Matrix& cov);

Vector sample_mvn_with_chol(const Vector& mean, const Matrix& chol_lower, RngStream& rng);

/// Gamma(shape, 1) via Marsaglia-Tsang, with the shape < 1 boost.
double sample_gamma(double shape, RngStream& rng);

Vector sample_dirichlet(const DirichletParams& p, RngStream& rng);

/// Draw an index from a probability vector (entries >= 0, sum within 1e-9
/// of 1; renormalized internally). Indices are 0-based.
int sample_categorical(const Eigen::Ref<const Vector>& p, RngStream& rng);

/// Draw an index proportional to nonnegative weights of any positive sum.
int sample_categorical_weights(const Eigen::Ref<const Vector>& w, RngStream& rng);

}  // namespace infomax
