#include "infomax/randkit/samplers.hpp"

#include <Eigen/Cholesky>

#include <cmath>
#include <stdexcept>

namespace infomax {

Matrix mvn_cholesky(const Matrix& cov) {
  if (cov.rows() != cov.cols()) throw std::invalid_argument("mvn: covariance not square");
  if ((cov - cov.transpose()).cwiseAbs().maxCoeff() > 1e-10 * (1.0 + cov.cwiseAbs().maxCoeff())) {
    throw std::invalid_argument("mvn: covariance not symmetric");
  }
  const Matrix sym = 0.5 * (cov + cov.transpose());
  for (double jitter = 1e-10; jitter <= 1e-4 * (1.0 + 1e-12); jitter *= 10.0) {
    Eigen::LLT<Matrix> llt(sym + jitter * Matrix::Identity(sym.rows(), sym.cols()));
    if (llt.info() == Eigen::Success) return llt.matrixL();
  }
  throw std::runtime_error("mvn: Cholesky failed after jitter escalation (ill-conditioned covariance)");
}

Vector sample_mvn_with_chol(const Vector& mean, const Matrix& chol_lower, RngStream& rng) {
  Vector z(mean.size());
  for (int i = 0; i < z.size(); ++i) z[i] = rng.normal();
  return mean + chol_lower * z;
}

Vector sample_mvn(const MvnParams& p, RngStream& rng) {
  if (p.mean.size() != p.cov.rows()) throw std::invalid_argument("mvn: dimension mismatch");
  if (p.cov.isZero(0.0)) return p.mean;  // degenerate Gaussian
  return sample_mvn_with_chol(p.mean, mvn_cholesky(p.cov), rng);
}

double sample_gamma(double shape, RngStream& rng) {
  if (!(shape > 0.0)) throw std::invalid_argument("gamma: shape must be positive");
  if (shape < 1.0) {
    // Boost: Gamma(a) = Gamma(a+1) * U^(1/a).
    const double u = rng.uniform();
    return sample_gamma(shape + 1.0, rng) * std::pow(u, 1.0 / shape);
  }
  // Marsaglia-Tsang squeeze.
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = rng.normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = rng.uniform();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (u > 0.0 && std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

Vector sample_dirichlet(const DirichletParams& p, RngStream& rng) {
  if (p.alpha.size() == 0) throw std::invalid_argument("dirichlet: empty alpha");
  if ((p.alpha.array() <= 0.0).any()) {
    throw std::invalid_argument("dirichlet: alpha entries must be positive");
  }
  Vector g(p.alpha.size());
  for (int attempt = 0; attempt < 8; ++attempt) {
    for (int i = 0; i < g.size(); ++i) g[i] = sample_gamma(p.alpha[i], rng);
    const double total = g.sum();
    if (total > 0.0) return g / total;
  }
  throw std::runtime_error("dirichlet: gamma draws underflowed to zero");
}

int sample_categorical_weights(const Eigen::Ref<const Vector>& w, RngStream& rng) {
  if (w.size() == 0) throw std::invalid_argument("categorical: empty vector");
  double total = 0.0;
  for (int i = 0; i < w.size(); ++i) {
    if (w[i] < -1e-12) throw std::invalid_argument("categorical: negative entry");
    total += std::max(w[i], 0.0);
  }
  if (!(total > 0.0)) throw std::invalid_argument("categorical: all entries zero");
  const double u = rng.uniform() * total;
  double acc = 0.0;
  int last = 0;
  for (int i = 0; i < w.size(); ++i) {
    const double p = std::max(w[i], 0.0);
    if (p == 0.0) continue;
    acc += p;
    last = i;
    if (u < acc) return i;
  }
  return last;  // guard against rounding at the top end
}

int sample_categorical(const Eigen::Ref<const Vector>& p, RngStream& rng) {
  if (p.size() == 0) throw std::invalid_argument("categorical: empty vector");
  double total = 0.0;
  for (int i = 0; i < p.size(); ++i) total += p[i];
  if (!(total > 0.0)) throw std::invalid_argument("categorical: all entries zero");
  if (std::abs(total - 1.0) > 1e-9) {
    throw std::invalid_argument("categorical: probabilities must sum to 1 within 1e-9");
  }
  return sample_categorical_weights(p, rng);
}

}  // namespace infomax
