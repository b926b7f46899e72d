#include "infomax/iohmm/model.hpp"

#include "infomax/randkit/special.hpp"

#include <cmath>
#include <stdexcept>

namespace infomax::iohmm {

Vector to_augmented(const GlmWeights& w) {
  Vector v(w.slope.size() + 1);
  v.head(w.slope.size()) = w.slope;
  v[w.slope.size()] = -w.bias;
  return v;
}

GlmWeights from_augmented(const Eigen::Ref<const Vector>& v) {
  if (v.size() < 2) throw std::invalid_argument("augmented weights need at least 2 entries");
  GlmWeights w;
  w.slope = v.head(v.size() - 1);
  w.bias = -v[v.size() - 1];
  return w;
}

Vector augment_input(const Eigen::Ref<const Vector>& x) {
  Vector phi(x.size() + 1);
  phi.head(x.size()) = x;
  phi[x.size()] = 1.0;
  return phi;
}

Matrix augment_design(const Matrix& X) {
  Matrix phi(X.rows(), X.cols() + 1);
  phi.leftCols(X.cols()) = X;
  phi.col(X.cols()).setOnes();
  return phi;
}

double bernoulli_glm_prob(const Eigen::Ref<const Vector>& x, const GlmWeights& w) {
  if (x.size() != w.slope.size()) throw std::invalid_argument("glm prob: dimension mismatch");
  return sigmoid(w.slope.dot(x) - w.bias);
}

double bernoulli_glm_prob(double x, double slope, double bias) {
  return sigmoid(slope * x - bias);
}

double bernoulli_glm_loglik(double y, const Eigen::Ref<const Vector>& x, const GlmWeights& w) {
  const double eta = w.slope.dot(x) - w.bias;
  return y > 0.5 ? log_sigmoid(eta) : log_sigmoid(-eta);
}

void IoHmmParams::validate() const {
  const int k = K();
  if (k < 1) throw std::invalid_argument("iohmm params: K must be >= 1");
  if (trans.rows() != k || trans.cols() != k) {
    throw std::invalid_argument("iohmm params: transition matrix must be K x K");
  }
  for (int i = 0; i < k; ++i) {
    if ((trans.row(i).array() < -1e-12).any() || std::abs(trans.row(i).sum() - 1.0) > 1e-9) {
      throw std::invalid_argument("iohmm params: transition row not on the simplex");
    }
  }
  if (pi0.size() != k || (pi0.array() < -1e-12).any() || std::abs(pi0.sum() - 1.0) > 1e-9) {
    throw std::invalid_argument("iohmm params: pi0 not on the simplex");
  }
  for (const auto& w : weights) {
    if (w.slope.size() != weights.front().slope.size()) {
      throw std::invalid_argument("iohmm params: inconsistent weight dimensions");
    }
  }
}

Matrix readable_weight_matrix(const std::vector<GlmWeights>& weights) {
  const int K = static_cast<int>(weights.size());
  const int D = K ? static_cast<int>(weights.front().slope.size()) : 0;
  Matrix m(K, D + 1);
  for (int k = 0; k < K; ++k) {
    m.row(k).head(D) = weights[static_cast<std::size_t>(k)].slope.transpose();
    m(k, D) = weights[static_cast<std::size_t>(k)].bias;
  }
  return m;
}

std::vector<GlmWeights> weights_from_readable(const Matrix& m) {
  std::vector<GlmWeights> out;
  out.reserve(static_cast<std::size_t>(m.rows()));
  for (int k = 0; k < m.rows(); ++k) {
    GlmWeights w;
    w.slope = m.row(k).head(m.cols() - 1).transpose();
    w.bias = m(k, m.cols() - 1);
    out.push_back(std::move(w));
  }
  return out;
}

Matrix log_likelihood_matrix(const Matrix& X, const Vector& Y,
                             const std::vector<GlmWeights>& weights) {
  const int T = static_cast<int>(X.rows());
  const int K = static_cast<int>(weights.size());
  Matrix logl(T, K);
  for (int k = 0; k < K; ++k) {
    const Vector eta = X * weights[static_cast<std::size_t>(k)].slope -
                       Vector::Constant(T, weights[static_cast<std::size_t>(k)].bias);
    for (int t = 0; t < T; ++t) {
      logl(t, k) = Y[t] > 0.5 ? log_sigmoid(eta[t]) : log_sigmoid(-eta[t]);
    }
  }
  return logl;
}

Matrix likelihood_matrix(const Matrix& X, const Vector& Y, const std::vector<GlmWeights>& weights) {
  return log_likelihood_matrix(X, Y, weights).array().exp();
}

}  // namespace infomax::iohmm
