#include "infomax/iohmm/messages.hpp"

#include "infomax/randkit/samplers.hpp"

#include <cmath>
#include <stdexcept>

namespace infomax::iohmm {

Matrix HmmMessages::posteriors() const {
  Matrix post = F.cwiseProduct(B);
  for (int t = 0; t < post.rows(); ++t) {
    const double s = post.row(t).sum();
    if (s > 0.0) post.row(t) /= s;
  }
  return post;
}

std::vector<Matrix> HmmMessages::pairwise(const Matrix& trans) const {
  const int T = static_cast<int>(F.rows());
  std::vector<Matrix> xi;
  xi.reserve(static_cast<std::size_t>(std::max(0, T - 1)));
  for (int t = 1; t < T; ++t) {
    Matrix m = (F.row(t - 1).transpose() * (L.row(t).cwiseProduct(B.row(t)))).cwiseProduct(trans);
    const double s = m.sum();
    if (s > 0.0) m /= s;
    xi.push_back(std::move(m));
  }
  return xi;
}

namespace {

HmmMessages forward_backward_impl(const Vector& pi0, const Matrix& trans, Matrix L,
                                  Vector log_shift) {
  const int T = static_cast<int>(L.rows());
  const int K = static_cast<int>(L.cols());
  if (pi0.size() != K || trans.rows() != K || trans.cols() != K) {
    throw std::invalid_argument("forward_backward: dimension mismatch");
  }
  HmmMessages msg;
  msg.L = std::move(L);
  msg.log_shift = std::move(log_shift);
  msg.F.resize(T, K);
  msg.B.resize(T, K);
  msg.scale.resize(T);
  if (T == 0) {
    msg.log_marginal = 0.0;
    return msg;
  }

  // Scaled forward pass.
  Vector a = pi0.cwiseProduct(msg.L.row(0).transpose());
  double c = a.sum();
  if (!(c > 0.0)) throw std::runtime_error("forward_backward: zero-probability observation at t=1");
  msg.F.row(0) = (a / c).transpose();
  msg.scale[0] = c;
  for (int t = 1; t < T; ++t) {
    a = (trans.transpose() * msg.F.row(t - 1).transpose()).cwiseProduct(msg.L.row(t).transpose());
    c = a.sum();
    if (!(c > 0.0)) {
      throw std::runtime_error("forward_backward: zero-probability observation at t=" +
                               std::to_string(t + 1));
    }
    msg.F.row(t) = (a / c).transpose();
    msg.scale[t] = c;
  }

  // Scaled backward pass.
  msg.B.row(T - 1).setOnes();
  for (int t = T - 2; t >= 0; --t) {
    const Vector next = msg.L.row(t + 1).cwiseProduct(msg.B.row(t + 1)).transpose();
    msg.B.row(t) = (trans * next).transpose() / msg.scale[t + 1];
  }

  msg.log_marginal = msg.scale.array().log().sum() + msg.log_shift.sum();
  return msg;
}

}  // namespace

HmmMessages forward_backward(const Vector& pi0, const Matrix& trans, const Matrix& likelihood) {
  return forward_backward_impl(pi0, trans, likelihood, Vector::Zero(likelihood.rows()));
}

HmmMessages forward_backward_log(const Vector& pi0, const Matrix& trans,
                                 const Matrix& log_likelihood) {
  const int T = static_cast<int>(log_likelihood.rows());
  Matrix L(T, log_likelihood.cols());
  Vector shift(T);
  for (int t = 0; t < T; ++t) {
    shift[t] = log_likelihood.row(t).maxCoeff();
    L.row(t) = (log_likelihood.row(t).array() - shift[t]).exp();
  }
  return forward_backward_impl(pi0, trans, std::move(L), std::move(shift));
}

std::vector<int> sample_state_sequence(const Vector& pi0, const Matrix& trans, const Matrix& L,
                                       const HmmMessages& messages, RngStream& rng) {
  const int T = static_cast<int>(L.rows());
  std::vector<int> z(static_cast<std::size_t>(T));
  if (T == 0) return z;
  Vector w = pi0.cwiseProduct(messages.B.row(0).transpose()).cwiseProduct(L.row(0).transpose());
  z[0] = sample_categorical_weights(w, rng);
  for (int t = 1; t < T; ++t) {
    w = trans.row(z[static_cast<std::size_t>(t - 1)])
            .transpose()
            .cwiseProduct(messages.B.row(t).transpose())
            .cwiseProduct(L.row(t).transpose());
    z[static_cast<std::size_t>(t)] = sample_categorical_weights(w, rng);
  }
  return z;
}

Matrix decode_states(const ExperimentLog& log, const IoHmmParams& params) {
  params.validate();
  const Matrix logl = log_likelihood_matrix(log.design(), log.outputs(), params.weights);
  const HmmMessages msg = forward_backward_log(params.pi0, params.trans, logl);
  return msg.posteriors();
}

std::vector<int> hard_decode(const Matrix& posteriors) {
  std::vector<int> z(static_cast<std::size_t>(posteriors.rows()));
  for (int t = 0; t < posteriors.rows(); ++t) {
    Eigen::Index best = 0;
    posteriors.row(t).maxCoeff(&best);
    z[static_cast<std::size_t>(t)] = static_cast<int>(best);
  }
  return z;
}

Vector next_state_distribution(const ExperimentLog& log, const IoHmmParams& params) {
  params.validate();
  if (log.empty()) return params.pi0;
  const Matrix logl = log_likelihood_matrix(log.design(), log.outputs(), params.weights);
  const HmmMessages msg = forward_backward_log(params.pi0, params.trans, logl);
  // Filtered final state pushed one step forward.
  return params.trans.transpose() * msg.F.row(msg.F.rows() - 1).transpose();
}

}  // namespace infomax::iohmm
