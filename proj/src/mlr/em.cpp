#include "infomax/mlr/em.hpp"

#include "infomax/randkit/samplers.hpp"
#include "infomax/randkit/special.hpp"

#include <cmath>

namespace infomax::mlr {

double em_loglik(const Matrix& X, const Vector& Y, const MlrParams& params) {
  const Matrix means = X * params.weights.transpose();
  double ll = 0.0;
  Vector terms(params.K());
  for (int t = 0; t < X.rows(); ++t) {
    for (int k = 0; k < params.K(); ++k) {
      terms[k] =
          (params.pi[k] > 0.0 ? std::log(params.pi[k]) : -std::numeric_limits<double>::infinity()) +
          log_normal_pdf(Y[t], means(t, k), params.sigma_sq);
    }
    ll += log_sum_exp(terms);
  }
  return ll;
}

namespace {

MlrEmResult em_single(const Matrix& X, const Vector& Y, int K, const EmOptions& opts,
                      RngStream& rng) {
  const int T = static_cast<int>(X.rows());
  const int D = static_cast<int>(X.cols());

  // Random initial responsibilities.
  Matrix resp(T, K);
  const DirichletParams flat{Vector::Ones(K)};
  for (int t = 0; t < T; ++t) {
    resp.row(t) = (Vector::Constant(K, 0.5 / K) + 0.5 * sample_dirichlet(flat, rng)).transpose();
  }

  MlrEmResult res;
  res.params.weights.resize(K, D);
  res.params.pi.resize(K);
  res.params.sigma_sq = 1.0;
  double prev_ll = -std::numeric_limits<double>::infinity();

  for (int iter = 0; iter < opts.max_iters; ++iter) {
    // M-step.
    double sse = 0.0;
    for (int k = 0; k < K; ++k) {
      const Vector r = resp.col(k);
      Matrix gram = X.transpose() * r.asDiagonal() * X;
      gram.diagonal().array() += 1e-10;  // guard rank deficiency
      res.params.weights.row(k) =
          gram.ldlt().solve(X.transpose() * (r.asDiagonal() * Y)).transpose();
      sse += (r.array() * (Y - X * res.params.weights.row(k).transpose()).array().square()).sum();
    }
    res.params.pi = resp.colwise().mean().transpose();
    res.params.sigma_sq = std::max(sse / T, 1e-12);

    // E-step.
    const Matrix means = X * res.params.weights.transpose();
    Vector terms(K);
    for (int t = 0; t < T; ++t) {
      for (int k = 0; k < K; ++k) {
        terms[k] = (res.params.pi[k] > 0.0 ? std::log(res.params.pi[k])
                                           : -std::numeric_limits<double>::infinity()) +
                   log_normal_pdf(Y[t], means(t, k), res.params.sigma_sq);
      }
      const double lse = log_sum_exp(terms);
      resp.row(t) = (terms.array() - lse).exp().transpose();
    }

    res.iterations = iter + 1;
    const double ll = em_loglik(X, Y, res.params);
    res.loglik = ll;
    if (std::abs(ll - prev_ll) < opts.tol * std::max(1.0, std::abs(prev_ll))) {
      res.converged = true;
      break;
    }
    prev_ll = ll;
  }
  return res;
}

}  // namespace

MlrEmResult em_fit(const Matrix& X, const Vector& Y, int K, const EmOptions& opts, RngStream& rng) {
  if (X.rows() == 0) throw std::invalid_argument("em_fit: no data");
  if (K < 1) throw std::invalid_argument("em_fit: K must be >= 1");
  const int starts = K == 1 ? 1 : std::max(1, opts.n_starts);
  MlrEmResult best;
  best.loglik = -std::numeric_limits<double>::infinity();
  for (int s = 0; s < starts; ++s) {
    RngStream sub = rng.sub(static_cast<std::uint64_t>(s));
    MlrEmResult res = em_single(X, Y, K, opts, sub);
    if (res.loglik > best.loglik) best = std::move(res);
  }
  return best;
}

}  // namespace infomax::mlr
