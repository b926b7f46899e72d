#include "infomax/mlr/vi.hpp"

#include "infomax/mlr/model.hpp"
#include "infomax/randkit/samplers.hpp"
#include "infomax/randkit/special.hpp"

#include <cmath>

namespace infomax::mlr {

namespace {

double mean_field_loglik(const Matrix& X, const Vector& Y, const Matrix& mu, const Vector& pi_hat,
                         double sigma_sq) {
  const Matrix means = X * mu.transpose();  // T x K
  double ll = 0.0;
  Vector terms(mu.rows());
  for (int t = 0; t < X.rows(); ++t) {
    for (int k = 0; k < mu.rows(); ++k) {
      terms[k] = (pi_hat[k] > 0.0 ? std::log(pi_hat[k]) : -std::numeric_limits<double>::infinity()) +
                 log_normal_pdf(Y[t], means(t, k), sigma_sq);
    }
    ll += log_sum_exp(terms);
  }
  return ll;
}

}  // namespace

MlrVariationalState vi_run(const ExperimentLog& log, const ExperimentConfig& config, RngStream& rng) {
  config.validate();
  if (log.empty()) throw std::invalid_argument("mlr vi: empty log");
  const int T = log.size();
  const int K = config.K;
  const int D = config.D;
  const Matrix X = log.design();
  const Vector Y = log.outputs();
  const Vector w0 = config.prior_mean(D);
  const double inv_noise = 1.0 / config.sigma_sq;

  MlrVariationalState state;
  state.mu = w0.transpose().replicate(K, 1);
  state.Sigma.assign(static_cast<std::size_t>(K), config.sigma0_sq * Matrix::Identity(D, D));

  // Uniform responsibilities are a symmetric fixed point; start 1% away.
  state.phi.resize(T, K);
  const DirichletParams flat{Vector::Ones(K)};
  for (int t = 0; t < T; ++t) {
    const Vector noise = sample_dirichlet(flat, rng);
    state.phi.row(t) = (Vector::Constant(K, 0.99 / K) + 0.01 * noise).transpose();
  }

  double prev_ll = -std::numeric_limits<double>::infinity();
  for (int iter = 0; iter < config.vi_max_iters; ++iter) {
    // Gaussian updates from the current responsibilities.
    for (int k = 0; k < K; ++k) {
      const Vector r = state.phi.col(k);
      const Matrix precision = Matrix::Identity(D, D) / config.sigma0_sq +
                               inv_noise * X.transpose() * r.asDiagonal() * X;
      const Eigen::LLT<Matrix> llt(precision);
      state.Sigma[static_cast<std::size_t>(k)] = llt.solve(Matrix::Identity(D, D));
      state.mu.row(k) =
          (inv_noise * llt.solve(X.transpose() * (r.asDiagonal() * Y))).transpose();
    }

    // Responsibility update.
    const Matrix means = X * state.mu.transpose();  // T x K
    Matrix quad(T, K);                              // E[(x' w_k)^2]
    for (int k = 0; k < K; ++k) {
      quad.col(k) = means.col(k).array().square().matrix() +
                    ((X * state.Sigma[static_cast<std::size_t>(k)]).cwiseProduct(X)).rowwise().sum();
    }
    for (int t = 0; t < T; ++t) {
      Vector logphi(K);
      for (int k = 0; k < K; ++k) {
        logphi[k] = inv_noise * (Y[t] * means(t, k) - 0.5 * quad(t, k));
      }
      const double lse = log_sum_exp(logphi);
      state.phi.row(t) = (logphi.array() - lse).exp().transpose();
    }

    state.iterations = iter + 1;
    const Vector pi_hat = state.phi.colwise().mean().transpose();
    const double ll = mean_field_loglik(X, Y, state.mu, pi_hat, config.sigma_sq);
    state.final_loglik = ll;
    if (std::abs(ll - prev_ll) < config.vi_tol * std::max(1.0, std::abs(prev_ll))) {
      state.converged = true;
      break;
    }
    prev_ll = ll;
  }
  return state;
}

ParamSampleSet vi_sample(const MlrVariationalState& state, double sigma_sq, int M, RngStream& rng) {
  if (M < 1) throw std::invalid_argument("vi_sample: M must be >= 1");
  const int K = static_cast<int>(state.mu.rows());
  const int D = static_cast<int>(state.mu.cols());
  const int T = static_cast<int>(state.phi.rows());

  std::vector<Matrix> chol(static_cast<std::size_t>(K));
  std::vector<bool> degenerate(static_cast<std::size_t>(K), false);
  for (int k = 0; k < K; ++k) {
    if (state.Sigma[static_cast<std::size_t>(k)].isZero(0.0)) {
      degenerate[static_cast<std::size_t>(k)] = true;
    } else {
      chol[static_cast<std::size_t>(k)] = mvn_cholesky(state.Sigma[static_cast<std::size_t>(k)]);
    }
  }

  ParamSampleSet out;
  out.family = ModelFamily::Mlr;
  out.K = K;
  out.D = D;
  out.sigma_sq = sigma_sq;
  out.samples.reserve(static_cast<std::size_t>(M));
  for (int j = 0; j < M; ++j) {
    ParamBundle b;
    b.family = ModelFamily::Mlr;
    b.weights.resize(K, D);
    for (int k = 0; k < K; ++k) {
      const Vector mean = state.mu.row(k).transpose();
      b.weights.row(k) = (degenerate[static_cast<std::size_t>(k)]
                              ? mean
                              : sample_mvn_with_chol(mean, chol[static_cast<std::size_t>(k)], rng))
                             .transpose();
    }
    // pi from the proportion of trials assigned to each state.
    Vector counts = Vector::Zero(K);
    for (int t = 0; t < T; ++t) {
      counts[sample_categorical_weights(state.phi.row(t).transpose(), rng)] += 1.0;
    }
    b.pi = counts / static_cast<double>(T);
    out.samples.push_back(std::move(b));
  }
  return out;
}

}  // namespace infomax::mlr
