#include "infomax/mlr/gibbs.hpp"

#include "infomax/randkit/samplers.hpp"
#include "infomax/randkit/special.hpp"

#include <cmath>

namespace infomax::mlr {

Matrix z_posteriors(const Matrix& X, const Vector& Y, const MlrParams& params) {
  const int T = static_cast<int>(X.rows());
  const int K = params.K();
  const Matrix means = X * params.weights.transpose();  // T x K
  Matrix logp(T, K);
  for (int k = 0; k < K; ++k) {
    logp.col(k) = -0.5 * (Y - means.col(k)).array().square() / params.sigma_sq +
                  (params.pi[k] > 0.0 ? std::log(params.pi[k])
                                      : -std::numeric_limits<double>::infinity());
  }
  for (int t = 0; t < T; ++t) {
    const double lse = log_sum_exp(logp.row(t).transpose());
    logp.row(t) = (logp.row(t).array() - lse).exp();
  }
  return logp;
}

std::vector<int> gibbs_z_step(const ExperimentLog& log, const MlrParams& params, RngStream& rng) {
  const Matrix post = z_posteriors(log.design(), log.outputs(), params);
  std::vector<int> z(static_cast<std::size_t>(post.rows()));
  for (int t = 0; t < post.rows(); ++t) {
    z[static_cast<std::size_t>(t)] = sample_categorical_weights(post.row(t).transpose(), rng);
  }
  return z;
}

Vector gibbs_pi_step(const std::vector<int>& z, int K, RngStream& rng, double alpha) {
  Vector conc = Vector::Constant(K, alpha);
  for (int zt : z) conc[zt] += 1.0;
  return sample_dirichlet({conc}, rng);
}

void conjugate_posterior(const Matrix& Xk, const Vector& Yk, const Vector& w0, double sigma0_sq,
                         double sigma_sq, Vector* mean, Matrix* cov) {
  const int D = static_cast<int>(w0.size());
  Matrix precision = Matrix::Identity(D, D) / sigma0_sq;
  Vector rhs = w0 / sigma0_sq;
  if (Xk.rows() > 0) {
    precision += Xk.transpose() * Xk / sigma_sq;
    rhs += Xk.transpose() * Yk / sigma_sq;
  }
  const Eigen::LLT<Matrix> llt(precision);
  *cov = llt.solve(Matrix::Identity(D, D));
  *mean = llt.solve(rhs);
}

Vector gibbs_w_step(const Matrix& X, const Vector& Y, const std::vector<int>& z, int k,
                    const Vector& w0, double sigma0_sq, double sigma_sq, RngStream& rng) {
  std::vector<int> rows;
  for (std::size_t t = 0; t < z.size(); ++t) {
    if (z[t] == k) rows.push_back(static_cast<int>(t));
  }
  Matrix Xk(static_cast<int>(rows.size()), X.cols());
  Vector Yk(static_cast<int>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    Xk.row(static_cast<int>(i)) = X.row(rows[i]);
    Yk[static_cast<int>(i)] = Y[rows[i]];
  }
  Vector mean;
  Matrix cov;
  conjugate_posterior(Xk, Yk, w0, sigma0_sq, sigma_sq, &mean, &cov);
  return sample_mvn({mean, cov}, rng);
}

ParamSampleSet gibbs_run(const ExperimentLog& log, const ExperimentConfig& config, RngStream& rng,
                         const std::optional<MlrGibbsState>& init, int chain_id) {
  config.validate();
  if (log.empty()) throw std::invalid_argument("mlr gibbs: empty log");
  const int K = config.K;
  const int D = config.D;
  const int T = log.size();
  const Matrix X = log.design();
  const Vector Y = log.outputs();
  const Vector w0 = config.prior_mean(D);

  MlrGibbsState state;
  if (init) {
    state = *init;
  } else {
    state.z.resize(static_cast<std::size_t>(T));
    for (auto& zt : state.z) zt = rng.uniform_int(K);
    state.params.pi = Vector::Constant(K, 1.0 / K);
    state.params.weights.resize(K, D);
    for (int k = 0; k < K; ++k) {
      for (int j = 0; j < D; ++j) {
        state.params.weights(k, j) = w0[j] + std::sqrt(config.sigma0_sq) * rng.normal();
      }
    }
    state.params.sigma_sq = config.sigma_sq;
  }

  ParamSampleSet out;
  out.family = ModelFamily::Mlr;
  out.K = K;
  out.D = D;
  out.sigma_sq = config.sigma_sq;
  const int chain_len = config.M / config.chains;
  out.samples.reserve(static_cast<std::size_t>(chain_len));

  const int sweeps = config.burn_in + chain_len;
  for (int sweep = 0; sweep < sweeps; ++sweep) {
    state.z = gibbs_z_step(log, state.params, rng);
    state.params.pi = gibbs_pi_step(state.z, K, rng, config.alpha);
    for (int k = 0; k < K; ++k) {
      state.params.weights.row(k) =
          gibbs_w_step(X, Y, state.z, k, w0, config.sigma0_sq, config.sigma_sq, rng).transpose();
    }
    if (sweep >= config.burn_in) {
      ParamBundle b;
      b.family = ModelFamily::Mlr;
      b.weights = state.params.weights;
      b.pi = state.params.pi;
      b.chain = chain_id;
      out.samples.push_back(std::move(b));
    }
  }
  return out;
}

}  // namespace infomax::mlr
