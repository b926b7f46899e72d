#include "infomax/iohmm/vi.hpp"

#include "infomax/iohmm/glm.hpp"
#include "infomax/iohmm/messages.hpp"
#include "infomax/randkit/samplers.hpp"
#include "infomax/randkit/special.hpp"

#include <cmath>

namespace infomax::iohmm {

namespace {

Vector dirichlet_geo_mean(const Vector& alpha) {
  // exp E[ln pi] under Dir(alpha); entries are sub-normalized.
  const double total = digamma(alpha.sum());
  Vector out(alpha.size());
  for (int i = 0; i < alpha.size(); ++i) out[i] = std::exp(digamma(alpha[i]) - total);
  return out;
}

double data_loglik_at_means(const Matrix& X, const Vector& Y, const IoHmmVariationalState& s) {
  IoHmmParams mean;
  mean.pi0 = s.alpha0 / s.alpha0.sum();
  mean.trans.resize(s.alphaA.rows(), s.alphaA.cols());
  for (int j = 0; j < s.alphaA.rows(); ++j) {
    mean.trans.row(j) = s.alphaA.row(j) / s.alphaA.row(j).sum();
  }
  for (int k = 0; k < s.w_mean.rows(); ++k) {
    mean.weights.push_back(from_augmented(s.w_mean.row(k).transpose()));
  }
  const Matrix logl = log_likelihood_matrix(X, Y, mean.weights);
  return forward_backward_log(mean.pi0, mean.trans, logl).log_marginal;
}

}  // namespace

IoHmmVariationalState vi_run(const ExperimentLog& log, const ExperimentConfig& config,
                             RngStream& rng) {
  config.validate();
  if (log.empty()) throw std::invalid_argument("iohmm vi: empty log");
  const int K = config.K;
  const int D = config.D;
  const int T = log.size();
  const Matrix X = log.design();
  const Vector Y = log.outputs();
  const Matrix Phi = augment_design(X);
  const GlmPrior prior{config.prior_mean(D + 1), config.sigma0_sq};

  IoHmmVariationalState state;
  state.alpha0 = Vector::Constant(K, config.alpha);
  state.alphaA = Matrix::Constant(K, K, config.alpha);
  state.w_mean = prior.w0.transpose().replicate(K, 1);
  state.w_cov.assign(static_cast<std::size_t>(K), config.sigma0_sq * Matrix::Identity(D + 1, D + 1));

  double prev_ll = -std::numeric_limits<double>::infinity();
  for (int iter = 0; iter < config.vi_max_iters; ++iter) {
    // Geometric-mean parameters and the sampled likelihood expectation.
    const Vector pi_tilde = dirichlet_geo_mean(state.alpha0);
    Matrix A_tilde(K, K);
    for (int j = 0; j < K; ++j) {
      A_tilde.row(j) = dirichlet_geo_mean(state.alphaA.row(j).transpose()).transpose();
    }
    Matrix logL(T, K);
    for (int k = 0; k < K; ++k) {
      const Matrix chol = mvn_cholesky(state.w_cov[static_cast<std::size_t>(k)]);
      Vector acc = Vector::Zero(T);
      for (int i = 0; i < config.vi_draws; ++i) {
        const Vector w = sample_mvn_with_chol(state.w_mean.row(k).transpose(), chol, rng);
        const Vector eta = Phi * w;
        for (int t = 0; t < T; ++t) {
          acc[t] += Y[t] > 0.5 ? log_sigmoid(eta[t]) : log_sigmoid(-eta[t]);
        }
      }
      logL.col(k) = acc / static_cast<double>(config.vi_draws);
    }

    // Latent-state marginals under the tilde quantities.
    const HmmMessages msg = forward_backward_log(pi_tilde, A_tilde, logL);
    state.unary = msg.posteriors();
    state.pairwise = msg.pairwise(A_tilde);

    // Dirichlet updates.
    state.alpha0 = Vector::Constant(K, config.alpha) + state.unary.row(0).transpose();
    state.alphaA = Matrix::Constant(K, K, config.alpha);
    for (const auto& xi : state.pairwise) state.alphaA += xi;

    // Responsibility-weighted Laplace update per state.
    for (int k = 0; k < K; ++k) {
      const Vector resp = state.unary.col(k);
      const ConcaveObjective obj = bernoulli_glm_objective(Phi, Y, prior, &resp);
      const NewtonResult opt = newton_maximize(obj, state.w_mean.row(k).transpose());
      state.w_cov[static_cast<std::size_t>(k)] =
          opt.neg_hess.ldlt().solve(Matrix::Identity(D + 1, D + 1));
      state.w_mean.row(k) = opt.x.transpose();
    }

    state.iterations = iter + 1;
    const double ll = data_loglik_at_means(X, Y, state);
    state.final_loglik = ll;
    if (std::abs(ll - prev_ll) < config.vi_tol * std::max(1.0, std::abs(prev_ll))) {
      state.converged = true;
      break;
    }
    prev_ll = ll;
  }
  return state;
}

ParamSampleSet vi_sample(const IoHmmVariationalState& state, int M, RngStream& rng) {
  if (M < 1) throw std::invalid_argument("vi_sample: M must be >= 1");
  const int K = static_cast<int>(state.alpha0.size());
  const int D = static_cast<int>(state.w_mean.cols()) - 1;

  std::vector<Matrix> chol(static_cast<std::size_t>(K));
  std::vector<bool> degenerate(static_cast<std::size_t>(K), false);
  for (int k = 0; k < K; ++k) {
    if (state.w_cov[static_cast<std::size_t>(k)].isZero(0.0)) {
      degenerate[static_cast<std::size_t>(k)] = true;
    } else {
      chol[static_cast<std::size_t>(k)] = mvn_cholesky(state.w_cov[static_cast<std::size_t>(k)]);
    }
  }

  ParamSampleSet out;
  out.family = ModelFamily::IoHmm;
  out.K = K;
  out.D = D;
  out.samples.reserve(static_cast<std::size_t>(M));
  for (int j = 0; j < M; ++j) {
    ParamBundle b;
    b.family = ModelFamily::IoHmm;
    b.pi = sample_dirichlet({state.alpha0}, rng);
    b.trans.resize(K, K);
    b.weights.resize(K, D + 1);
    for (int k = 0; k < K; ++k) {
      b.trans.row(k) = sample_dirichlet({state.alphaA.row(k).transpose()}, rng).transpose();
      const Vector mean = state.w_mean.row(k).transpose();
      const Vector aug = degenerate[static_cast<std::size_t>(k)]
                             ? mean
                             : sample_mvn_with_chol(mean, chol[static_cast<std::size_t>(k)], rng);
      b.weights.row(k) = readable_weight_matrix({from_augmented(aug)}).row(0);
    }
    out.samples.push_back(std::move(b));
  }
  return out;
}

}  // namespace infomax::iohmm
