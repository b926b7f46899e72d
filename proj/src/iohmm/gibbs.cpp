#include "infomax/iohmm/gibbs.hpp"

#include "infomax/iohmm/messages.hpp"
#include "infomax/randkit/samplers.hpp"
#include "infomax/randkit/special.hpp"

#include <cmath>

namespace infomax::iohmm {

namespace {

void subset_by_state(const Matrix& Phi, const Vector& Y, const std::vector<int>& z, int k,
                     Matrix* Phik, Vector* Yk) {
  std::vector<int> rows;
  for (std::size_t t = 0; t < z.size(); ++t) {
    if (z[t] == k) rows.push_back(static_cast<int>(t));
  }
  Phik->resize(static_cast<int>(rows.size()), Phi.cols());
  Yk->resize(static_cast<int>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    Phik->row(static_cast<int>(i)) = Phi.row(rows[i]);
    (*Yk)[static_cast<int>(i)] = Y[rows[i]];
  }
}

void check_binary(const ExperimentLog& log) {
  for (const auto& r : log.trials()) {
    if (r.y != 0.0 && r.y != 1.0) {
      throw std::invalid_argument("gibbs: outputs must be binary 0/1");
    }
  }
}

}  // namespace

ParamSampleSet gibbs_run(const ExperimentLog& log, const ExperimentConfig& config, RngStream& rng,
                         const std::optional<IoHmmGibbsInit>& init, int chain_id,
                         LaplaceMhStats* stats) {
  config.validate();
  if (log.empty()) throw std::invalid_argument("iohmm gibbs: empty log");
  check_binary(log);
  const int K = config.K;
  const int D = config.D;
  const int T = log.size();
  const Matrix X = log.design();
  const Vector Y = log.outputs();
  const Matrix Phi = augment_design(X);
  const GlmPrior prior{config.prior_mean(D + 1), config.sigma0_sq};

  std::vector<int> z;
  IoHmmParams params;
  if (init) {
    z = init->z;
    params = init->params;
    params.validate();
  } else {
    z.resize(static_cast<std::size_t>(T));
    for (auto& zt : z) zt = rng.uniform_int(K);
    params.trans.resize(K, K);
    const DirichletParams row_prior{Vector::Constant(K, config.alpha)};
    for (int k = 0; k < K; ++k) {
      params.trans.row(k) = sample_dirichlet(row_prior, rng).transpose();
    }
    params.pi0 = sample_dirichlet(row_prior, rng);
    params.weights.resize(static_cast<std::size_t>(K));
    for (auto& w : params.weights) {
      Vector aug(D + 1);
      for (int j = 0; j <= D; ++j) aug[j] = prior.w0[j] + std::sqrt(config.sigma0_sq) * rng.normal();
      w = from_augmented(aug);
    }
  }

  ParamSampleSet out;
  out.family = ModelFamily::IoHmm;
  out.K = K;
  out.D = D;
  const int chain_len = config.M / config.chains;
  out.samples.reserve(static_cast<std::size_t>(chain_len));

  Matrix Phik;
  Vector Yk;
  const int sweeps = config.burn_in + chain_len;
  for (int sweep = 0; sweep < sweeps; ++sweep) {
    // Transition counts from the current path.
    Matrix counts = Matrix::Zero(K, K);
    for (int t = 0; t + 1 < T; ++t) counts(z[static_cast<std::size_t>(t)], z[static_cast<std::size_t>(t + 1)]) += 1.0;

    for (int k = 0; k < K; ++k) {
      subset_by_state(Phi, Y, z, k, &Phik, &Yk);
      const Vector w_new = glm_sample_posterior(
          Phik, Yk, prior, to_augmented(params.weights[static_cast<std::size_t>(k)]), rng, stats);
      params.weights[static_cast<std::size_t>(k)] = from_augmented(w_new);
      const Vector conc = Vector::Constant(K, config.alpha) + counts.row(k).transpose();
      params.trans.row(k) = sample_dirichlet({conc}, rng).transpose();
    }

    const Matrix logl = log_likelihood_matrix(X, Y, params.weights);
    const HmmMessages msg = forward_backward_log(params.pi0, params.trans, logl);
    z = sample_state_sequence(params.pi0, params.trans, msg.L, msg, rng);

    Vector conc0 = Vector::Constant(K, config.alpha);
    conc0[z[0]] += 1.0;
    params.pi0 = sample_dirichlet({conc0}, rng);

    if (sweep >= config.burn_in) {
      ParamBundle b;
      b.family = ModelFamily::IoHmm;
      b.weights = readable_weight_matrix(params.weights);
      b.pi = params.pi0;
      b.trans = params.trans;
      b.chain = chain_id;
      out.samples.push_back(std::move(b));
    }
  }
  return out;
}

ParamSampleSet mglm_gibbs_run(const ExperimentLog& log, const ExperimentConfig& config,
                              RngStream& rng, const std::optional<MglmGibbsInit>& init,
                              int chain_id, LaplaceMhStats* stats) {
  config.validate();
  if (log.empty()) throw std::invalid_argument("mglm gibbs: empty log");
  check_binary(log);
  const int K = config.K;
  const int D = config.D;
  const int T = log.size();
  const Matrix X = log.design();
  const Vector Y = log.outputs();
  const Matrix Phi = augment_design(X);
  const GlmPrior prior{config.prior_mean(D + 1), config.sigma0_sq};

  std::vector<int> z;
  std::vector<GlmWeights> weights;
  Vector pi;
  if (init) {
    z = init->z;
    weights = init->weights;
    pi = init->pi;
  } else {
    z.resize(static_cast<std::size_t>(T));
    for (auto& zt : z) zt = rng.uniform_int(K);
    pi = sample_dirichlet({Vector::Constant(K, config.alpha)}, rng);
    weights.resize(static_cast<std::size_t>(K));
    for (auto& w : weights) {
      Vector aug(D + 1);
      for (int j = 0; j <= D; ++j) aug[j] = prior.w0[j] + std::sqrt(config.sigma0_sq) * rng.normal();
      w = from_augmented(aug);
    }
  }

  ParamSampleSet out;
  out.family = ModelFamily::Mglm;
  out.K = K;
  out.D = D;
  const int chain_len = config.M / config.chains;
  out.samples.reserve(static_cast<std::size_t>(chain_len));

  Matrix Phik;
  Vector Yk;
  const int sweeps = config.burn_in + chain_len;
  for (int sweep = 0; sweep < sweeps; ++sweep) {
    for (int k = 0; k < K; ++k) {
      subset_by_state(Phi, Y, z, k, &Phik, &Yk);
      const Vector w_new = glm_sample_posterior(
          Phik, Yk, prior, to_augmented(weights[static_cast<std::size_t>(k)]), rng, stats);
      weights[static_cast<std::size_t>(k)] = from_augmented(w_new);
    }

    Vector conc = Vector::Constant(K, config.alpha);
    for (int zt : z) conc[zt] += 1.0;
    pi = sample_dirichlet({conc}, rng);

    // Independent per-trial assignments.
    const Matrix logl = log_likelihood_matrix(X, Y, weights);
    Vector logp(K);
    for (int t = 0; t < T; ++t) {
      for (int k = 0; k < K; ++k) {
        logp[k] = logl(t, k) + (pi[k] > 0.0 ? std::log(pi[k])
                                            : -std::numeric_limits<double>::infinity());
      }
      const double lse = log_sum_exp(logp);
      z[static_cast<std::size_t>(t)] =
          sample_categorical_weights((logp.array() - lse).exp().matrix(), rng);
    }

    if (sweep >= config.burn_in) {
      ParamBundle b;
      b.family = ModelFamily::Mglm;
      b.weights = readable_weight_matrix(weights);
      b.pi = pi;
      b.chain = chain_id;
      out.samples.push_back(std::move(b));
    }
  }
  return out;
}

}  // namespace infomax::iohmm
