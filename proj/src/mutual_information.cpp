#include "infomax/mutual_information.hpp"

#include "infomax/core/types.hpp"
#include "infomax/iohmm/messages.hpp"
#include "infomax/iohmm/model.hpp"
#include "infomax/randkit/special.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

namespace infomax {

namespace {

double bernoulli_kl(double p, double q) {
  double kl = 0.0;
  if (p > 0.0) kl += p * std::log(p / q);
  if (p < 1.0) kl += (1.0 - p) * std::log((1.0 - p) / (1.0 - q));
  return kl;
}

// Bernoulli predictive parameter for one GLM-family bundle.
double bundle_bernoulli_p(const ParamBundle& b, const Eigen::Ref<const Vector>& x,
                          const Vector* state_dist) {
  const int K = static_cast<int>(b.weights.rows());
  const int D = static_cast<int>(b.weights.cols()) - 1;
  double p = 0.0;
  for (int k = 0; k < K; ++k) {
    const double eta = b.weights.row(k).head(D).dot(x) - b.weights(k, D);
    const double pk = sigmoid(eta);
    double wk = 1.0;
    if (b.family == ModelFamily::Mglm) {
      wk = b.pi[k];
    } else if (b.family == ModelFamily::IoHmm) {
      wk = (*state_dist)[k];
    }
    p += wk * pk;
  }
  return p;
}

}  // namespace

PredictiveSet predictive_set(const ParamSampleSet& samples, const Eigen::Ref<const Vector>& x) {
  samples.validate();
  const int M = samples.size();
  PredictiveSet out;
  if (samples.family == ModelFamily::Mlr) {
    out.binary = false;
    out.sigma_sq = samples.sigma_sq;
    out.means.resize(M, samples.K);
    out.weights.resize(M, samples.K);
    for (int j = 0; j < M; ++j) {
      const ParamBundle& b = samples.samples[static_cast<std::size_t>(j)];
      out.means.row(j) = (b.weights * x).transpose();
      out.weights.row(j) = b.pi.transpose();
    }
    return out;
  }

  out.binary = true;
  out.bernoulli_p.resize(M);
  const bool needs_state = samples.family == ModelFamily::IoHmm;
  if (needs_state && samples.state_predictive.rows() != 0 &&
      samples.state_predictive.rows() != M) {
    throw std::invalid_argument("predictive_set: stale state predictives");
  }
  for (int j = 0; j < M; ++j) {
    const ParamBundle& b = samples.samples[static_cast<std::size_t>(j)];
    Vector state_dist;
    if (needs_state) {
      state_dist = samples.state_predictive.rows() == M
                       ? samples.state_predictive.row(j).transpose()
                       : b.pi;  // empty log: the initial state distribution
    }
    out.bernoulli_p[j] = bundle_bernoulli_p(b, x, needs_state ? &state_dist : nullptr);
  }
  out.consensus_p = out.bernoulli_p.mean();
  return out;
}

void attach_state_predictives(ParamSampleSet& samples, const ExperimentLog& log) {
  if (samples.family != ModelFamily::IoHmm) return;
  samples.validate();
  const int M = samples.size();
  samples.state_predictive.resize(M, samples.K);
  for (int j = 0; j < M; ++j) {
    const ParamBundle& b = samples.samples[static_cast<std::size_t>(j)];
    iohmm::IoHmmParams params;
    params.weights = iohmm::weights_from_readable(b.weights);
    params.trans = b.trans;
    params.pi0 = b.pi;
    samples.state_predictive.row(j) = iohmm::next_state_distribution(log, params).transpose();
  }
}

namespace {

double continuous_mi(const PredictiveSet& pred, const MiOptions& options) {
  const int M = static_cast<int>(pred.means.rows());
  const int K = static_cast<int>(pred.means.cols());
  const int G = options.grid_points;
  const double sigma = std::sqrt(pred.sigma_sq);
  const double lo = pred.means.minCoeff() - options.span_sigmas * sigma;
  const double hi = pred.means.maxCoeff() + options.span_sigmas * sigma;
  const double h = (hi - lo) / (G - 1);

  using Array = Eigen::ArrayXd;
  Array grid = Array::LinSpaced(G, lo, hi);
  const double norm = 1.0 / std::sqrt(2.0 * M_PI * pred.sigma_sq);
  const double inv2s = 1.0 / (2.0 * pred.sigma_sq);

  // MI = mean_j \int p_j ln p_j - \int pbar ln pbar  (same quadrature).
  Array pbar = Array::Zero(G);
  double mean_neg_entropy = 0.0;
  Array pj(G), work(G);
  for (int j = 0; j < M; ++j) {
    pj.setZero();
    for (int k = 0; k < K; ++k) {
      const double w = pred.weights(j, k);
      if (w <= 0.0) continue;
      work = -(grid - pred.means(j, k)).square() * inv2s;
      pj += (w * norm) * work.exp();
    }
    pbar += pj;
    // p ln p with 0 ln 0 = 0.
    work = pj * (pj + 1e-300).log();
    double integral = work.sum() - 0.5 * (work[0] + work[G - 1]);
    mean_neg_entropy += integral * h;
  }
  mean_neg_entropy /= M;
  pbar /= M;
  if (pbar.maxCoeff() <= 0.0) {
    throw std::runtime_error("mutual_information: predictive has no mass on the grid");
  }
  Array work2 = pbar * (pbar + 1e-300).log();
  const double consensus_neg_entropy = (work2.sum() - 0.5 * (work2[0] + work2[G - 1])) * h;
  return mean_neg_entropy - consensus_neg_entropy;
}

}  // namespace

double mutual_information(const ParamSampleSet& samples, const Eigen::Ref<const Vector>& x,
                          const MiOptions& options) {
  const PredictiveSet pred = predictive_set(samples, x);
  if (pred.binary) {
    const double q = pred.consensus_p;
    if (q <= 0.0 || q >= 1.0) return 0.0;  // all samples agree deterministically
    double mi = 0.0;
    for (int j = 0; j < pred.bernoulli_p.size(); ++j) {
      mi += bernoulli_kl(pred.bernoulli_p[j], q);
    }
    return mi / static_cast<double>(pred.bernoulli_p.size());
  }
  return continuous_mi(pred, options);
}

SelectionResult select_input(const ParamSampleSet& samples, const CandidateSet& candidates,
                             const MiOptions& options) {
  if (candidates.size() == 0) throw std::invalid_argument("select_input: no candidates");
  if (candidates.mode() == CandidateMode::Pool && candidates.remaining() == 0) {
    throw std::runtime_error("select_input: pool exhausted");
  }
  const int n = candidates.size();
  SelectionResult res;
  res.mi = Vector::Constant(n, std::numeric_limits<double>::quiet_NaN());

  auto eval_range = [&](int begin, int end) {
    for (int i = begin; i < end; ++i) {
      if (candidates.consumed(i)) continue;
      res.mi[i] = mutual_information(samples, candidates.input(i), options);
    }
  };
  const int threads = std::max(1, options.threads);
  if (threads == 1 || n < 2 * threads) {
    eval_range(0, n);
  } else {
    std::vector<std::thread> pool;
    const int chunk = (n + threads - 1) / threads;
    for (int w = 0; w < threads; ++w) {
      const int begin = w * chunk;
      const int end = std::min(n, begin + chunk);
      if (begin < end) pool.emplace_back(eval_range, begin, end);
    }
    for (auto& th : pool) th.join();
  }

  // Deterministic argmax with lowest-index tie break.
  int best = -1;
  double best_mi = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    if (std::isnan(res.mi[i])) continue;
    if (res.mi[i] > best_mi) {
      best_mi = res.mi[i];
      best = i;
    }
  }
  res.index = best;
  return res;
}

}  // namespace infomax
