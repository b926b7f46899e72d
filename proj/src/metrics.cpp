#include "infomax/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace infomax {

double posterior_entropy(const ParamSampleSet& samples) {
  samples.validate();
  const int M = samples.size();
  if (M < 2) throw std::invalid_argument("posterior_entropy: need at least 2 samples");
  const int d = samples.flat_dim();
  Matrix data(M, d);
  for (int j = 0; j < M; ++j) {
    data.row(j) = samples.flatten(samples.samples[static_cast<std::size_t>(j)]).transpose();
  }
  const Vector mean = data.colwise().mean().transpose();
  data.rowwise() -= mean.transpose();
  Matrix cov = data.transpose() * data / static_cast<double>(M - 1);
  cov.diagonal().array() += 1e-10;
  // log det via LDLT (cov is symmetric positive definite after the jitter).
  const Eigen::LDLT<Matrix> ldlt(cov);
  return ldlt.vectorD().array().max(1e-300).log().sum();
}

namespace {

double block_rmse(const Matrix& a, const Matrix& b) {
  return std::sqrt((a - b).squaredNorm() / static_cast<double>(a.size()));
}

}  // namespace

AlignedRmse aligned_rmse(const ParamBundle& estimate, const ParamBundle& truth) {
  if (estimate.family != truth.family || estimate.weights.rows() != truth.weights.rows() ||
      estimate.weights.cols() != truth.weights.cols()) {
    throw std::invalid_argument("aligned_rmse: bundles are not comparable");
  }
  const int K = static_cast<int>(truth.weights.rows());
  std::vector<int> perm(static_cast<std::size_t>(K));
  std::iota(perm.begin(), perm.end(), 0);

  // Search all K! permutations for the weight-RMSE minimizer.
  std::vector<int> best = perm;
  double best_rmse = std::numeric_limits<double>::infinity();
  do {
    double sq = 0.0;
    for (int k = 0; k < K; ++k) {
      sq += (estimate.weights.row(perm[static_cast<std::size_t>(k)]) - truth.weights.row(k))
                .squaredNorm();
    }
    const double rmse = std::sqrt(sq / static_cast<double>(estimate.weights.size()));
    if (rmse < best_rmse) {
      best_rmse = rmse;
      best = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  AlignedRmse out;
  out.permutation = best;
  out.weights = best_rmse;
  if (truth.pi.size()) {
    Vector pi_aligned(K);
    for (int k = 0; k < K; ++k) pi_aligned[k] = estimate.pi[best[static_cast<std::size_t>(k)]];
    out.pi = std::sqrt((pi_aligned - truth.pi).squaredNorm() / static_cast<double>(K));
  } else {
    out.pi = std::numeric_limits<double>::quiet_NaN();
  }
  if (truth.trans.size()) {
    Matrix trans_aligned(K, K);
    for (int i = 0; i < K; ++i) {
      for (int j = 0; j < K; ++j) {
        trans_aligned(i, j) = estimate.trans(best[static_cast<std::size_t>(i)],
                                             best[static_cast<std::size_t>(j)]);
      }
    }
    out.trans = block_rmse(trans_aligned, truth.trans);
  } else {
    out.trans = std::numeric_limits<double>::quiet_NaN();
  }
  return out;
}

BicResult bic(const ExperimentLog& log, ModelFamily family, int K, RngStream& rng,
              const mlr::EmOptions& opts) {
  if (family != ModelFamily::Mlr) {
    throw std::invalid_argument("bic: only the MLR family is supported");
  }
  if (log.empty()) throw std::invalid_argument("bic: empty log");
  const int T = log.size();
  const int D = log.input_dim();
  const mlr::MlrEmResult fit = mlr::em_fit(log.design(), log.outputs(), K, opts, rng);
  const int free_params = K * D + (K - 1) + 1;  // weights, mixing, shared noise
  BicResult out;
  out.loglik = fit.loglik;
  out.bic = free_params * std::log(static_cast<double>(T)) - 2.0 * fit.loglik;
  out.em_converged = fit.converged;
  out.fit = fit.params;
  return out;
}

SelectionHistogram selection_histogram(const std::vector<int>& selections,
                                       const CandidateSet& candidates) {
  if (selections.empty()) throw std::invalid_argument("selection_histogram: no selections");
  SelectionHistogram out;
  out.counts.assign(static_cast<std::size_t>(candidates.size()), 0);
  for (int idx : selections) {
    if (idx < 0 || idx >= candidates.size()) {
      throw std::invalid_argument("selection_histogram: index out of range");
    }
    ++out.counts[static_cast<std::size_t>(idx)];
  }
  for (int i = 0; i < candidates.size(); ++i) {
    out.buckets.push_back({"index", static_cast<double>(i), out.counts[static_cast<std::size_t>(i)]});
  }
  const auto kind = candidates.spec().kind;
  if (kind == CandidateSpec::Kind::CircleGrid) {
    for (int i = 0; i < candidates.size(); ++i) {
      const Vector x = candidates.input(i);
      double deg = std::atan2(x[1], x[0]) * 180.0 / std::numbers::pi;
      if (deg < -1e-9) deg += 360.0;
      out.buckets.push_back({"angle_deg", deg, out.counts[static_cast<std::size_t>(i)]});
    }
  } else if (kind == CandidateSpec::Kind::LineGrid) {
    // |x| buckets of width 0.5.
    const double width = 0.5;
    std::vector<long> mag;
    for (int i = 0; i < candidates.size(); ++i) {
      const double m = std::abs(candidates.input(i)[0]);
      const auto bin = static_cast<std::size_t>(std::floor(m / width + 1e-12));
      if (mag.size() <= bin) mag.resize(bin + 1, 0);
      mag[bin] += out.counts[static_cast<std::size_t>(i)];
    }
    for (std::size_t b = 0; b < mag.size(); ++b) {
      out.buckets.push_back({"abs_mag", static_cast<double>(b) * width, mag[b]});
    }
  }
  return out;
}

}  // namespace infomax
