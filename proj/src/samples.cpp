#include "infomax/samples.hpp"

#include <stdexcept>

namespace infomax {

void ParamSampleSet::validate() const {
  if (samples.empty()) throw std::invalid_argument("sample set: empty");
  const int wc = static_cast<int>(samples.front().weights.cols());
  for (const auto& b : samples) {
    if (b.family != family) throw std::invalid_argument("sample set: mixed families");
    if (b.weights.rows() != K || b.weights.cols() != wc) {
      throw std::invalid_argument("sample set: weight shape mismatch");
    }
    if (family != ModelFamily::Glm && b.pi.size() != K) {
      throw std::invalid_argument("sample set: pi size mismatch");
    }
    if (family == ModelFamily::IoHmm && (b.trans.rows() != K || b.trans.cols() != K)) {
      throw std::invalid_argument("sample set: transition shape mismatch");
    }
  }
}

int ParamSampleSet::flat_dim() const {
  if (samples.empty()) return 0;
  const auto& b = samples.front();
  return static_cast<int>(b.weights.size() + b.trans.size() + b.pi.size());
}

Vector ParamSampleSet::flatten(const ParamBundle& b) const {
  Vector v(flat_dim());
  int at = 0;
  for (int k = 0; k < b.weights.rows(); ++k) {
    v.segment(at, b.weights.cols()) = b.weights.row(k).transpose();
    at += static_cast<int>(b.weights.cols());
  }
  for (int k = 0; k < b.trans.rows(); ++k) {
    v.segment(at, b.trans.cols()) = b.trans.row(k).transpose();
    at += static_cast<int>(b.trans.cols());
  }
  if (b.pi.size()) {
    v.segment(at, b.pi.size()) = b.pi;
    at += static_cast<int>(b.pi.size());
  }
  return v;
}

ParamBundle ParamSampleSet::mean_bundle() const {
  validate();
  ParamBundle mean = samples.front();
  mean.weights.setZero();
  if (mean.pi.size()) mean.pi.setZero();
  if (mean.trans.size()) mean.trans.setZero();
  for (const auto& b : samples) {
    mean.weights += b.weights;
    if (mean.pi.size()) mean.pi += b.pi;
    if (mean.trans.size()) mean.trans += b.trans;
  }
  const double inv = 1.0 / size();
  mean.weights *= inv;
  if (mean.pi.size()) mean.pi *= inv;
  if (mean.trans.size()) mean.trans *= inv;
  return mean;
}

ParamBundle permute_states(const ParamBundle& b, const std::vector<int>& perm) {
  const int K = static_cast<int>(b.weights.rows());
  if (static_cast<int>(perm.size()) != K) throw std::invalid_argument("permute_states: bad permutation");
  ParamBundle out = b;
  for (int k = 0; k < K; ++k) {
    out.weights.row(k) = b.weights.row(perm[static_cast<std::size_t>(k)]);
    if (b.pi.size()) out.pi[k] = b.pi[perm[static_cast<std::size_t>(k)]];
  }
  if (b.trans.size()) {
    for (int i = 0; i < K; ++i) {
      for (int j = 0; j < K; ++j) {
        out.trans(i, j) = b.trans(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
      }
    }
  }
  return out;
}

ParamSampleSet merge_sample_sets(const std::vector<ParamSampleSet>& sets) {
  if (sets.empty()) throw std::invalid_argument("merge: no sample sets");
  ParamSampleSet merged = sets.front();
  merged.samples.clear();
  for (const auto& s : sets) {
    if (s.family != merged.family || s.K != merged.K || s.D != merged.D) {
      throw std::invalid_argument("merge: incompatible sample sets");
    }
    merged.samples.insert(merged.samples.end(), s.samples.begin(), s.samples.end());
  }
  merged.validate();
  return merged;
}

}  // namespace infomax
