#include "infomax/core/candidates.hpp"

#include "infomax/core/csv.hpp"
#include "infomax/core/rng.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace infomax {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string field;
  while (std::getline(ss, field, sep)) out.push_back(field);
  return out;
}

}  // namespace

CandidateSpec CandidateSpec::parse(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.empty()) throw std::invalid_argument("empty candidate spec");
  CandidateSpec spec;
  const std::string& kind = parts[0];
  try {
    if (kind == "circle-grid" && parts.size() == 2) {
      spec.kind = Kind::CircleGrid;
      spec.step = std::stod(parts[1]);
    } else if (kind == "line-grid" && parts.size() == 4) {
      spec.kind = Kind::LineGrid;
      spec.lo = std::stod(parts[1]);
      spec.hi = std::stod(parts[2]);
      spec.step = std::stod(parts[3]);
    } else if (kind == "hypersphere" && parts.size() == 4) {
      spec.kind = Kind::Hypersphere;
      spec.count = std::stoi(parts[1]);
      spec.dim = std::stoi(parts[2]);
      spec.seed = std::stoull(parts[3]);
    } else if (kind == "pool" && parts.size() >= 2) {
      spec.kind = Kind::PoolFile;
      spec.path = text.substr(kind.size() + 1);
    } else {
      throw std::invalid_argument("");
    }
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed candidate spec: " + text);
  }
  return spec;
}

std::string CandidateSpec::to_string() const {
  std::stringstream ss;
  switch (kind) {
    case Kind::CircleGrid: ss << "circle-grid:" << step; break;
    case Kind::LineGrid: ss << "line-grid:" << lo << ":" << hi << ":" << step; break;
    case Kind::Hypersphere: ss << "hypersphere:" << count << ":" << dim << ":" << seed; break;
    case Kind::PoolFile: ss << "pool:" << path; break;
    case Kind::None: ss << "none"; break;
  }
  return ss.str();
}

CandidateSet CandidateSet::circle_grid(double step_deg) {
  if (step_deg <= 0.0) throw std::invalid_argument("circle-grid: step must be positive");
  const int n = static_cast<int>(std::floor(360.0 / step_deg - 1e-9)) + 1;
  CandidateSet set;
  set.inputs_.resize(n, 2);
  for (int i = 0; i < n; ++i) {
    const double rad = i * step_deg * std::numbers::pi / 180.0;
    set.inputs_(i, 0) = std::cos(rad);
    set.inputs_(i, 1) = std::sin(rad);
  }
  set.spec_ = {CandidateSpec::Kind::CircleGrid, step_deg, 0, 0, 0, 0, 0, ""};
  return set;
}

CandidateSet CandidateSet::line_grid(double lo, double hi, double step) {
  if (step <= 0.0) throw std::invalid_argument("line-grid: step must be positive");
  if (hi < lo) throw std::invalid_argument("line-grid: hi < lo");
  const int n = static_cast<int>(std::floor((hi - lo) / step + 1e-9)) + 1;
  CandidateSet set;
  set.inputs_.resize(n, 1);
  for (int i = 0; i < n; ++i) set.inputs_(i, 0) = lo + i * step;
  set.spec_ = {CandidateSpec::Kind::LineGrid, step, lo, hi, 0, 0, 0, ""};
  return set;
}

CandidateSet CandidateSet::hypersphere(int n, int dim, std::uint64_t seed) {
  if (n <= 0 || dim <= 0) throw std::invalid_argument("hypersphere: n and dim must be positive");
  RngStream rng(seed, 0x5CA7E);
  CandidateSet set;
  set.inputs_.resize(n, dim);
  for (int i = 0; i < n; ++i) {
    Vector v(dim);
    do {
      for (int j = 0; j < dim; ++j) v[j] = rng.normal();
    } while (v.norm() == 0.0);
    set.inputs_.row(i) = v.transpose() / v.norm();
  }
  set.spec_ = {CandidateSpec::Kind::Hypersphere, 0, 0, 0, n, dim, seed, ""};
  return set;
}

CandidateSet CandidateSet::pool_from_csv(const std::string& path) {
  const csv::Table table = csv::read(path);
  if (table.header.empty() || table.header[0] != "y") {
    throw std::runtime_error(path + ": expected pool header y,x0,...");
  }
  if (table.rows.empty()) throw std::runtime_error(path + ": pool file has no rows");
  const int d = static_cast<int>(table.header.size()) - 1;
  if (d < 1) throw std::runtime_error(path + ": pool file has no input columns");
  Matrix X(static_cast<int>(table.rows.size()), d);
  Vector y(static_cast<int>(table.rows.size()));
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    y[static_cast<int>(i)] = table.rows[i][0];
    for (int j = 0; j < d; ++j) X(static_cast<int>(i), j) = table.rows[i][static_cast<std::size_t>(j) + 1];
  }
  CandidateSet set = pool_from_data(std::move(X), std::move(y));
  set.spec_ = {CandidateSpec::Kind::PoolFile, 0, 0, 0, 0, 0, 0, path};
  return set;
}

CandidateSet CandidateSet::pool_from_data(Matrix inputs, Vector outputs) {
  if (inputs.rows() == 0) throw std::invalid_argument("empty pool");
  if (inputs.rows() != outputs.size()) throw std::invalid_argument("pool size mismatch");
  CandidateSet set;
  set.inputs_ = std::move(inputs);
  set.pool_y_ = std::move(outputs);
  set.mode_ = CandidateMode::Pool;
  set.consumed_.assign(static_cast<std::size_t>(set.inputs_.rows()), false);
  return set;
}

bool CandidateSet::consumed(int i) const {
  if (mode_ != CandidateMode::Pool) return false;
  return consumed_[static_cast<std::size_t>(i)];
}

int CandidateSet::remaining() const {
  if (mode_ != CandidateMode::Pool) return size();
  int n = 0;
  for (bool c : consumed_)
    if (!c) ++n;
  return n;
}

double CandidateSet::consume(int i) {
  if (mode_ != CandidateMode::Pool) throw std::logic_error("consume: not a pool");
  if (i < 0 || i >= size()) throw std::out_of_range("consume: index out of range");
  auto idx = static_cast<std::size_t>(i);
  if (consumed_[idx]) throw std::logic_error("consume: row already revealed");
  consumed_[idx] = true;
  return pool_y_[i];
}

double CandidateSet::pool_output(int i) const {
  if (mode_ != CandidateMode::Pool) throw std::logic_error("pool_output: not a pool");
  return pool_y_[i];
}

CandidateSet build_candidate_set(const CandidateSpec& spec) {
  switch (spec.kind) {
    case CandidateSpec::Kind::CircleGrid: return CandidateSet::circle_grid(spec.step);
    case CandidateSpec::Kind::LineGrid: return CandidateSet::line_grid(spec.lo, spec.hi, spec.step);
    case CandidateSpec::Kind::Hypersphere:
      return CandidateSet::hypersphere(spec.count, spec.dim, spec.seed);
    case CandidateSpec::Kind::PoolFile: return CandidateSet::pool_from_csv(spec.path);
    case CandidateSpec::Kind::None: break;
  }
  throw std::invalid_argument("cannot build candidate set from empty spec");
}

}  // namespace infomax
