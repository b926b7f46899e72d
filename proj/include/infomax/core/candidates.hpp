#pragma once

#include "infomax/core/types.hpp"

#include <optional>
#include <string>
#include <vector>

namespace infomax {

enum class CandidateMode { Grid, Pool };

/// Parsed candidate-set specification. Textual forms:
///   circle-grid:<step_deg>
///   line-grid:<lo>:<hi>:<step>
///   hypersphere:<n>:<dim>:<seed>
///   pool:<csv path>
struct CandidateSpec {
  enum class Kind { CircleGrid, LineGrid, Hypersphere, PoolFile, None };
  Kind kind = Kind::None;
  double step = 0.0;
  double lo = 0.0, hi = 0.0;
  int count = 0, dim = 0;
  std::uint64_t seed = 0;
  std::string path;

  static CandidateSpec parse(const std::string& text);
  std::string to_string() const;
};

/// Finite ordered set of candidate inputs. Grid mode: inputs only. Pool
/// mode: each input carries a stored output, revealed at most once.
class CandidateSet {
 public:
  static CandidateSet circle_grid(double step_deg);
  static CandidateSet line_grid(double lo, double hi, double step);
  static CandidateSet hypersphere(int n, int dim, std::uint64_t seed);
  static CandidateSet pool_from_csv(const std::string& path);
  static CandidateSet pool_from_data(Matrix inputs, Vector outputs);

  int size() const { return static_cast<int>(inputs_.rows()); }
  int dim() const { return static_cast<int>(inputs_.cols()); }
  CandidateMode mode() const { return mode_; }

  Eigen::Ref<const Matrix> inputs() const { return inputs_; }
  Vector input(int i) const { return inputs_.row(i).transpose(); }

  bool consumed(int i) const;
  int remaining() const;
  /// Pool mode: reveals and consumes the stored output for row i.
  double consume(int i);
  double pool_output(int i) const;

  const CandidateSpec& spec() const { return spec_; }

 private:
  CandidateSet() = default;
  Matrix inputs_;  // one candidate per row
  CandidateMode mode_ = CandidateMode::Grid;
  Vector pool_y_;
  std::vector<bool> consumed_;
  CandidateSpec spec_;
};

CandidateSet build_candidate_set(const CandidateSpec& spec);

}  // namespace infomax
