#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace infomax {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

enum class ModelFamily { Mlr, IoHmm, Mglm, Glm };

std::string to_string(ModelFamily family);
ModelFamily model_family_from_string(const std::string& s);

enum class Strategy { Random, InfomaxGibbs, InfomaxVi, InfomaxGlmMismatch };

std::string to_string(Strategy strategy);
Strategy strategy_from_string(const std::string& s);

/// One (input, output) pair. Trial indices are 1-based and contiguous
/// within an ExperimentLog.
struct TrialRecord {
  int t = 0;
  Vector x;
  double y = 0.0;
};

struct LogMeta {
  ModelFamily family = ModelFamily::Mlr;
  std::uint64_t seed = 0;
  std::string strategy;
};

/// Append-only record of the data collected so far.
class ExperimentLog {
 public:
  ExperimentLog() = default;
  explicit ExperimentLog(LogMeta meta) : meta_(std::move(meta)) {}

  /// Appends one trial. rec.t must equal size() + 1.
  void append(TrialRecord rec);

  int size() const { return static_cast<int>(trials_.size()); }
  bool empty() const { return trials_.empty(); }

  /// 1-based access, matching the trial index.
  const TrialRecord& trial(int t) const;

  const std::vector<TrialRecord>& trials() const { return trials_; }
  const LogMeta& meta() const { return meta_; }
  LogMeta& meta() { return meta_; }

  int input_dim() const;

  /// Stacked inputs, one row per trial.
  Matrix design() const;
  /// Stacked outputs.
  Vector outputs() const;

  void save_csv(const std::string& path) const;
  static ExperimentLog load_csv(const std::string& path, LogMeta meta = {});

 private:
  std::vector<TrialRecord> trials_;
  LogMeta meta_;
};

bool operator==(const TrialRecord& a, const TrialRecord& b);
bool operator==(const ExperimentLog& a, const ExperimentLog& b);

}  // namespace infomax
