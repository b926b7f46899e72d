#include "infomax/core/types.hpp"

#include "infomax/core/csv.hpp"

#include <fstream>
#include <sstream>

namespace infomax {

std::string to_string(ModelFamily family) {
  switch (family) {
    case ModelFamily::Mlr: return "mlr";
    case ModelFamily::IoHmm: return "iohmm";
    case ModelFamily::Mglm: return "mglm";
    case ModelFamily::Glm: return "glm";
  }
  throw std::logic_error("unknown model family");
}

ModelFamily model_family_from_string(const std::string& s) {
  if (s == "mlr") return ModelFamily::Mlr;
  if (s == "iohmm") return ModelFamily::IoHmm;
  if (s == "mglm") return ModelFamily::Mglm;
  if (s == "glm") return ModelFamily::Glm;
  throw std::invalid_argument("unknown model family: " + s);
}

std::string to_string(Strategy strategy) {
  switch (strategy) {
    case Strategy::Random: return "random";
    case Strategy::InfomaxGibbs: return "infomax-gibbs";
    case Strategy::InfomaxVi: return "infomax-vi";
    case Strategy::InfomaxGlmMismatch: return "infomax-glm-mismatch";
  }
  throw std::logic_error("unknown strategy");
}

Strategy strategy_from_string(const std::string& s) {
  if (s == "random") return Strategy::Random;
  if (s == "infomax-gibbs") return Strategy::InfomaxGibbs;
  if (s == "infomax-vi") return Strategy::InfomaxVi;
  if (s == "infomax-glm-mismatch") return Strategy::InfomaxGlmMismatch;
  throw std::invalid_argument("unknown strategy: " + s);
}

void ExperimentLog::append(TrialRecord rec) {
  if (rec.t != size() + 1) {
    throw std::invalid_argument("log append: trial index " + std::to_string(rec.t) +
                                " breaks contiguity (expected " +
                                std::to_string(size() + 1) + ")");
  }
  if (!trials_.empty() && rec.x.size() != trials_.front().x.size()) {
    throw std::invalid_argument("log append: input dimension mismatch");
  }
  trials_.push_back(std::move(rec));
}

const TrialRecord& ExperimentLog::trial(int t) const {
  if (t < 1 || t > size()) throw std::out_of_range("trial index out of range");
  return trials_[static_cast<std::size_t>(t - 1)];
}

int ExperimentLog::input_dim() const {
  return trials_.empty() ? 0 : static_cast<int>(trials_.front().x.size());
}

Matrix ExperimentLog::design() const {
  Matrix X(size(), input_dim());
  for (int i = 0; i < size(); ++i) X.row(i) = trials_[i].x.transpose();
  return X;
}

Vector ExperimentLog::outputs() const {
  Vector y(size());
  for (int i = 0; i < size(); ++i) y[i] = trials_[i].y;
  return y;
}

void ExperimentLog::save_csv(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  const int d = input_dim();
  out << "t,y";
  for (int j = 0; j < d; ++j) out << ",x" << j;
  out << "\n";
  for (const auto& r : trials_) {
    out << r.t << "," << csv::format(r.y);
    for (int j = 0; j < d; ++j) out << "," << csv::format(r.x[j]);
    out << "\n";
  }
}

ExperimentLog ExperimentLog::load_csv(const std::string& path, LogMeta meta) {
  const csv::Table table = csv::read(path);
  if (table.header.size() < 2 || table.header[0] != "t" || table.header[1] != "y") {
    throw std::runtime_error(path + ": expected header t,y,x0,...");
  }
  const int d = static_cast<int>(table.header.size()) - 2;
  ExperimentLog log(std::move(meta));
  for (const auto& row : table.rows) {
    TrialRecord rec;
    rec.t = static_cast<int>(row[0]);
    rec.y = row[1];
    rec.x = Vector(d);
    for (int j = 0; j < d; ++j) rec.x[j] = row[static_cast<std::size_t>(j) + 2];
    log.append(std::move(rec));
  }
  return log;
}

bool operator==(const TrialRecord& a, const TrialRecord& b) {
  return a.t == b.t && a.y == b.y && a.x.size() == b.x.size() && a.x == b.x;
}

bool operator==(const ExperimentLog& a, const ExperimentLog& b) {
  return a.trials() == b.trials();
}

}  // namespace infomax
