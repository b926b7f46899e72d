#include "infomax/core/config.hpp"

#include "infomax/core/csv.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace infomax {

namespace {

std::string format_vector(const Vector& v) {
  std::stringstream ss;
  for (int i = 0; i < v.size(); ++i) {
    if (i) ss << ",";
    ss << csv::format(v[i]);
  }
  return ss.str();
}

Vector parse_vector(const std::string& s) {
  std::vector<double> vals;
  std::stringstream ss(s);
  std::string field;
  while (std::getline(ss, field, ',')) vals.push_back(std::stod(field));
  Vector v(static_cast<int>(vals.size()));
  for (std::size_t i = 0; i < vals.size(); ++i) v[static_cast<int>(i)] = vals[i];
  return v;
}

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

}  // namespace

void ExperimentConfig::validate() const {
  if (K < 1) throw std::invalid_argument("config: K must be >= 1");
  if (D < 1) throw std::invalid_argument("config: D must be >= 1");
  if (M < 1) throw std::invalid_argument("config: M must be >= 1");
  if (T < 0) throw std::invalid_argument("config: T must be >= 0");
  if (burn_in < 0) throw std::invalid_argument("config: burn_in must be >= 0");
  if (chains < 1) throw std::invalid_argument("config: chains must be >= 1");
  if (M % chains != 0) throw std::invalid_argument("config: M must be divisible by chains");
  if (sigma_sq <= 0) throw std::invalid_argument("config: sigma_sq must be positive");
  if (sigma0_sq <= 0) throw std::invalid_argument("config: sigma0_sq must be positive");
  if (alpha <= 0) throw std::invalid_argument("config: alpha must be positive");
  if (refit_every < 1) throw std::invalid_argument("config: refit_every must be >= 1");
  if (metric_cadence < 1) throw std::invalid_argument("config: metric_cadence must be >= 1");
  if (vi_draws < 1) throw std::invalid_argument("config: vi_draws must be >= 1");
  if (w0.size() != 0 && w0.size() != weight_cols()) {
    throw std::invalid_argument("config: w0 has wrong dimension");
  }
  if (true_weights.size() != 0) {
    if (true_weights.rows() != K || true_weights.cols() != weight_cols()) {
      throw std::invalid_argument("config: true_weights must be K x " +
                                  std::to_string(weight_cols()));
    }
  }
  if (true_pi.size() != 0 && true_pi.size() != K) {
    throw std::invalid_argument("config: true_pi must have K entries");
  }
  if (family == ModelFamily::IoHmm && true_trans.size() != 0 &&
      (true_trans.rows() != K || true_trans.cols() != K)) {
    throw std::invalid_argument("config: true_A must be K x K");
  }
}

int ExperimentConfig::weight_cols() const {
  return family == ModelFamily::Mlr ? D : D + 1;
}

Vector ExperimentConfig::prior_mean(int dim) const {
  if (w0.size() == dim) return w0;
  if (w0.size() == 0) return Vector::Zero(dim);
  throw std::invalid_argument("config: w0 dimension mismatch");
}

std::string ExperimentConfig::serialize() const {
  std::stringstream out;
  out << "family = " << to_string(family) << "\n";
  out << "K = " << K << "\n";
  out << "D = " << D << "\n";
  out << "T = " << T << "\n";
  out << "M = " << M << "\n";
  out << "burn_in = " << burn_in << "\n";
  out << "chains = " << chains << "\n";
  out << "sigma_sq = " << csv::format(sigma_sq) << "\n";
  if (w0.size()) out << "w0 = " << format_vector(w0) << "\n";
  out << "sigma0_sq = " << csv::format(sigma0_sq) << "\n";
  out << "alpha = " << csv::format(alpha) << "\n";
  out << "strategy = " << to_string(strategy) << "\n";
  if (candidates.kind != CandidateSpec::Kind::None) {
    out << "candidates = " << candidates.to_string() << "\n";
  }
  out << "warmup = " << warmup << "\n";
  out << "refit_every = " << refit_every << "\n";
  out << "metric_cadence = " << metric_cadence << "\n";
  out << "vi_draws = " << vi_draws << "\n";
  out << "vi_max_iters = " << vi_max_iters << "\n";
  out << "vi_tol = " << csv::format(vi_tol) << "\n";
  out << "seed = " << seed << "\n";
  out << "threads = " << threads << "\n";
  if (!preset.empty()) out << "preset = " << preset << "\n";
  if (true_pi.size()) out << "true_pi = " << format_vector(true_pi) << "\n";
  for (int k = 0; k < true_weights.rows(); ++k) {
    out << "true_w_" << (k + 1) << " = " << format_vector(true_weights.row(k).transpose()) << "\n";
  }
  for (int k = 0; k < true_trans.rows(); ++k) {
    out << "true_A_" << (k + 1) << " = " << format_vector(true_trans.row(k).transpose()) << "\n";
  }
  return out.str();
}

ExperimentConfig ExperimentConfig::deserialize(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::stringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash_pos = line.find('#');
    if (hash_pos != std::string::npos) line = line.substr(0, hash_pos);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(lineno) +
                                  ": expected key = value");
    }
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }

  ExperimentConfig cfg;
  auto take = [&kv](const std::string& key) -> std::optional<std::string> {
    auto it = kv.find(key);
    if (it == kv.end()) return std::nullopt;
    std::string v = it->second;
    kv.erase(it);
    return v;
  };
  try {
    if (auto v = take("family")) cfg.family = model_family_from_string(*v);
    if (auto v = take("K")) cfg.K = std::stoi(*v);
    if (auto v = take("D")) cfg.D = std::stoi(*v);
    if (auto v = take("T")) cfg.T = std::stoi(*v);
    if (auto v = take("M")) cfg.M = std::stoi(*v);
    if (auto v = take("burn_in")) cfg.burn_in = std::stoi(*v);
    if (auto v = take("chains")) cfg.chains = std::stoi(*v);
    if (auto v = take("sigma_sq")) cfg.sigma_sq = std::stod(*v);
    if (auto v = take("w0")) cfg.w0 = parse_vector(*v);
    if (auto v = take("sigma0_sq")) cfg.sigma0_sq = std::stod(*v);
    if (auto v = take("alpha")) cfg.alpha = std::stod(*v);
    if (auto v = take("strategy")) cfg.strategy = strategy_from_string(*v);
    if (auto v = take("candidates")) cfg.candidates = CandidateSpec::parse(*v);
    if (auto v = take("warmup")) cfg.warmup = std::stoi(*v);
    if (auto v = take("refit_every")) cfg.refit_every = std::stoi(*v);
    if (auto v = take("metric_cadence")) cfg.metric_cadence = std::stoi(*v);
    if (auto v = take("vi_draws")) cfg.vi_draws = std::stoi(*v);
    if (auto v = take("vi_max_iters")) cfg.vi_max_iters = std::stoi(*v);
    if (auto v = take("vi_tol")) cfg.vi_tol = std::stod(*v);
    if (auto v = take("seed")) cfg.seed = std::stoull(*v);
    if (auto v = take("threads")) cfg.threads = std::stoi(*v);
    if (auto v = take("preset")) cfg.preset = *v;
    if (auto v = take("true_pi")) cfg.true_pi = parse_vector(*v);
    std::vector<Vector> ws, as;
    for (int k = 1;; ++k) {
      auto v = take("true_w_" + std::to_string(k));
      if (!v) break;
      ws.push_back(parse_vector(*v));
    }
    for (int k = 1;; ++k) {
      auto v = take("true_A_" + std::to_string(k));
      if (!v) break;
      as.push_back(parse_vector(*v));
    }
    if (!ws.empty()) {
      cfg.true_weights.resize(static_cast<int>(ws.size()), ws[0].size());
      for (std::size_t k = 0; k < ws.size(); ++k)
        cfg.true_weights.row(static_cast<int>(k)) = ws[k].transpose();
    }
    if (!as.empty()) {
      cfg.true_trans.resize(static_cast<int>(as.size()), as[0].size());
      for (std::size_t k = 0; k < as.size(); ++k)
        cfg.true_trans.row(static_cast<int>(k)) = as[k].transpose();
    }
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("config parse error: ") + e.what());
  }
  if (!kv.empty()) {
    throw std::invalid_argument("config: unknown key '" + kv.begin()->first + "'");
  }
  return cfg;
}

void ExperimentConfig::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << serialize();
}

ExperimentConfig ExperimentConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return deserialize(ss.str());
}

std::uint64_t ExperimentConfig::hash() const {
  // FNV-1a over the canonical serialization.
  const std::string s = serialize();
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return h;
}

}  // namespace infomax
