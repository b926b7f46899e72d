#include "infomax/fisher/fisher.hpp"

#include "infomax/core/csv.hpp"
#include "infomax/randkit/samplers.hpp"
#include "infomax/randkit/special.hpp"

#include <cmath>
#include <fstream>
#include <numbers>

namespace infomax::fisher {

void FisherMatrix::validate() const {
  if (J.rows() != K * D || J.cols() != K * D) throw std::logic_error("fisher: bad layout");
  if ((J - J.transpose()).cwiseAbs().maxCoeff() > 1e-8) {
    throw std::logic_error("fisher: matrix not symmetric");
  }
  const Eigen::SelfAdjointEigenSolver<Matrix> es(J, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-8 * std::max(1.0, J.cwiseAbs().maxCoeff())) {
    throw std::logic_error("fisher: matrix not PSD");
  }
}

namespace {

void check_simplex(const Eigen::Ref<const Vector>& pi) {
  if ((pi.array() < -1e-12).any() || std::abs(pi.sum() - 1.0) > 1e-9) {
    throw std::invalid_argument("fisher: pi not on the simplex");
  }
}

}  // namespace

FisherMatrix identifiable(const Eigen::Ref<const Vector>& x, const Eigen::Ref<const Vector>& pi,
                          double sigma_sq) {
  check_simplex(pi);
  const int K = static_cast<int>(pi.size());
  const int D = static_cast<int>(x.size());
  const Matrix outer = x * x.transpose();
  FisherMatrix f;
  f.K = K;
  f.D = D;
  f.J = Matrix::Zero(K * D, K * D);
  for (int i = 0; i < K; ++i) {
    f.J.block(i * D, i * D, D, D) = (pi[i] / sigma_sq) * outer;
  }
  return f;
}

FisherMatrix nonidentifiable(const Eigen::Ref<const Vector>& x, const Eigen::Ref<const Vector>& pi,
                             double sigma_sq) {
  check_simplex(pi);
  const int K = static_cast<int>(pi.size());
  const int D = static_cast<int>(x.size());
  const Matrix outer = x * x.transpose();
  FisherMatrix f;
  f.K = K;
  f.D = D;
  f.J = Matrix::Zero(K * D, K * D);
  for (int i = 0; i < K; ++i) {
    for (int j = 0; j < K; ++j) {
      f.J.block(i * D, j * D, D, D) = (pi[i] * pi[j] / sigma_sq) * outer;
    }
  }
  return f;
}

McTrace mc_trace(const Eigen::Ref<const Vector>& x, const mlr::MlrParams& params, long n_samples,
                 RngStream& rng) {
  if (n_samples < 1) throw std::invalid_argument("mc_trace: n_samples must be >= 1");
  params.validate();
  const int K = params.K();
  const double sigma_sq = params.sigma_sq;
  const double sigma = std::sqrt(sigma_sq);
  const Vector means = params.weights * x;  // component means at x
  Vector logpi(K);
  for (int k = 0; k < K; ++k) {
    logpi[k] = params.pi[k] > 0.0 ? std::log(params.pi[k])
                                  : -std::numeric_limits<double>::infinity();
  }

  // Per draw: g = sum_i (y - m_i)^2 r_i(y)^2 with responsibilities r.
  // Trace = |x|^2 / sigma^4 * E[g].
  double sum = 0.0, sum_sq = 0.0;
  Vector logr(K);
  for (long s = 0; s < n_samples; ++s) {
    const int z = sample_categorical(params.pi, rng);
    const double y = means[z] + sigma * rng.normal();
    for (int k = 0; k < K; ++k) {
      const double resid = y - means[k];
      logr[k] = logpi[k] - 0.5 * resid * resid / sigma_sq;
    }
    const double lse = log_sum_exp(logr);
    double g = 0.0;
    for (int k = 0; k < K; ++k) {
      const double r = std::exp(logr[k] - lse);
      const double resid = y - means[k];
      g += resid * resid * r * r;
    }
    sum += g;
    sum_sq += g * g;
  }
  const double scale = x.squaredNorm() / (sigma_sq * sigma_sq);
  const double mean_g = sum / static_cast<double>(n_samples);
  McTrace out;
  out.n = n_samples;
  out.trace = scale * mean_g;
  if (n_samples > 1) {
    const double var_g =
        std::max(0.0, sum_sq / n_samples - mean_g * mean_g) * n_samples / (n_samples - 1.0);
    out.std_error = scale * std::sqrt(var_g / static_cast<double>(n_samples));
  } else {
    out.std_error = std::numeric_limits<double>::quiet_NaN();
  }
  return out;
}

std::vector<ScanRow> angle_scan(const mlr::MlrParams& model, const std::vector<double>& angles_deg,
                                const std::vector<double>& sigma_sqs, long n_samples,
                                RngStream& rng) {
  if (model.D() != 2) throw std::invalid_argument("angle_scan: model must be 2-D");
  std::vector<ScanRow> rows;
  rows.reserve(angles_deg.size() * sigma_sqs.size());
  std::uint64_t cell = 0;
  for (double s2 : sigma_sqs) {
    if (!(s2 > 0.0)) throw std::invalid_argument("angle_scan: sigma_sq must be positive");
    mlr::MlrParams m = model;
    m.sigma_sq = s2;
    for (double deg : angles_deg) {
      const double rad = deg * std::numbers::pi / 180.0;
      Vector x(2);
      x << std::cos(rad), std::sin(rad);
      RngStream cell_rng = rng.sub(cell++);
      const McTrace mc = mc_trace(x, m, n_samples, cell_rng);
      rows.push_back({deg, s2, mc.trace, mc.std_error});
    }
  }
  return rows;
}

void write_scan_csv(const std::string& path, const std::vector<ScanRow>& rows) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << "angle_deg,sigma_sq,trace,stderr\n";
  for (const auto& r : rows) {
    out << csv::format(r.angle_deg) << "," << csv::format(r.sigma_sq) << ","
        << csv::format(r.trace) << "," << csv::format(r.std_error) << "\n";
  }
}

}  // namespace infomax::fisher
