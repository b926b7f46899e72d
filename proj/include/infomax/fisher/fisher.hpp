#pragma once

#include "infomax/core/rng.hpp"
#include "infomax/core/types.hpp"
#include "infomax/mlr/model.hpp"

#include <vector>

namespace infomax::fisher {

/// Fisher information for the stacked MLR weights: a KD x KD matrix laid
/// out as a K x K grid of D x D blocks.
struct FisherMatrix {
  Matrix J;
  int K = 0;
  int D = 0;

  Eigen::Block<const Matrix> block(int i, int j) const {
    return J.block(i * D, j * D, D, D);
  }
  double trace() const { return J.trace(); }
  void validate() const;
};

/// Perfect-identifiability limit: block-diagonal with block i equal to
/// (pi_i / sigma_sq) x x'. Trace is |x|^2 / sigma_sq.
FisherMatrix identifiable(const Eigen::Ref<const Vector>& x, const Eigen::Ref<const Vector>& pi,
                          double sigma_sq);

/// Non-identifiability limit: block (i,j) equal to (pi_i pi_j / sigma_sq)
/// x x'. Trace is (pi'pi) |x|^2 / sigma_sq.
FisherMatrix nonidentifiable(const Eigen::Ref<const Vector>& x, const Eigen::Ref<const Vector>& pi,
                             double sigma_sq);

struct McTrace {
  double trace = 0.0;
  double std_error = 0.0;  // NaN when n == 1
  long n = 0;
};

/// Monte Carlo estimate of the Fisher trace at input x under the given
/// model, drawing outputs from the marginal predictive.
McTrace mc_trace(const Eigen::Ref<const Vector>& x, const mlr::MlrParams& params, long n_samples,
                 RngStream& rng);

struct ScanRow {
  double angle_deg = 0.0;
  double sigma_sq = 0.0;
  double trace = 0.0;
  double std_error = 0.0;
};

/// Fisher trace over unit-norm inputs at the given angles, for each noise
/// level. The model must be 2-D; its mixing weights are kept, its noise is
/// overridden per row.
std::vector<ScanRow> angle_scan(const mlr::MlrParams& model, const std::vector<double>& angles_deg,
                                const std::vector<double>& sigma_sqs, long n_samples,
                                RngStream& rng);

void write_scan_csv(const std::string& path, const std::vector<ScanRow>& rows);

}  // namespace infomax::fisher
