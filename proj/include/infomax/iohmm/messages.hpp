#pragma once

#include "infomax/core/rng.hpp"
#include "infomax/core/types.hpp"
#include "infomax/iohmm/model.hpp"

#include <vector>

namespace infomax::iohmm {

/// Scaled forward/backward messages. F rows sum to 1; B is scaled so that
/// the smoothed posteriors are F .* B row-normalized-free; scale holds the
/// per-trial forward normalizers. L is the (possibly row-shifted)
/// likelihood matrix the messages were computed from, with the log shifts
/// recorded so the marginal likelihood is exact.
struct HmmMessages {
  Matrix F;  // T x K
  Matrix B;  // T x K
  Matrix L;  // T x K
  Vector scale;
  Vector log_shift;
  double log_marginal = 0.0;

  /// Smoothed unary posteriors p(z_t = k | y_{1:T}).
  Matrix posteriors() const;
  /// Pairwise posteriors p(z_{t-1}=j, z_t=k | y_{1:T}), for t = 2..T.
  std::vector<Matrix> pairwise(const Matrix& trans) const;
};

HmmMessages forward_backward(const Vector& pi0, const Matrix& trans, const Matrix& likelihood);

/// Same, with log-likelihood input; rows are shifted by their maximum
/// before exponentiation so extreme weights cannot underflow.
HmmMessages forward_backward_log(const Vector& pi0, const Matrix& trans,
                                 const Matrix& log_likelihood);

/// Joint draw of the latent path from its exact posterior: z_1 from
/// pi0 .* B_1 .* L_1, then z_t from A(z_{t-1}, .) .* B_t .* L_t.
std::vector<int> sample_state_sequence(const Vector& pi0, const Matrix& trans, const Matrix& L,
                                       const HmmMessages& messages, RngStream& rng);

/// Unary state posteriors for a fitted model on a data log.
Matrix decode_states(const ExperimentLog& log, const IoHmmParams& params);

std::vector<int> hard_decode(const Matrix& posteriors);

/// Distribution of the latent on the *next* trial given the log: the
/// filtered final state pushed through the transition matrix, or pi0 for
/// an empty log.
Vector next_state_distribution(const ExperimentLog& log, const IoHmmParams& params);

}  // namespace infomax::iohmm
