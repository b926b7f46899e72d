#include "infomax/iohmm/glm.hpp"

#include "infomax/iohmm/model.hpp"
#include "infomax/randkit/samplers.hpp"
#include "infomax/randkit/special.hpp"

#include <cmath>
#include <stdexcept>

namespace infomax::iohmm {

NewtonResult newton_maximize(const ConcaveObjective& obj, Vector init, double grad_tol,
                             int max_iter) {
  Vector x = std::move(init);
  double fx = obj.value(x);
  for (int iter = 0; iter < max_iter; ++iter) {
    const Vector g = obj.grad(x);
    if (g.norm() <= grad_tol) {
      NewtonResult res;
      res.x = std::move(x);
      res.neg_hess = -obj.hess(res.x);
      res.converged = true;
      res.iterations = iter;
      return res;
    }
    const Matrix H = obj.hess(x);
    Vector dir = (-H).ldlt().solve(g);
    if (!dir.allFinite() || dir.dot(g) <= 0.0) dir = g;  // fall back to gradient ascent
    // Step halving.
    double step = 1.0;
    for (int h = 0; h < 60; ++h) {
      const Vector cand = x + step * dir;
      const double fc = obj.value(cand);
      if (fc >= fx - 1e-14) {
        x = cand;
        fx = fc;
        break;
      }
      step *= 0.5;
    }
  }
  throw std::runtime_error("newton_maximize: no convergence after " + std::to_string(max_iter) +
                           " iterations");
}

LaplaceMhResult laplace_mh_step(const ConcaveObjective& log_post, const Vector& w_old,
                                RngStream& rng) {
  const NewtonResult opt = newton_maximize(log_post, w_old);
  const int d = static_cast<int>(opt.x.size());
  // Proposal covariance C = (-H)^-1 via the Cholesky of -H.
  const Eigen::LLT<Matrix> llt(0.5 * (opt.neg_hess + opt.neg_hess.transpose()));
  if (llt.info() != Eigen::Success) {
    throw std::runtime_error("laplace_mh_step: Hessian not negative definite at the mode");
  }
  Vector z(d);
  for (int i = 0; i < d; ++i) z[i] = rng.normal();
  // x = mode + L^-T z has covariance (L L')^-1 = C.
  const Vector w_star = opt.x + llt.matrixU().solve(z);

  // log N(w; mode, C) up to the shared constant: -0.5 (w-mode)' (-H) (w-mode).
  auto log_prop = [&](const Vector& w) {
    const Vector d0 = w - opt.x;
    return -0.5 * d0.dot(opt.neg_hess * d0);
  };
  const double log_alpha = log_post.value(w_star) - log_post.value(w_old) + log_prop(w_old) -
                           log_prop(w_star);
  LaplaceMhResult res;
  res.alpha = std::min(1.0, std::exp(std::min(log_alpha, 0.0)));
  res.accepted = log_alpha >= 0.0 || rng.uniform() < std::exp(log_alpha);
  res.w = res.accepted ? w_star : w_old;
  return res;
}

ConcaveObjective bernoulli_glm_objective(const Matrix& Phi, const Vector& y, const GlmPrior& prior,
                                         const Vector* trial_weights) {
  const int d = static_cast<int>(Phi.cols() == 0 ? prior.w0.size() : Phi.cols());
  if (prior.w0.size() != d) throw std::invalid_argument("glm objective: prior dimension mismatch");
  if (!(prior.sigma0_sq > 0.0)) throw std::invalid_argument("glm objective: sigma0_sq must be positive");
  if (trial_weights && trial_weights->size() != Phi.rows()) {
    throw std::invalid_argument("glm objective: trial weight size mismatch");
  }
  const double inv_prior = 1.0 / prior.sigma0_sq;
  const Vector w0 = prior.w0;
  Vector q = trial_weights ? *trial_weights : Vector::Ones(Phi.rows());

  ConcaveObjective obj;
  obj.value = [Phi, y, w0, inv_prior, q](const Vector& w) {
    double ll = 0.0;
    const Vector eta = Phi * w;
    for (int t = 0; t < eta.size(); ++t) {
      ll += q[t] * (y[t] > 0.5 ? log_sigmoid(eta[t]) : log_sigmoid(-eta[t]));
    }
    return ll - 0.5 * inv_prior * (w - w0).squaredNorm();
  };
  obj.grad = [Phi, y, w0, inv_prior, q](const Vector& w) {
    const Vector eta = Phi * w;
    Vector resid(eta.size());
    for (int t = 0; t < eta.size(); ++t) resid[t] = q[t] * (y[t] - sigmoid(eta[t]));
    return (Phi.transpose() * resid - inv_prior * (w - w0)).eval();
  };
  obj.hess = [Phi, y, w0, inv_prior, q](const Vector& w) {
    const Vector eta = Phi * w;
    Vector s(eta.size());
    for (int t = 0; t < eta.size(); ++t) {
      const double p = sigmoid(eta[t]);
      s[t] = q[t] * p * (1.0 - p);
    }
    Matrix H = -(Phi.transpose() * s.asDiagonal() * Phi);
    H.diagonal().array() -= inv_prior;
    return H;
  };
  return obj;
}

Vector glm_sample_posterior(const Matrix& Phi, const Vector& y, const GlmPrior& prior,
                            const Vector& w_old, RngStream& rng, LaplaceMhStats* stats) {
  const ConcaveObjective obj = bernoulli_glm_objective(Phi, y, prior);
  const LaplaceMhResult res = laplace_mh_step(obj, w_old, rng);
  if (stats) {
    ++stats->proposals;
    if (res.accepted) ++stats->accepts;
  }
  return res.w;
}

ParamSampleSet glm_mismatch_posterior(const ExperimentLog& log, const GlmPrior& prior, int M,
                                      int burn_in, RngStream& rng, LaplaceMhStats* stats) {
  if (M < 1) throw std::invalid_argument("glm_mismatch_posterior: M must be >= 1");
  for (const auto& r : log.trials()) {
    if (r.y != 0.0 && r.y != 1.0) {
      throw std::invalid_argument("glm_mismatch_posterior: outputs must be binary");
    }
  }
  const Matrix Phi = log.empty() ? Matrix(0, prior.w0.size()) : augment_design(log.design());
  const Vector y = log.outputs();
  const int d = static_cast<int>(prior.w0.size());

  ParamSampleSet out;
  out.family = ModelFamily::Glm;
  out.K = 1;
  out.D = d - 1;
  out.samples.reserve(static_cast<std::size_t>(M));
  Vector w = prior.w0;
  for (int sweep = 0; sweep < burn_in + M; ++sweep) {
    w = glm_sample_posterior(Phi, y, prior, w, rng, stats);
    if (sweep >= burn_in) {
      ParamBundle b;
      b.family = ModelFamily::Glm;
      b.weights = readable_weight_matrix({from_augmented(w)});
      out.samples.push_back(std::move(b));
    }
  }
  return out;
}

}  // namespace infomax::iohmm
