#include "infomax/harness/simulator.hpp"

#include "infomax/randkit/samplers.hpp"
#include "infomax/randkit/special.hpp"

#include <cmath>
#include <stdexcept>

namespace infomax::harness {

ParamBundle truth_bundle(const ExperimentConfig& config) {
  if (config.true_weights.size() == 0) {
    throw std::invalid_argument("simulator: config has no generative truth");
  }
  config.validate();
  ParamBundle b;
  switch (config.family) {
    case ModelFamily::Mlr: b.family = ModelFamily::Mlr; break;
    case ModelFamily::IoHmm: b.family = ModelFamily::IoHmm; break;
    case ModelFamily::Mglm: b.family = ModelFamily::Mglm; break;
    case ModelFamily::Glm: throw std::invalid_argument("simulator: glm is not a generative family");
  }
  b.weights = config.true_weights;
  b.pi = config.true_pi;
  if (config.family == ModelFamily::IoHmm) b.trans = config.true_trans;
  if (b.pi.size() == 0) throw std::invalid_argument("simulator: config has no true_pi");
  if (config.family == ModelFamily::IoHmm && b.trans.size() == 0) {
    throw std::invalid_argument("simulator: config has no true_A");
  }
  return b;
}

SimulatorState SimulatorState::create(const ExperimentConfig& config, const RngStream& base) {
  SimulatorState s{config.family, truth_bundle(config), config.sigma_sq, -1,
                   base.sub(0x57A7E), base.sub(0xE317)};
  if (config.family == ModelFamily::IoHmm) {
    s.z = sample_categorical(s.truth.pi, s.rng_state);
  }
  return s;
}

double simulate_response(SimulatorState& state, const Eigen::Ref<const Vector>& x) {
  switch (state.family) {
    case ModelFamily::Mlr: {
      const int z = sample_categorical(state.truth.pi, state.rng_state);
      const double mean = state.truth.weights.row(z).dot(x);
      return mean + std::sqrt(state.sigma_sq) * state.rng_emit.normal();
    }
    case ModelFamily::Mglm: {
      const int z = sample_categorical(state.truth.pi, state.rng_state);
      const int D = static_cast<int>(state.truth.weights.cols()) - 1;
      const double eta = state.truth.weights.row(z).head(D).dot(x) - state.truth.weights(z, D);
      return state.rng_emit.uniform() < sigmoid(eta) ? 1.0 : 0.0;
    }
    case ModelFamily::IoHmm: {
      const int D = static_cast<int>(state.truth.weights.cols()) - 1;
      const double eta =
          state.truth.weights.row(state.z).head(D).dot(x) - state.truth.weights(state.z, D);
      const double y = state.rng_emit.uniform() < sigmoid(eta) ? 1.0 : 0.0;
      state.z = sample_categorical(state.truth.trans.row(state.z).transpose(), state.rng_state);
      return y;
    }
    case ModelFamily::Glm: break;
  }
  throw std::logic_error("simulate_response: unsupported family");
}

}  // namespace infomax::harness
