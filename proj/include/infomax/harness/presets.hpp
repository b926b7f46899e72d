#pragma once

#include "infomax/core/config.hpp"

#include <string>
#include <vector>

namespace infomax::harness {

/// Named experiment presets:
///   mlr2d        2-state MLR, 2-D weights, unit-circle grid
///   mlr10d       2-state MLR, 10-D weights, hypersphere sample
///   iohmm3       3-state Bernoulli IO-HMM on the [-5, 5] line grid
///   iohmm3-chains  same, 5 parallel chains of 140 sweeps
///   mglm2        2-state mixture of GLMs
///   housing      pool preset (3-state MLR, 8 predictors + intercept)
ExperimentConfig preset(const std::string& name);

std::vector<std::string> preset_names();

}  // namespace infomax::harness
