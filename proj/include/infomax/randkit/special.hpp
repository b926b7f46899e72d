#pragma once

#include "infomax/core/types.hpp"

namespace infomax {

/// Digamma via the recurrence psi(x) = psi(x+1) - 1/x and the asymptotic
/// series for large arguments. Absolute error below 1e-12 for x > 0.
double digamma(double x);

/// Overflow-safe log(sum(exp(v))). -inf entries are allowed.
double log_sum_exp(const Eigen::Ref<const Vector>& v);

double log_normal_pdf(double y, double mean, double var);

/// Numerically stable logistic function.
double sigmoid(double eta);

/// log(sigmoid(eta)) without overflow for large |eta|.
double log_sigmoid(double eta);

}  // namespace infomax
