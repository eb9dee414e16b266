#pragma once

#include <vector>

#include "soro/sysid/dataset.hpp"

namespace soro::sysid {

/// Linear difference equation
///   y(t) + a1 y(t-1) + ... + an y(t-n) = b1 u(t-1) + ... + bm u(t-m),
/// rearranged as the one-step-ahead predictor
///   y_hat(t) = -a1 y(t-1) - ... + b1 u(t-1) + ...
struct DifferenceEquationModel {
  std::vector<double> a;  // a1..an
  std::vector<double> b;  // b1..bm
};

/// y_hat(t) for the (0-based) index t of the dataset; requires
/// t >= max(n, m) so every regressor exists.
double predict_one_step(const DifferenceEquationModel& m, const DatasetZN& z, std::size_t t);

/// Runs the recursion y(t) = predictor(t) forward from zero initial
/// conditions, i.e. the difference equation itself; used to cross-check
/// the predictor rearrangement.
std::vector<double> simulate_difference_equation(const DifferenceEquationModel& m,
                                                 const std::vector<double>& u);

}  // namespace soro::sysid
