#pragma once

#include <span>
#include <vector>

#include "soro/lti/state_space.hpp"

namespace soro::sim {

/// Drives a realized LTI system with a sampled input (zero-order hold over
/// each step, RK2 between samples). The input is shifted by `delay_steps`
/// samples (zero prehistory), which renders an integer-multiple transport
/// delay exactly. Output y[i] is sampled at the start of step i. `x0`
/// seeds the state (empty = zero).
std::vector<double> simulate_lti(const lti::StateSpace& ss, std::span<const double> u, double dt,
                                 int delay_steps = 0, const Eigen::VectorXd& x0 = {});

}  // namespace soro::sim
