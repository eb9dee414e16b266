#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace soro::sim {

namespace detail {
inline bool all_finite(double v) { return std::isfinite(v); }
inline bool all_finite(const Eigen::VectorXd& v) { return v.allFinite(); }

inline std::string state_snapshot(double v) { return std::to_string(v); }
inline std::string state_snapshot(const Eigen::VectorXd& v) {
  std::ostringstream os;
  os << v.transpose();
  return os.str();
}
}  // namespace detail

/// One step of Heun's method (explicit RK2):
///   k1 = f(x, t); k2 = f(x + dt*k1, t + dt); x' = x + dt/2*(k1 + k2).
/// Works for scalar and Eigen vector states. Throws on a non-finite
/// derivative, including the offending state in the message.
template <typename State, typename Deriv>
State rk2_step(const Deriv& f, const State& x, double t, double dt) {
  const State k1 = f(x, t);
  if (!detail::all_finite(k1))
    throw std::runtime_error("rk2_step: non-finite derivative at t=" + std::to_string(t) +
                             ", state=[" + detail::state_snapshot(x) + "]");
  const State x_mid = x + dt * k1;
  const State k2 = f(x_mid, t + dt);
  if (!detail::all_finite(k2))
    throw std::runtime_error("rk2_step: non-finite derivative at t=" + std::to_string(t + dt) +
                             ", state=[" + detail::state_snapshot(x_mid) + "]");
  return x + (dt / 2.0) * (k1 + k2);
}

}  // namespace soro::sim
