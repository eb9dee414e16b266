#include "soro/sim/plant_sim.hpp"

#include "soro/sim/rk2.hpp"

namespace soro::sim {

std::vector<double> simulate_lti(const lti::StateSpace& ss, std::span<const double> u, double dt,
                                 int delay_steps, const Eigen::VectorXd& x0) {
  const std::size_t n = u.size();
  std::vector<double> y(n, 0.0);
  Eigen::VectorXd x = (x0.size() == ss.order()) ? x0 : Eigen::VectorXd::Zero(ss.order());
  for (std::size_t i = 0; i < n; ++i) {
    const double ui = (static_cast<long>(i) >= delay_steps)
                          ? u[i - static_cast<std::size_t>(delay_steps)]
                          : 0.0;
    y[i] = ss.output(x, ui);
    const auto deriv = [&](const Eigen::VectorXd& xs, double) { return ss.deriv(xs, ui); };
    x = rk2_step(deriv, x, static_cast<double>(i) * dt, dt);
  }
  return y;
}

}  // namespace soro::sim
