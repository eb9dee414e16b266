#include "soro/signal/ar.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace soro::signal {

SignalRecord ArWhitener::apply(const SignalRecord& x) const {
  SignalRecord out;
  out.dt = x.dt;
  out.samples.resize(x.size());
  for (std::size_t t = 0; t < x.size(); ++t) {
    double acc = x.samples[t];
    const std::size_t used = std::min<std::size_t>(static_cast<std::size_t>(order), t);
    for (std::size_t i = 1; i <= used; ++i) acc += coeffs[i - 1] * x.samples[t - i];
    out.samples[t] = acc;
  }
  return out;
}

ArWhitener ar_fit(const SignalRecord& x, int order) {
  if (order < 1) throw std::invalid_argument("ar_fit: order must be >= 1");
  const auto n = static_cast<long>(x.size());
  if (n <= 10L * order) throw std::invalid_argument("ar_fit: need more than 10*order samples");

  const long rows = n - order;
  Eigen::MatrixXd reg(rows, order);
  Eigen::VectorXd target(rows);
  for (long t = order; t < n; ++t) {
    target(t - order) = x.samples[static_cast<std::size_t>(t)];
    for (int i = 1; i <= order; ++i)
      reg(t - order, i - 1) = x.samples[static_cast<std::size_t>(t - i)];
  }

  // x[t] = -c1 x[t-1] - ... - cp x[t-p] + e[t]  =>  reg * c = -target.
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(reg);
  if (qr.rank() < order) throw std::runtime_error("ar_fit: rank-deficient regressor matrix");
  const Eigen::VectorXd c = qr.solve(-target);

  ArWhitener w;
  w.order = order;
  w.coeffs.assign(c.data(), c.data() + order);

  const Eigen::VectorXd resid = reg * c + target;
  w.mse = resid.squaredNorm() / static_cast<double>(rows);
  const double target_dev = (target.array() - target.mean()).matrix().norm();
  w.fit_percent = (target_dev > 0.0) ? 100.0 * (1.0 - resid.norm() / target_dev) : 0.0;
  return w;
}

std::pair<SignalRecord, SignalRecord> prewhiten(const SignalRecord& u, const SignalRecord& y,
                                                const ArWhitener& w) {
  return {w.apply(u), w.apply(y)};
}

}  // namespace soro::signal
