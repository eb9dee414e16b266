#include "soro/control/pid.hpp"

#include <cmath>
#include <stdexcept>

namespace soro::control {

lti::TransferFunction pi_tf(const PiParams& p) {
  if (!std::isfinite(p.kp) || !std::isfinite(p.ki))
    throw std::invalid_argument("pi_tf: non-finite gains");
  if (p.ki < 0.0) throw std::invalid_argument("pi_tf: ki must be >= 0");
  if (p.ki == 0.0) return lti::TransferFunction({p.kp}, {1.0});
  return lti::TransferFunction({p.kp, p.ki}, {1.0, 0.0});
}

lti::TransferFunction pid_tf(const PidParams& p, bool realized) {
  if (!std::isfinite(p.kp) || !std::isfinite(p.ki) || !std::isfinite(p.kd))
    throw std::invalid_argument("pid_tf: non-finite gains");
  if (!realized) return lti::TransferFunction({p.kd, p.kp, p.ki}, {1.0, 0.0});
  if (p.kd == 0.0) return pi_tf({p.kp, p.ki});
  if (p.derivative_filter_n <= 0.0 || p.kp == 0.0)
    throw std::invalid_argument(
        "pid_tf: realized form needs derivative_filter_n > 0 and kp != 0");
  // kp + ki/s + kd*s/(Tf*s + 1) over the common denominator s*(Tf*s + 1).
  const double tf = p.kd / (p.derivative_filter_n * p.kp);
  return lti::TransferFunction({p.kp * tf + p.kd, p.kp + p.ki * tf, p.ki}, {tf, 1.0, 0.0});
}

}  // namespace soro::control
