#pragma once

#include "soro/lti/transfer_function.hpp"

namespace soro::control {

/// PI gains: kp + ki/s.
struct PiParams {
  double kp = 0.0;
  double ki = 0.0;  // 1/s, >= 0
};

/// PID gains: kp + ki/s + kd*s, with a first-order derivative filter for
/// realizable forms (time constant kd/(n*kp)).
struct PidParams {
  double kp = 0.0;
  double ki = 0.0;                   // 1/s
  double kd = 0.0;                   // s
  double derivative_filter_n = 100.0;
};

/// (kp*s + ki)/s.
lti::TransferFunction pi_tf(const PiParams& p);

/// realized=false: the ideal improper form (kd*s^2 + kp*s + ki)/s, usable
/// only as a composition factor. realized=true: kd*s is replaced by
/// kd*s/(1 + s*kd/(n*kp)), making the result proper and simulation-ready.
lti::TransferFunction pid_tf(const PidParams& p, bool realized);

}  // namespace soro::control
