#pragma once

#include "soro/control/pid.hpp"
#include "soro/lti/transfer_function.hpp"

namespace soro::control {

enum class DelayMode { Exact, Pade2 };

/// The head-positioning loop: an outer PID driven by the tracking error,
/// commanding an inner unity-feedback loop of PI plus plant.
struct LoopTopology {
  PidParams feedforward;
  PiParams inner_controller;
  lti::TransferFunction plant;
  DelayMode delay_mode = DelayMode::Pade2;
};

/// PI controller in series with the plant; no cancellation performed.
lti::TransferFunction build_open_loop(const PiParams& pi, const lti::TransferFunction& plant);

/// Everything the cascade construction yields for analysis. The step and
/// settling figures come from `closed_loop`; the Bode/margin view of the
/// outer loop comes from `open_composition` (PID in series with the closed
/// inner loop, the form the delay-free algebra produces).
struct CascadeNetwork {
  lti::TransferFunction closed_loop;       // reference -> output
  lti::TransferFunction open_composition;  // PID * inner closed loop
  lti::TransferFunction inner_closed;      // inner PI loop alone
  bool inner_stable = false;
  bool closed_stable = false;              // false is a warning, not an error
};

/// Rational cascade construction; requires delay_mode=Pade2 when the plant
/// carries dead time (exact-delay simulation lives in the sim module).
CascadeNetwork build_cascade(const LoopTopology& topology);

}  // namespace soro::control
