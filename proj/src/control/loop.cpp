#include "soro/control/loop.hpp"

#include <stdexcept>

#include "soro/lti/analysis.hpp"

namespace soro::control {

lti::TransferFunction build_open_loop(const PiParams& pi, const lti::TransferFunction& plant) {
  return lti::series(pi_tf(pi), plant);
}

CascadeNetwork build_cascade(const LoopTopology& topology) {
  lti::TransferFunction inner_open = build_open_loop(topology.inner_controller, topology.plant);
  if (inner_open.delay > 0.0) {
    if (topology.delay_mode != DelayMode::Pade2)
      throw std::invalid_argument(
          "build_cascade: exact delay mode has no rational closure; use Pade2 here and the "
          "simulator for exact-delay runs");
    inner_open = lti::substitute_pade(inner_open, 2);
  }

  CascadeNetwork net;
  net.inner_closed = lti::feedback_unity(inner_open);
  net.inner_stable = lti::is_stable(net.inner_closed).stable;

  const lti::TransferFunction pid = pid_tf(topology.feedforward, /*realized=*/true);
  net.open_composition = lti::series(pid, net.inner_closed);
  net.closed_loop = lti::feedback_unity(net.open_composition);
  net.closed_stable = lti::is_stable(net.closed_loop).stable;
  return net;
}

}  // namespace soro::control
