#include "soro/sim/closed_loop.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <random>

#include "soro/io/csv.hpp"
#include "soro/lti/state_space.hpp"
#include "soro/net/channel.hpp"
#include "soro/net/receiver.hpp"
#include "soro/net/sender.hpp"
#include "soro/sim/delay_line.hpp"
#include "soro/sim/rk2.hpp"
#include "soro/sim/sensor.hpp"
#include "soro/signal/preprocess.hpp"

namespace soro::sim {

namespace {

// Trapezoidal integrator with conditional anti-windup: integration freezes
// while the actuator is saturated in the direction the error keeps pushing.
struct ClampedIntegrator {
  double state = 0.0;
  double prev_input = 0.0;

  void advance(double input, double gain, double dt, int saturation_sign) {
    const bool windup = (saturation_sign > 0 && input > 0.0) ||
                        (saturation_sign < 0 && input < 0.0);
    if (!windup) state += gain * dt * 0.5 * (input + prev_input);
    prev_input = input;
  }
};

struct DerivativeFilter {
  double state = 0.0;
  double prev_input = 0.0;
  bool primed = false;

  double advance(double input, double kd, double tf, double dt) {
    if (kd == 0.0) return 0.0;
    if (!primed) {
      prev_input = 0.0;  // reference steps at t=0 kick, as they should
      primed = true;
    }
    state = (tf * state + kd * (input - prev_input)) / (tf + dt);
    prev_input = input;
    return state;
  }
};

}  // namespace

SimTrace simulate_closed_loop(const control::LoopTopology& topology, const Trajectory& trajectory,
                              const SimConfig& config, const NetworkOptions& net) {
  config.validate();
  trajectory.validate();
  if (topology.delay_mode != control::DelayMode::Exact)
    throw std::invalid_argument(
        "simulate_closed_loop: the simulator renders the delay exactly; build the topology "
        "with DelayMode::Exact (Pade is for the rational analysis path)");
  if (!topology.plant.is_proper())
    throw std::invalid_argument("simulate_closed_loop: plant must be proper");

  const double dt = config.dt;
  const lti::TransferFunction rational(topology.plant.num, topology.plant.den, 0.0);
  const lti::StateSpace plant = lti::StateSpace::from_tf(rational);
  DelayLine delay(topology.plant.delay, dt, 0.0);

  const control::PidParams& pid = topology.feedforward;
  const control::PiParams& pi = topology.inner_controller;
  const double tf_deriv = (pid.kd != 0.0 && pid.kp != 0.0)
                              ? pid.kd / (pid.derivative_filter_n * pid.kp)
                              : 0.0;

  // Sensor-domain machinery (frames at sensor_rate, control at 1/dt).
  const int frames_per_tick = std::max(1, static_cast<int>(std::lround(config.sensor_rate * dt)));
  signal::OnlineFir fir(signal::moving_average_taps(config.fir_taps));
  SensorMapping mapping{config.mount_height_mm};
  std::mt19937_64 rng(config.seed);

  // Optional first-order ARMA shaping of the sensor noise (bilinear
  // discretization of (s+c0)/(s+d0) at the sensor frame rate).
  const bool shaped = config.noise_c0 > 0.0 && config.noise_d0 > 0.0;
  double shape_lam = 0.0, shape_th = 0.0, shape_prev_e = 0.0, shape_prev_d = 0.0, shape_gain = 1.0;
  if (shaped) {
    const double fdt = 1.0 / config.sensor_rate;
    shape_lam = -(config.noise_d0 - 2.0 / fdt) / (config.noise_d0 + 2.0 / fdt);
    shape_th = (config.noise_c0 - 2.0 / fdt) / (config.noise_c0 + 2.0 / fdt);
    // unity stationary gain so sensor_noise_std keeps its meaning
    const double num_g = 1.0 + 2.0 * shape_th + shape_th * shape_th;
    const double den_g = 1.0 - shape_lam * shape_lam;
    shape_gain = 1.0 / std::sqrt(std::max((num_g) / den_g, 1e-12));
  }

  // Networked sensor path (virtual time: one send/receive per frame).
  std::shared_ptr<net::Channel> tx, rx;
  if (net.mode == NetMode::Loopback) {
    auto loop = std::make_shared<net::LoopbackChannel>();
    tx = std::make_shared<net::LossyChannel>(loop, net.loss, net.reorder, config.seed ^ 0x5bd1e995UL);
    rx = loop;
  } else if (net.mode == NetMode::Udp) {
    rx = net::make_udp_channel(net.port, /*bind_receiver=*/true);
    auto raw_tx = net::make_udp_channel(net.port, /*bind_receiver=*/false);
    tx = (net.loss > 0.0 || net.reorder > 0.0)
             ? std::make_shared<net::LossyChannel>(raw_tx, net.loss, net.reorder,
                                                   config.seed ^ 0x5bd1e995UL)
             : raw_tx;
  }
  net::FrameReceiver receiver(config.rest_height_cm * 10.0);
  std::uint32_t seq = 0;

  const auto steps = static_cast<std::size_t>(std::llround(config.duration / dt));
  SimTrace trace;
  trace.t.reserve(steps);

  Eigen::VectorXd x = Eigen::VectorXd::Zero(plant.order());
  ClampedIntegrator pid_integral, pi_integral;
  DerivativeFilter deriv;
  int saturation_sign = 0;
  double y_meas_cm = config.rest_height_cm;

  for (std::size_t i = 0; i < steps; ++i) {
    const double t = static_cast<double>(i) * dt;
    const double r = trajectory.setpoint_at(t);
    const double y_true_cm = config.rest_height_cm + plant.output(x, 0.0);

    // Sensor frames observe the tick-start height; each frame gets its own
    // noise draw, wire trip, and filter push.
    for (int f = 0; f < frames_per_tick; ++f) {
      double noise_mm = 0.0;
      if (config.sensor_noise_std > 0.0) {
        std::normal_distribution<double> dist(0.0, config.sensor_noise_std);
        const double e_white = dist(rng);
        if (shaped) {
          const double d = shape_lam * shape_prev_d + e_white + shape_th * shape_prev_e;
          shape_prev_d = d;
          shape_prev_e = e_white;
          noise_mm = d * shape_gain;
        } else {
          noise_mm = e_white;
        }
      }
      const DepthSample sample =
          depth_sensor_apply(y_true_cm * 10.0, mapping, config.sensor_quant, noise_mm);

      double emitted_mm = sample.height_mm;
      if (tx) {
        tx->send(net::encode_packet(
            net::make_frame(seq, config.sensor_rate, sample.height_mm, true, sample.out_of_range)));
        ++seq;
        ++trace.frames_sent;
        std::optional<net::DepthPacket> incoming;
        while (auto bytes = rx->try_recv()) {
          // Bursts (reordering) resolve within the tick; the receiver sees
          // them in arrival order and the last emission stands.
          if (incoming) emitted_mm = receiver.step(incoming);
          incoming = net::decode_packet(*bytes);
        }
        emitted_mm = receiver.step(incoming);
        ++trace.frames_emitted;
      }
      y_meas_cm = fir.push(emitted_mm) / 10.0;
    }

    const double e = r - y_meas_cm;

    // Outer PID commands the inner loop's reference.
    const double d_term = deriv.advance(e, pid.kd, tf_deriv, dt);
    pid_integral.advance(e, pid.ki, dt, saturation_sign);
    const double v = pid.kp * e + pid_integral.state + d_term;

    // Inner PI drives the valve current around the operating point.
    const double e2 = v - y_meas_cm;
    pi_integral.advance(e2, pi.ki, dt, saturation_sign);
    const double u_unsat = config.u_op + pi.kp * e2 + pi_integral.state;
    const double u_cmd = std::clamp(u_unsat, config.u_min, config.u_max);
    saturation_sign = (u_unsat > config.u_max) ? 1 : (u_unsat < config.u_min ? -1 : 0);

    trace.t.push_back(t);
    trace.r.push_back(r);
    trace.e.push_back(e);
    trace.u.push_back(u_cmd);
    trace.y_true.push_back(y_true_cm);
    trace.y_meas.push_back(y_meas_cm);

    if (std::abs(y_true_cm - config.rest_height_cm) > 10.0 * config.mount_height_mm / 10.0) {
      if (rx) receiver.finish(seq), trace.link = receiver.stats();
      throw SimDivergence("simulation diverged at t=" + std::to_string(t) + " s", trace);
    }

    // Plant advances under the delayed, held command deviation.
    const double u_dev = delay.push(u_cmd - config.u_op);
    const auto f_plant = [&](const Eigen::VectorXd& xs, double) { return plant.deriv(xs, u_dev); };
    x = rk2_step(f_plant, x, t, dt);
  }

  if (rx) {
    receiver.finish(seq);
    trace.link = receiver.stats();
    trace.link.sent = trace.frames_sent;
  }
  return trace;
}

void write_trace_csv(const std::string& path, const SimTrace& trace) {
  io::CsvTable table;
  table.header = {"t", "r", "e", "u", "y_true", "y_meas"};
  table.columns = {trace.t, trace.r, trace.e, trace.u, trace.y_true, trace.y_meas};
  io::write_csv(path, table);
}

double band_entry_time(const SimTrace& trace, double band_cm, double from_t) {
  for (std::size_t i = 0; i < trace.t.size(); ++i)
    if (trace.t[i] >= from_t && std::abs(trace.y_true[i] - trace.r[i]) <= band_cm)
      return trace.t[i];
  return trace.t.empty() ? 0.0 : trace.t.back();
}

double max_deviation_after(const SimTrace& trace, double from_t) {
  double worst = 0.0;
  for (std::size_t i = 0; i < trace.t.size(); ++i)
    if (trace.t[i] >= from_t)
      worst = std::max(worst, std::abs(trace.y_true[i] - trace.r[i]));
  return worst;
}

double max_steady_segment_deviation(const SimTrace& trace, const Trajectory& trajectory,
                                    double steady_fraction) {
  double worst = 0.0;
  for (std::size_t s = 0; s < trajectory.segments.size(); ++s) {
    const double start = trajectory.segments[s].start;
    const double end =
        (s + 1 < trajectory.segments.size()) ? trajectory.segments[s + 1].start : trace.t.back();
    const double steady_from = end - steady_fraction * (end - start);
    for (std::size_t i = 0; i < trace.t.size(); ++i)
      if (trace.t[i] >= steady_from && trace.t[i] < end)
        worst = std::max(worst, std::abs(trace.y_true[i] - trace.r[i]));
  }
  return worst;
}

}  // namespace soro::sim
