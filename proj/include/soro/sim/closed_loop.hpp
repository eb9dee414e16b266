#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "soro/control/loop.hpp"
#include "soro/net/packet.hpp"
#include "soro/sim/config.hpp"

namespace soro::sim {

/// Time-indexed record of one closed-loop run. Heights in cm, actuation in
/// mA (total valve current), uniform t grid at the control dt.
struct SimTrace {
  std::vector<double> t;
  std::vector<double> r;
  std::vector<double> e;
  std::vector<double> u;
  std::vector<double> y_true;
  std::vector<double> y_meas;
  net::LinkStats link;             // populated when the sensor path is networked
  std::uint64_t frames_emitted = 0;
  std::uint64_t frames_sent = 0;
};

enum class NetMode { Off, Loopback, Udp };

struct NetworkOptions {
  NetMode mode = NetMode::Off;
  double loss = 0.0;     // injected drop probability (loopback path)
  double reorder = 0.0;  // adjacent-swap probability
  int port = 47808;
};

/// Carries the partial trace when the loop blows up.
class SimDivergence : public std::runtime_error {
 public:
  SimDivergence(const std::string& what, SimTrace partial)
      : std::runtime_error(what), trace(std::move(partial)) {}
  SimTrace trace;
};

/// Fixed-step simulation of the Fig.-11-style loop with the dead time
/// rendered exactly by a sample delay line: error-driven PID commands an
/// inner PI current loop; the actuator saturates with conditional
/// anti-windup; the depth sensor runs at sensor_rate with quantization,
/// noise, optional ARMA shaping, the repeat-last-frame network policy, and
/// the FIR measurement filter. Requires delay_mode Exact.
SimTrace simulate_closed_loop(const control::LoopTopology& topology, const Trajectory& trajectory,
                              const SimConfig& config, const NetworkOptions& net = {});

void write_trace_csv(const std::string& path, const SimTrace& trace);

/// First time |y_true - r| enters band_cm and t >= from_t.
double band_entry_time(const SimTrace& trace, double band_cm, double from_t = 0.0);

/// Largest |y_true - r| over t >= from_t.
double max_deviation_after(const SimTrace& trace, double from_t);

/// Largest |y_true - r| over the steady part of each segment (the last
/// `steady_fraction` of the segment's duration); returns the worst segment.
double max_steady_segment_deviation(const SimTrace& trace, const Trajectory& trajectory,
                                    double steady_fraction = 0.5);

}  // namespace soro::sim
