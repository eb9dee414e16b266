#pragma once

#include <string>
#include <vector>

namespace soro::sim {

/// Closed-loop simulation settings. Actuator limits apply to the total
/// valve current; the plant sees deviations around the operating point
/// u_op (the mid-range inlet current that holds the head at rest_height).
struct SimConfig {
  double dt = 0.1;               // control step, s
  double duration = 100.0;       // s
  double u_min = 0.0;            // mA
  double u_max = 165.0;          // mA
  double u_op = 82.5;            // mA, operating-point current
  double sensor_noise_std = 1.5; // mm
  double sensor_quant = 1.0;     // mm, depth resolution lattice
  double sensor_rate = 30.0;     // Hz
  int fir_taps = 20;             // measurement filter length (1 = off)
  double rest_height_cm = 24.51; // head height at u_op
  double mount_height_mm = 710.0;
  double noise_c0 = 0.0;         // optional measurement-noise shaping
  double noise_d0 = 0.0;         // (both zero = plain white sensor noise)
  unsigned long seed = 1;

  void validate() const;
  static SimConfig from_file(const std::string& path);
  void save(const std::string& path) const;
};

/// Piecewise-constant setpoint schedule; start times strictly increasing,
/// first at 0.
struct Trajectory {
  struct Segment {
    double start;        // s
    double setpoint_cm;
  };
  std::vector<Segment> segments;

  void validate() const;
  double setpoint_at(double t) const;

  /// CSV schema `t,setpoint` (seconds, cm).
  static Trajectory from_csv(const std::string& path);
  void save_csv(const std::string& path) const;
};

}  // namespace soro::sim
