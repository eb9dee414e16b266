#pragma once

#include <random>

namespace soro::sim {

/// Overhead depth-camera geometry: the camera reports its distance to the
/// head; height above the table is mount height minus that distance.
struct SensorMapping {
  double mount_height_mm = 710.0;
};

/// Kinect near-mode working range for the reported camera distance.
inline constexpr double kDepthRangeMinMm = 400.0;
inline constexpr double kDepthRangeMaxMm = 3000.0;

struct DepthSample {
  double height_mm = 0.0;
  bool out_of_range = false;  // raw distance left the near-mode window
};

/// One camera measurement of a true height (mm): additive noise and
/// quantization act on the camera distance; an out-of-range distance is
/// flagged and clamped, never an error. quant_mm = 0 disables the lattice.
DepthSample depth_sensor_sample(double y_true_mm, const SensorMapping& mapping, double quant_mm,
                                double noise_std_mm, std::mt19937_64& rng);

/// Deterministic core with the noise displacement supplied by the caller
/// (white or ARMA-shaped); the rng overload draws white noise and defers
/// here.
DepthSample depth_sensor_apply(double y_true_mm, const SensorMapping& mapping, double quant_mm,
                               double noise_mm);

}  // namespace soro::sim
