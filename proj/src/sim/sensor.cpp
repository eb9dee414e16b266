#include "soro/sim/sensor.hpp"

#include <algorithm>
#include <cmath>

namespace soro::sim {

DepthSample depth_sensor_apply(double y_true_mm, const SensorMapping& mapping, double quant_mm,
                               double noise_mm) {
  double distance = mapping.mount_height_mm - y_true_mm + noise_mm;
  if (quant_mm > 0.0) distance = std::round(distance / quant_mm) * quant_mm;

  DepthSample sample;
  if (distance < kDepthRangeMinMm || distance > kDepthRangeMaxMm) {
    sample.out_of_range = true;
    distance = std::clamp(distance, kDepthRangeMinMm, kDepthRangeMaxMm);
  }
  sample.height_mm = std::clamp(mapping.mount_height_mm - distance, 0.0, mapping.mount_height_mm);
  return sample;
}

DepthSample depth_sensor_sample(double y_true_mm, const SensorMapping& mapping, double quant_mm,
                                double noise_std_mm, std::mt19937_64& rng) {
  double noise = 0.0;
  if (noise_std_mm > 0.0) {
    std::normal_distribution<double> dist(0.0, noise_std_mm);
    noise = dist(rng);
  }
  return depth_sensor_apply(y_true_mm, mapping, quant_mm, noise);
}

}  // namespace soro::sim
