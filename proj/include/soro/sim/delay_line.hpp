#pragma once

#include <cstddef>
#include <vector>

namespace soro::sim {

/// Fixed-length sample delay on the dt grid: push(v) returns the value
/// written round(delay/dt) steps earlier. Zero length passes through.
class DelayLine {
 public:
  DelayLine() = default;
  DelayLine(double delay_s, double dt, double initial = 0.0);

  double push(double value);
  std::size_t length() const { return buffer_.size(); }

 private:
  std::vector<double> buffer_;
  std::size_t write_ = 0;
};

}  // namespace soro::sim
