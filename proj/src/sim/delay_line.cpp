#include "soro/sim/delay_line.hpp"

#include <cmath>
#include <stdexcept>

namespace soro::sim {

DelayLine::DelayLine(double delay_s, double dt, double initial) {
  if (dt <= 0.0) throw std::invalid_argument("DelayLine: dt must be positive");
  if (delay_s < 0.0) throw std::invalid_argument("DelayLine: negative delay");
  const auto len = static_cast<std::size_t>(std::lround(delay_s / dt));
  buffer_.assign(len, initial);
}

double DelayLine::push(double value) {
  if (buffer_.empty()) return value;
  const double out = buffer_[write_];
  buffer_[write_] = value;
  write_ = (write_ + 1) % buffer_.size();
  return out;
}

}  // namespace soro::sim
