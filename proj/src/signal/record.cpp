#include "soro/signal/record.hpp"

#include <cmath>
#include <stdexcept>

namespace soro::signal {

double SignalRecord::mean() const {
  if (samples.empty()) throw std::invalid_argument("SignalRecord: empty signal");
  double acc = 0.0;
  for (double v : samples) acc += v;
  return acc / static_cast<double>(samples.size());
}

double SignalRecord::rms() const {
  if (samples.empty()) throw std::invalid_argument("SignalRecord: empty signal");
  double acc = 0.0;
  for (double v : samples) acc += v * v;
  return std::sqrt(acc / static_cast<double>(samples.size()));
}

double SignalRecord::variance() const {
  const double m = mean();
  double acc = 0.0;
  for (double v : samples) acc += (v - m) * (v - m);
  return acc / static_cast<double>(samples.size());
}

double CorrelationSeries::at(int lag) const {
  for (std::size_t i = 0; i < lags.size(); ++i)
    if (lags[i] == lag) return values[i];
  throw std::invalid_argument("CorrelationSeries: lag " + std::to_string(lag) + " not present");
}

}  // namespace soro::signal
