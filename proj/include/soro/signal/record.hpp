#pragma once

#include <array>
#include <vector>

namespace soro::signal {

/// Uniformly sampled scalar signal (valve current in mA, head height in mm
/// or cm depending on the pipeline stage).
struct SignalRecord {
  std::vector<double> samples;
  double dt = 0.1;  // seconds per sample, > 0

  std::size_t size() const { return samples.size(); }
  double mean() const;
  double rms() const;
  double variance() const;  // about the mean
};

/// Output of the mean/trend removal steps.
struct DetrendResult {
  SignalRecord detrended;
  double mean = 0.0;
  std::array<double, 2> trend_params{0.0, 0.0};  // [offset, slope] on the t/N ramp
};

/// Normalized correlation values on an integer lag grid with the
/// +-1.96/sqrt(N) confidence band attached.
struct CorrelationSeries {
  std::vector<int> lags;
  std::vector<double> values;
  double band_95 = 0.0;

  double at(int lag) const;
};

}  // namespace soro::signal
