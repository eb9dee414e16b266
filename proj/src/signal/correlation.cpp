#include "soro/signal/correlation.hpp"

#include <cmath>
#include <stdexcept>

#include "soro/kernels/xcorr.hpp"

namespace soro::signal {

namespace {

std::vector<double> centered(const SignalRecord& x) {
  const double m = x.mean();
  std::vector<double> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x.samples[i] - m;
  return out;
}

double sumsq(const std::vector<double>& v) {
  double acc = 0.0;
  for (double x : v) acc += x * x;
  return acc;
}

}  // namespace

CorrelationSeries ccf(const SignalRecord& u, const SignalRecord& y, int max_lag) {
  if (u.size() != y.size()) throw std::invalid_argument("ccf: signals have different lengths");
  const int n = static_cast<int>(u.size());
  if (max_lag >= n) throw std::invalid_argument("ccf: max_lag must be < N");

  const std::vector<double> uc = centered(u);
  const std::vector<double> yc = centered(y);
  const double su = sumsq(uc), sy = sumsq(yc);
  if (su == 0.0 || sy == 0.0) throw std::invalid_argument("ccf: zero variance");
  const double denom = std::sqrt(su) * std::sqrt(sy);

  CorrelationSeries out;
  out.band_95 = 1.96 / std::sqrt(static_cast<double>(n));
  out.values = kernels::lagged_products(uc, yc, -max_lag, max_lag);
  for (double& v : out.values) v /= denom;
  out.lags.reserve(static_cast<std::size_t>(2 * max_lag + 1));
  for (int tau = -max_lag; tau <= max_lag; ++tau) out.lags.push_back(tau);
  return out;
}

CorrelationSeries acf(const SignalRecord& u, int max_lag) {
  const int n = static_cast<int>(u.size());
  if (max_lag >= n) throw std::invalid_argument("acf: max_lag must be < N");
  const std::vector<double> uc = centered(u);
  const double su = sumsq(uc);
  if (su == 0.0) throw std::invalid_argument("acf: zero variance");

  CorrelationSeries out;
  out.band_95 = 1.96 / std::sqrt(static_cast<double>(n));
  out.values = kernels::lagged_products(uc, uc, 0, max_lag);
  for (double& v : out.values) v /= su;
  out.lags.reserve(static_cast<std::size_t>(max_lag + 1));
  for (int tau = 0; tau <= max_lag; ++tau) out.lags.push_back(tau);
  return out;
}

double inside_band_fraction(const CorrelationSeries& series, int max_lag) {
  int total = 0, inside = 0;
  for (std::size_t i = 0; i < series.lags.size(); ++i) {
    const int lag = series.lags[i];
    if (lag < 1 || lag > max_lag) continue;
    ++total;
    if (std::abs(series.values[i]) <= series.band_95) ++inside;
  }
  if (total == 0) throw std::invalid_argument("inside_band_fraction: no lags in 1..max_lag");
  return static_cast<double>(inside) / total;
}

}  // namespace soro::signal
