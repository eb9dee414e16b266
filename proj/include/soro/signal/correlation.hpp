#pragma once

#include "soro/signal/record.hpp"

namespace soro::signal {

/// Normalized cross-correlation on lags -max_lag..+max_lag:
///   psi_uy(tau) = sum_t [u(t-tau)-u_bar][y(t)-y_bar]
///                 / sqrt(sum [u-u_bar]^2) / sqrt(sum [y-y_bar]^2).
/// Throws "zero variance" when either signal is constant.
CorrelationSeries ccf(const SignalRecord& u, const SignalRecord& y, int max_lag);

/// Normalized autocorrelation on lags 0..max_lag; value 1 at lag 0.
CorrelationSeries acf(const SignalRecord& u, int max_lag);

/// Fraction of lags 1..max_lag whose |value| stays inside the series'
/// confidence band; the whiteness figure used across the validation suite.
double inside_band_fraction(const CorrelationSeries& series, int max_lag);

}  // namespace soro::signal
