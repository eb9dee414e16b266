#pragma once

#include <utility>
#include <vector>

#include "soro/signal/record.hpp"

namespace soro::signal {

/// Autoregressive whitening filter F(q^-1) = 1 + c1 q^-1 + ... + cp q^-p.
/// Fit on the excitation input; applying it to the same signal leaves
/// residuals whose ACF sits inside the 95% band at almost all lags.
struct ArWhitener {
  int order = 0;
  std::vector<double> coeffs;  // c1..cp
  double fit_percent = 0.0;    // NRMSE fit of the one-step prediction
  double mse = 0.0;            // residual mean square

  /// Filters with zero prehistory: y[t] = x[t] + sum_i c_i x[t-i].
  SignalRecord apply(const SignalRecord& x) const;
};

/// Least-squares AR fit (covariance method): minimizes
/// sum_t (x[t] + c1 x[t-1] + ... + cp x[t-p])^2 over t = p..N-1.
/// Requires N > 10*order; throws on a rank-deficient regressor.
ArWhitener ar_fit(const SignalRecord& x, int order);

/// Filters both signals by the whitener (fit on u) so the cross-correlation
/// of the pair becomes proportional to the impulse response.
std::pair<SignalRecord, SignalRecord> prewhiten(const SignalRecord& u, const SignalRecord& y,
                                                const ArWhitener& w);

}  // namespace soro::signal
