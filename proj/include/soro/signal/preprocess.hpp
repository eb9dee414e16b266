#pragma once

#include <vector>

#include "soro/signal/record.hpp"

namespace soro::signal {

/// Subtracts the sample mean.
DetrendResult remove_mean(const SignalRecord& x);

/// Removes the least-squares straight line fitted on regressors
/// [1, t/N], t = 1..N. The residual is exactly zero-mean because the
/// regressor set contains the constant column.
DetrendResult remove_linear_trend(const SignalRecord& x);

/// Causal FIR: y_i = sum_k h_k x_{i-k}. During startup (i < taps-1) the
/// truncated sum is rescaled by full/partial coefficient sums so a constant
/// input passes through at the filter's DC gain from sample 0. If the
/// partial coefficient sum vanishes the truncated sum is used as-is.
SignalRecord fir_filter(const SignalRecord& x, const std::vector<double>& coeffs);

/// Equal-weight moving average, the default measurement filter.
std::vector<double> moving_average_taps(int n);

/// Sample-at-a-time form of fir_filter with the same startup contract;
/// what the live measurement path uses.
class OnlineFir {
 public:
  explicit OnlineFir(std::vector<double> coeffs);
  double push(double x);

 private:
  std::vector<double> coeffs_;
  std::vector<double> history_;  // ring buffer, newest at head_
  std::size_t head_ = 0;
  std::size_t filled_ = 0;
  double full_sum_ = 0.0;
  double renorm_floor_ = 0.0;
};

}  // namespace soro::signal
