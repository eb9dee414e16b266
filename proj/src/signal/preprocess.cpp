#include "soro/signal/preprocess.hpp"

#include <cmath>
#include <stdexcept>

namespace soro::signal {

DetrendResult remove_mean(const SignalRecord& x) {
  if (x.samples.empty()) throw std::invalid_argument("remove_mean: empty signal");
  DetrendResult r;
  r.mean = x.mean();
  r.detrended.dt = x.dt;
  r.detrended.samples.reserve(x.size());
  for (double v : x.samples) r.detrended.samples.push_back(v - r.mean);
  return r;
}

DetrendResult remove_linear_trend(const SignalRecord& x) {
  const std::size_t n = x.size();
  if (n < 2) throw std::invalid_argument("remove_linear_trend: need at least 2 samples");
  const double nd = static_cast<double>(n);

  // Normal equations for A = [1, t/N], t = 1..N (2x2, solved directly).
  double s_r = 0.0, s_rr = 0.0, s_x = 0.0, s_rx = 0.0;
  for (std::size_t t = 0; t < n; ++t) {
    const double ramp = static_cast<double>(t + 1) / nd;
    s_r += ramp;
    s_rr += ramp * ramp;
    s_x += x.samples[t];
    s_rx += ramp * x.samples[t];
  }
  const double det = nd * s_rr - s_r * s_r;
  if (det == 0.0) throw std::invalid_argument("remove_linear_trend: singular normal equations");
  const double theta0 = (s_rr * s_x - s_r * s_rx) / det;
  const double theta1 = (nd * s_rx - s_r * s_x) / det;

  DetrendResult r;
  r.mean = s_x / nd;
  r.trend_params = {theta0, theta1};
  r.detrended.dt = x.dt;
  r.detrended.samples.reserve(n);
  for (std::size_t t = 0; t < n; ++t) {
    const double ramp = static_cast<double>(t + 1) / nd;
    r.detrended.samples.push_back(x.samples[t] - theta0 - theta1 * ramp);
  }
  return r;
}

SignalRecord fir_filter(const SignalRecord& x, const std::vector<double>& coeffs) {
  if (coeffs.empty()) throw std::invalid_argument("fir_filter: empty coefficient list");
  const std::size_t n = x.size();
  const std::size_t taps = coeffs.size();
  double full_sum = 0.0, abs_sum = 0.0;
  for (double h : coeffs) {
    full_sum += h;
    abs_sum += std::abs(h);
  }
  const double renorm_floor = 1e-12 * abs_sum;

  SignalRecord out;
  out.dt = x.dt;
  out.samples.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t used = std::min(taps, i + 1);
    double acc = 0.0, used_sum = 0.0;
    for (std::size_t k = 0; k < used; ++k) {
      acc += coeffs[k] * x.samples[i - k];
      used_sum += coeffs[k];
    }
    if (used < taps && std::abs(used_sum) > renorm_floor)
      acc *= full_sum / used_sum;
    out.samples[i] = acc;
  }
  return out;
}

std::vector<double> moving_average_taps(int n) {
  if (n < 1) throw std::invalid_argument("moving_average_taps: n must be >= 1");
  return std::vector<double>(static_cast<std::size_t>(n), 1.0 / n);
}

OnlineFir::OnlineFir(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("OnlineFir: empty coefficient list");
  history_.assign(coeffs_.size(), 0.0);
  double abs_sum = 0.0;
  for (double h : coeffs_) {
    full_sum_ += h;
    abs_sum += std::abs(h);
  }
  renorm_floor_ = 1e-12 * abs_sum;
}

double OnlineFir::push(double x) {
  head_ = (head_ + history_.size() - 1) % history_.size();
  history_[head_] = x;
  if (filled_ < history_.size()) ++filled_;

  double acc = 0.0, used_sum = 0.0;
  for (std::size_t k = 0; k < filled_; ++k) {
    acc += coeffs_[k] * history_[(head_ + k) % history_.size()];
    used_sum += coeffs_[k];
  }
  if (filled_ < coeffs_.size() && std::abs(used_sum) > renorm_floor_)
    acc *= full_sum_ / used_sum;
  return acc;
}

}  // namespace soro::signal
