#include "soro/signal/welch.hpp"

#include <unsupported/Eigen/FFT>

#include <cmath>
#include <complex>
#include <stdexcept>

namespace soro::signal {

lti::FrequencyResponse psd_welch(const SignalRecord& x, int segment_len, double overlap,
                                 int nfft) {
  const int n = static_cast<int>(x.size());
  if (segment_len < 4) throw std::invalid_argument("psd_welch: segment_len too small");
  if (segment_len > n) throw std::invalid_argument("psd_welch: segment_len exceeds signal length");
  if (overlap < 0.0 || overlap >= 1.0) throw std::invalid_argument("psd_welch: overlap in [0,1)");

  if (nfft == 0) {
    nfft = 1;
    while (nfft < segment_len) nfft *= 2;
  }
  if (nfft < segment_len) throw std::invalid_argument("psd_welch: nfft < segment_len");

  std::vector<double> window(static_cast<std::size_t>(segment_len));
  double win_sq = 0.0;
  for (int t = 0; t < segment_len; ++t) {
    window[static_cast<std::size_t>(t)] =
        0.5 * (1.0 - std::cos(2.0 * M_PI * t / (segment_len - 1)));
    win_sq += window[static_cast<std::size_t>(t)] * window[static_cast<std::size_t>(t)];
  }

  const int hop = std::max(1, static_cast<int>(std::lround(segment_len * (1.0 - overlap))));
  std::vector<int> starts;
  for (int s = 0; s + segment_len <= n; s += hop) starts.push_back(s);

  const int bins = nfft / 2 + 1;
  // One periodogram per segment, summed serially afterwards so the result
  // does not depend on thread count.
  std::vector<std::vector<double>> per_segment(starts.size(),
                                               std::vector<double>(static_cast<std::size_t>(bins)));
#pragma omp parallel for schedule(static)
  for (long si = 0; si < static_cast<long>(starts.size()); ++si) {
    Eigen::FFT<double> fft;
    std::vector<double> seg(static_cast<std::size_t>(nfft), 0.0);
    for (int t = 0; t < segment_len; ++t)
      seg[static_cast<std::size_t>(t)] =
          x.samples[static_cast<std::size_t>(starts[static_cast<std::size_t>(si)] + t)] *
          window[static_cast<std::size_t>(t)];
    std::vector<std::complex<double>> spec;
    fft.fwd(spec, seg);
    for (int k = 0; k < bins; ++k)
      per_segment[static_cast<std::size_t>(si)][static_cast<std::size_t>(k)] =
          std::norm(spec[static_cast<std::size_t>(k)]);
  }

  const double fs = 1.0 / x.dt;
  const double scale = 1.0 / (fs * win_sq * static_cast<double>(starts.size()));
  lti::FrequencyResponse out;
  out.omega.resize(static_cast<std::size_t>(bins));
  out.magnitude_db.resize(static_cast<std::size_t>(bins));
  out.phase_deg.assign(static_cast<std::size_t>(bins), 0.0);
  for (int k = 0; k < bins; ++k) {
    double p = 0.0;
    for (const auto& seg : per_segment) p += seg[static_cast<std::size_t>(k)];
    p *= scale;
    if (k != 0 && k != nfft / 2) p *= 2.0;  // one-sided
    out.omega[static_cast<std::size_t>(k)] = 2.0 * M_PI * k * fs / nfft;
    out.magnitude_db[static_cast<std::size_t>(k)] = 10.0 * std::log10(std::max(p, 1e-300));
  }
  return out;
}

}  // namespace soro::signal
