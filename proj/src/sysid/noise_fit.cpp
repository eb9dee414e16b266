#include "soro/sysid/noise_fit.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "soro/signal/ar.hpp"
#include "soro/signal/correlation.hpp"

namespace soro::sysid {

namespace {

// Bilinear image of a discrete root: s = (2/dt)(z - 1)/(z + 1).
double bilinear_to_s(double z, double dt) { return (2.0 / dt) * (z - 1.0) / (z + 1.0); }

}  // namespace

NoiseFitResult fit_noise_model(const signal::SignalRecord& alpha) {
  const std::size_t n = alpha.size();
  if (n < 300) throw std::invalid_argument("fit_noise_model: need at least 300 residual samples");
  const double dt = alpha.dt;

  // Stage 1: long AR fit estimates the innovation sequence.
  const int ar_order = std::min<int>(20, static_cast<int>(n / 20));
  const auto longar = signal::ar_fit(alpha, ar_order);
  const auto innov = longar.apply(alpha);

  // Stage 2: alpha(t) = lam*alpha(t-1) + e(t) + th*e(t-1), least squares
  // in (lam, th) using the stage-1 innovations.
  const std::size_t rows = n - 1 - static_cast<std::size_t>(ar_order);
  Eigen::MatrixXd reg(rows, 2);
  Eigen::VectorXd target(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    const std::size_t t = i + 1 + static_cast<std::size_t>(ar_order);
    target(static_cast<long>(i)) = alpha.samples[t] - innov.samples[t];
    reg(static_cast<long>(i), 0) = alpha.samples[t - 1];
    reg(static_cast<long>(i), 1) = innov.samples[t - 1];
  }
  const Eigen::Vector2d phi = reg.colPivHouseholderQr().solve(target);
  double lam = phi(0);
  double th = phi(1);

  // Keep the mapped model stable and invertible: both discrete roots
  // strictly inside the unit circle, away from z = -1 where the bilinear
  // map blows up.
  lam = std::clamp(lam, -0.999, 0.999);
  th = std::clamp(th, -0.999, 0.999);

  NoiseFitResult out;
  out.model.d0 = -bilinear_to_s(lam, dt);   // pole of (s + d0)
  out.model.c0 = -bilinear_to_s(-th, dt);   // zero of (s + c0); discrete zero at -th
  if (out.model.d0 <= 0.0) out.model.d0 = 1e-6;

  // Whiteness of the inverted-model residual decides adequacy.
  signal::SignalRecord e;
  e.dt = dt;
  e.samples.resize(n, 0.0);
  double prev_e = 0.0;
  for (std::size_t t = 1; t < n; ++t) {
    const double et = alpha.samples[t] - lam * alpha.samples[t - 1] - th * prev_e;
    e.samples[t] = et;
    prev_e = et;
  }
  const int max_lag = std::min<int>(50, static_cast<int>(n / 4));
  out.whiteness_fraction = signal::inside_band_fraction(signal::acf(e, max_lag), max_lag);
  out.adequate = out.whiteness_fraction >= 0.9;
  return out;
}

}  // namespace soro::sysid
