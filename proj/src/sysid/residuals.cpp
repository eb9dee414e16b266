#include "soro/sysid/residuals.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "soro/kernels/xcorr.hpp"
#include "soro/sysid/pem.hpp"

namespace soro::sysid {

ResidualReport residual_analysis(const DatasetZN& z_v, const ProcessModel& model, int max_lag) {
  z_v.validate();
  const auto yhat = simulate_model(model, z_v);
  const double dt = z_v.dt();

  // Zero-state simulation needs a startup window before residuals are
  // meaningful: the dead time plus a couple of fast time constants.
  const std::size_t startup = std::min(
      z_v.size() / 4, static_cast<std::size_t>(std::lround(model.td / dt) +
                                               std::lround(2.0 * model.tp2 / dt) + 1));

  ResidualReport report;
  report.alpha.dt = dt;
  report.alpha.samples.reserve(z_v.size() - startup);
  for (std::size_t i = startup; i < z_v.size(); ++i)
    report.alpha.samples.push_back(z_v.y.samples[i] - yhat[i]);

  const std::size_t n = report.alpha.size();
  if (n < 10) throw std::invalid_argument("residual_analysis: too few residual samples");
  if (max_lag <= 0 || static_cast<std::size_t>(max_lag) >= n)
    throw std::invalid_argument("residual_analysis: max_lag out of range");

  double sumsq = 0.0;
  for (double a : report.alpha.samples) {
    report.s1 = std::max(report.s1, std::abs(a));
    sumsq += a * a;
  }
  report.s2 = std::sqrt(sumsq / static_cast<double>(n));

  // R_hat_{alpha u}(tau) = 1/N sum alpha(t) u(t-tau), tau = 0..max_lag,
  // normalized by the signal powers so the 2.58/sqrt(N) band applies.
  std::vector<double> u_win(z_v.u.samples.begin() + static_cast<long>(startup),
                            z_v.u.samples.end());
  const double mu = [&] {
    double acc = 0.0;
    for (double v : u_win) acc += v;
    return acc / static_cast<double>(u_win.size());
  }();
  for (double& v : u_win) v -= mu;
  double u_pow = 0.0;
  for (double v : u_win) u_pow += v * v;
  if (u_pow == 0.0 || sumsq == 0.0) {
    // Degenerate but legitimate (perfect model, noiseless data): all
    // covariances are zero and trivially inside the band.
    report.band_99 = 2.58 / std::sqrt(static_cast<double>(n));
    report.r_alpha_u.band_95 = 1.96 / std::sqrt(static_cast<double>(n));
    for (int tau = 0; tau <= max_lag; ++tau) {
      report.r_alpha_u.lags.push_back(tau);
      report.r_alpha_u.values.push_back(0.0);
    }
    report.band_pass = true;
    return report;
  }

  // sum_t alpha(t) u(t - tau) is lagged_products with x = u, y = alpha.
  const auto raw = kernels::lagged_products(u_win, report.alpha.samples, 0, max_lag);
  const double denom = std::sqrt(u_pow) * std::sqrt(sumsq);
  report.r_alpha_u.band_95 = 1.96 / std::sqrt(static_cast<double>(n));
  report.band_99 = 2.58 / std::sqrt(static_cast<double>(n));
  int inside = 0;
  for (int tau = 0; tau <= max_lag; ++tau) {
    const double v = raw[static_cast<std::size_t>(tau)] / denom;
    report.r_alpha_u.lags.push_back(tau);
    report.r_alpha_u.values.push_back(v);
    if (std::abs(v) <= report.band_99) ++inside;
  }
  report.band_pass =
      static_cast<double>(inside) / static_cast<double>(max_lag + 1) >= 0.95;
  return report;
}

}  // namespace soro::sysid
