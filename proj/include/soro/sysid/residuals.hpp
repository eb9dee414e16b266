#pragma once

#include "soro/signal/record.hpp"
#include "soro/sysid/dataset.hpp"
#include "soro/sysid/process_model.hpp"

namespace soro::sysid {

/// Residual validation bundle: alpha(t) = y(t) - y_hat(t) after the
/// startup window (dead time plus two fast-pole time constants), the
/// worst/average statistics, and the residual-input covariance sweep
/// against its 99% band.
struct ResidualReport {
  signal::SignalRecord alpha;
  double s1 = 0.0;                      // max |alpha|
  double s2 = 0.0;                      // rms alpha
  signal::CorrelationSeries r_alpha_u;  // normalized R_hat_{alpha u}(tau)
  double band_99 = 0.0;                 // +-2.58/sqrt(N)
  bool band_pass = false;               // >= 95% of lags inside band_99
};

ResidualReport residual_analysis(const DatasetZN& z_v, const ProcessModel& model, int max_lag);

}  // namespace soro::sysid
