#pragma once

#include <complex>
#include <vector>

#include "soro/lti/transfer_function.hpp"

namespace soro::lti {

/// Uniformly sampled scalar time series.
struct TimeSeries {
  std::vector<double> t;
  std::vector<double> y;
};

/// Step-response summary. Times in seconds, overshoot in percent.
/// Peaks inside the 2% settling band do not count as overshoot, so
/// monotone responses report exactly zero.
struct StepMetrics {
  double rise_time = 0.0;       // 10% -> 90% of the steady value
  double rise_time_to_90 = 0.0; // first reach of 90%, counted from t=0
  double settling_time = 0.0;   // last entry into the +-2% band
  double overshoot = 0.0;       // (peak - ss)/|ss| * 100, clamped at 0
  double steady_state = 0.0;
};

struct FrequencyResponse {
  std::vector<double> omega;         // rad/s, strictly increasing
  std::vector<double> magnitude_db;
  std::vector<double> phase_deg;     // unwrapped
};

struct StabilityReport {
  bool stable = false;
  std::vector<std::complex<double>> poles;  // sorted by real part, ascending
};

/// Unit-step output on [0, horizon]. The rational part is realized in
/// controllable canonical form and integrated with the shared RK2 core at
/// dt; the transport delay shifts the output exactly (y == 0 for t < delay).
TimeSeries step_response(const TransferFunction& tf, double horizon, double dt);

/// Throws "no steady state" unless the last 10% of samples sit within a 2%
/// band around their mean.
StepMetrics step_metrics(const TimeSeries& series);

/// Evaluates num(jw)/den(jw)*exp(-jw*delay) on the grid; throws if a grid
/// point lands on an imaginary-axis pole (names the frequency).
FrequencyResponse freq_response(const TransferFunction& tf, const std::vector<double>& omega);

/// Pointwise G/(1+G) on the grid with the delay applied exactly; the
/// frequency-domain companion to feedback_unity for delayed systems.
FrequencyResponse freq_response_closed_loop(const TransferFunction& open_loop,
                                            const std::vector<double>& omega);

/// True iff every denominator root has strictly negative real part. The
/// delay does not move poles and is ignored.
StabilityReport is_stable(const TransferFunction& tf);

/// Logarithmically spaced grid, helper for Bode sweeps.
std::vector<double> log_grid(double omega_min, double omega_max, int points);

}  // namespace soro::lti
