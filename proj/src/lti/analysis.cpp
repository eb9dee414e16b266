#include "soro/lti/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "soro/lti/state_space.hpp"
#include "soro/sim/rk2.hpp"

namespace soro::lti {

TimeSeries step_response(const TransferFunction& tf, double horizon, double dt) {
  if (dt <= 0.0) throw std::invalid_argument("step_response: dt must be positive");
  if (horizon < dt) throw std::invalid_argument("step_response: horizon shorter than dt");
  const StateSpace ss = StateSpace::from_tf(tf);

  const std::size_t n = static_cast<std::size_t>(std::floor(horizon / dt + 1e-9)) + 1;
  std::vector<double> y_rat(n);
  Eigen::VectorXd x = Eigen::VectorXd::Zero(ss.order());
  const auto deriv = [&ss](const Eigen::VectorXd& xs, double) { return ss.deriv(xs, 1.0); };
  for (std::size_t i = 0; i < n; ++i) {
    y_rat[i] = ss.output(x, 1.0);
    x = sim::rk2_step(deriv, x, static_cast<double>(i) * dt, dt);
  }

  TimeSeries out;
  out.t.resize(n);
  out.y.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) * dt;
    out.t[i] = t;
    if (t < tf.delay) {
      out.y[i] = 0.0;
      continue;
    }
    // Sample the undelayed response at t - delay, interpolating when the
    // delay is not a multiple of dt.
    const double ts = (t - tf.delay) / dt;
    const auto lo = static_cast<std::size_t>(std::floor(ts));
    const double frac = ts - static_cast<double>(lo);
    if (lo + 1 < n && frac > 1e-12)
      out.y[i] = (1.0 - frac) * y_rat[lo] + frac * y_rat[lo + 1];
    else
      out.y[i] = y_rat[std::min(lo, n - 1)];
  }
  return out;
}

namespace {

// Linear interpolation of the first time y crosses `level` at or after
// index `from`, moving in the direction of the step.
double first_crossing(const TimeSeries& s, double level, bool rising, std::size_t from) {
  for (std::size_t i = from; i < s.y.size(); ++i) {
    const bool hit = rising ? (s.y[i] >= level) : (s.y[i] <= level);
    if (!hit) continue;
    if (i == 0) return s.t[0];
    const double y0 = s.y[i - 1], y1 = s.y[i];
    if (y1 == y0) return s.t[i];
    const double frac = std::clamp((level - y0) / (y1 - y0), 0.0, 1.0);
    return s.t[i - 1] + frac * (s.t[i] - s.t[i - 1]);
  }
  return s.t.back();
}

}  // namespace

StepMetrics step_metrics(const TimeSeries& series) {
  const std::size_t n = series.y.size();
  if (n < 10) throw std::invalid_argument("step_metrics: series too short");
  const std::size_t tail = std::max<std::size_t>(1, n / 10);

  double ss = 0.0;
  for (std::size_t i = n - tail; i < n; ++i) ss += series.y[i];
  ss /= static_cast<double>(tail);

  const double band = 0.02 * std::abs(ss) + 1e-12;
  for (std::size_t i = n - tail; i < n; ++i)
    if (std::abs(series.y[i] - ss) > band)
      throw std::runtime_error("step_metrics: no steady state");

  StepMetrics m;
  m.steady_state = ss;
  if (std::abs(ss) < 1e-12) return m;  // zero system: all metrics zero

  const bool rising = ss > 0.0;
  const double t10 = first_crossing(series, 0.1 * ss, rising, 0);
  // 90% crossing is searched from the 10% point on, so an initial
  // non-minimum-phase undershoot cannot confuse it.
  std::size_t i10 = 0;
  while (i10 < n && series.t[i10] < t10) ++i10;
  const double t90 = first_crossing(series, 0.9 * ss, rising, i10);
  m.rise_time = std::max(0.0, t90 - t10);
  m.rise_time_to_90 = t90 - series.t.front();

  // Settling: last sample outside the 2% band; settle at the interpolated
  // re-entry just after it.
  std::size_t last_out = 0;
  bool any_out = false;
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(series.y[i] - ss) > band) {
      last_out = i;
      any_out = true;
    }
  }
  if (!any_out) {
    m.settling_time = 0.0;
  } else if (last_out + 1 >= n) {
    m.settling_time = series.t.back();  // never settled inside the horizon
  } else {
    const double y0 = series.y[last_out], y1 = series.y[last_out + 1];
    const double edge = (y0 > ss) ? ss + band : ss - band;
    const double frac = (y1 == y0) ? 1.0 : std::clamp((edge - y0) / (y1 - y0), 0.0, 1.0);
    m.settling_time = series.t[last_out] + frac * (series.t[last_out + 1] - series.t[last_out]);
  }

  // Peak in the step direction; (peak-ss)/ss is positive for overshoot in
  // either direction. Peaks inside the settling band are measurement-floor
  // noise, not overshoot.
  const double peak = rising ? *std::max_element(series.y.begin(), series.y.end())
                             : *std::min_element(series.y.begin(), series.y.end());
  if (std::abs(peak - ss) > band) m.overshoot = std::max(0.0, (peak - ss) / ss * 100.0);
  return m;
}

FrequencyResponse freq_response(const TransferFunction& tf, const std::vector<double>& omega) {
  for (std::size_t i = 1; i < omega.size(); ++i)
    if (omega[i] <= omega[i - 1])
      throw std::invalid_argument("freq_response: omega grid must be strictly increasing");

  FrequencyResponse fr;
  fr.omega = omega;
  fr.magnitude_db.resize(omega.size());
  fr.phase_deg.resize(omega.size());
  double prev_phase = 0.0;
  for (std::size_t i = 0; i < omega.size(); ++i) {
    const std::complex<double> d = poly_eval(tf.den, {0.0, omega[i]});
    if (std::abs(d) == 0.0)
      throw std::invalid_argument("freq_response: pole on the grid at omega=" +
                                  std::to_string(omega[i]));
    const std::complex<double> h = tf.eval(omega[i]);
    fr.magnitude_db[i] = 20.0 * std::log10(std::abs(h));
    double ph = std::arg(h);
    if (i > 0) {
      while (ph - prev_phase > M_PI) ph -= 2.0 * M_PI;
      while (ph - prev_phase < -M_PI) ph += 2.0 * M_PI;
    }
    prev_phase = ph;
    fr.phase_deg[i] = ph * 180.0 / M_PI;
  }
  return fr;
}

FrequencyResponse freq_response_closed_loop(const TransferFunction& open_loop,
                                            const std::vector<double>& omega) {
  FrequencyResponse fr;
  fr.omega = omega;
  fr.magnitude_db.resize(omega.size());
  fr.phase_deg.resize(omega.size());
  double prev_phase = 0.0;
  for (std::size_t i = 0; i < omega.size(); ++i) {
    const std::complex<double> g = open_loop.eval(omega[i]);
    const std::complex<double> h = g / (1.0 + g);
    fr.magnitude_db[i] = 20.0 * std::log10(std::abs(h));
    double ph = std::arg(h);
    if (i > 0) {
      while (ph - prev_phase > M_PI) ph -= 2.0 * M_PI;
      while (ph - prev_phase < -M_PI) ph += 2.0 * M_PI;
    }
    prev_phase = ph;
    fr.phase_deg[i] = ph * 180.0 / M_PI;
  }
  return fr;
}

StabilityReport is_stable(const TransferFunction& tf) {
  StabilityReport report;
  report.poles = poly_roots(tf.den);
  std::sort(report.poles.begin(), report.poles.end(),
            [](const auto& a, const auto& b) { return a.real() < b.real(); });
  report.stable = std::all_of(report.poles.begin(), report.poles.end(),
                              [](const auto& p) { return p.real() < 0.0; });
  return report;
}

std::vector<double> log_grid(double omega_min, double omega_max, int points) {
  if (omega_min <= 0.0 || omega_max <= omega_min || points < 2)
    throw std::invalid_argument("log_grid: need 0 < omega_min < omega_max and points >= 2");
  std::vector<double> grid(static_cast<std::size_t>(points));
  const double l0 = std::log10(omega_min), l1 = std::log10(omega_max);
  for (int i = 0; i < points; ++i)
    grid[static_cast<std::size_t>(i)] =
        std::pow(10.0, l0 + (l1 - l0) * static_cast<double>(i) / (points - 1));
  return grid;
}

}  // namespace soro::lti
