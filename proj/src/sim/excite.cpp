#include "soro/sim/excite.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "soro/lti/state_space.hpp"
#include "soro/sim/plant_sim.hpp"

namespace soro::sim {

std::vector<double> sampled_sawtooth(const SawtoothSpec& waveform, std::size_t samples,
                                     double dt) {
  if (waveform.period_s <= 0.0) throw std::invalid_argument("sampled_sawtooth: period must be positive");
  if (dt <= 0.0) throw std::invalid_argument("sampled_sawtooth: dt must be positive");
  double cutoff = waveform.cutoff_hz;
  const double nyquist = 0.5 / dt;
  if (cutoff == 0.0) cutoff = std::min(10.0, 0.9 * nyquist);
  if (cutoff > 10.0)
    throw std::invalid_argument("sampled_sawtooth: cutoff above the 10 Hz valve band");
  if (cutoff > nyquist)
    throw std::invalid_argument("sampled_sawtooth: cutoff above the sample Nyquist");

  const double f0 = 1.0 / waveform.period_s;
  const int harmonics = std::max(1, static_cast<int>(std::floor(cutoff / f0)));

  std::vector<double> u(samples, 0.0);
  const double scale = 2.0 * waveform.amplitude / M_PI;
#pragma omp parallel for schedule(static)
  for (long i = 0; i < static_cast<long>(samples); ++i) {
    const double t = static_cast<double>(i) * dt;
    double acc = 0.0;
    for (int k = 1; k <= harmonics; ++k) {
      const double sign = (k % 2 == 1) ? 1.0 : -1.0;
      acc += sign * std::sin(2.0 * M_PI * k * f0 * t) / static_cast<double>(k);
    }
    u[static_cast<std::size_t>(i)] = scale * acc;
  }
  return u;
}

sysid::DatasetZN open_loop_excite(const lti::TransferFunction& plant, const SawtoothSpec& waveform,
                                  const ExciteOptions& options) {
  if (options.samples < 2) throw std::invalid_argument("open_loop_excite: too few samples");
  if (options.burn_in_s < 0.0) throw std::invalid_argument("open_loop_excite: negative burn-in");

  // Burn the startup transient off so the record is cycle-stationary, the
  // way a physical rig that has been inflating for a while behaves.
  const auto burn = static_cast<std::size_t>(std::lround(options.burn_in_s / options.dt));
  const std::size_t total = options.samples + burn;

  sysid::DatasetZN z;
  z.u.dt = z.y.dt = options.dt;
  const std::vector<double> u_full = sampled_sawtooth(waveform, total, options.dt);

  const int delay_steps = static_cast<int>(std::lround(plant.delay / options.dt));
  const lti::TransferFunction rational(plant.num, plant.den, 0.0);
  const std::vector<double> y_full =
      simulate_lti(lti::StateSpace::from_tf(rational), u_full, options.dt, delay_steps);

  z.u.samples.assign(u_full.begin() + static_cast<long>(burn), u_full.end());
  z.y.samples.assign(y_full.begin() + static_cast<long>(burn), y_full.end());

  if (std::isfinite(options.snr_db)) {
    double power = 0.0;
    for (double v : z.y.samples) power += v * v;
    power /= static_cast<double>(z.y.samples.size());
    const double sigma = std::sqrt(power) * std::pow(10.0, -options.snr_db / 20.0);
    std::mt19937_64 rng(options.seed);
    std::normal_distribution<double> noise(0.0, sigma);
    for (double& v : z.y.samples) v += noise(rng);
  }
  return z;
}

}  // namespace soro::sim
