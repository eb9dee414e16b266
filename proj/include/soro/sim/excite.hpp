#pragma once

#include "soro/lti/transfer_function.hpp"
#include "soro/sysid/dataset.hpp"

namespace soro::sim {

/// Band-limited periodic sawtooth: a truncated Fourier series of the ramp
/// wave, harmonics up to cutoff_hz. cutoff_hz = 0 picks 90% of the sample
/// Nyquist, capped at the 10 Hz valve limit.
struct SawtoothSpec {
  double amplitude = 10.0;  // mA, peak of the ideal ramp wave
  double period_s = 27.5;   // mid-band lines resolve the zero/dead-time pair
  double cutoff_hz = 0.0;
};

/// The identification-data generator: drives the plant open loop with the
/// sawtooth and adds white measurement noise at the requested SNR
/// (infinity = noiseless). Rejects a cutoff over the 10 Hz valve band.
struct ExciteOptions {
  std::size_t samples = 8800;
  double dt = 0.1;
  double snr_db = 30.0;   // infinity() for noiseless
  double burn_in_s = 0.0;  // optional pre-roll; the rest-start transient is
                           // itself informative and the estimator models it
  unsigned long seed = 1;
};

sysid::DatasetZN open_loop_excite(const lti::TransferFunction& plant, const SawtoothSpec& waveform,
                                  const ExciteOptions& options);

/// The sampled excitation alone (shared by tests and the generator).
std::vector<double> sampled_sawtooth(const SawtoothSpec& waveform, std::size_t samples, double dt);

}  // namespace soro::sim
