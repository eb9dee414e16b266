#pragma once

#include "soro/signal/record.hpp"
#include "soro/sysid/process_model.hpp"

namespace soro::sysid {

/// Outcome of the noise-model fit. `adequate` is false when whitening the
/// residuals by the fitted model still leaves colored structure (the
/// first-order ARMA class cannot represent e.g. a sinusoidal residual).
struct NoiseFitResult {
  NoiseModel model;
  double whiteness_fraction = 0.0;  // ACF-in-band fraction of the whitened residual
  bool adequate = false;
};

/// Fits the first-order ARMA shaping C(s)/D(s) to process-model residuals:
/// a discrete ARMA(1,1) by the Hannan-Rissanen two-stage least squares,
/// mapped to s by the bilinear transform. White residuals come back with
/// c0 == d0 (the identity shaping) up to estimation noise.
NoiseFitResult fit_noise_model(const signal::SignalRecord& alpha);

}  // namespace soro::sysid
