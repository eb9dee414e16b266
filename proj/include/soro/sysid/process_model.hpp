#pragma once

#include <optional>
#include <string>

#include "soro/lti/transfer_function.hpp"

namespace soro::sysid {

/// Second-order process model with one zero and dead time:
///   G(s) = Kp (1 + s Tz) / ((1 + s Tp1)(1 + s Tp2)) e^{-s Td}.
/// Tz may be negative (non-minimum phase); Tp1, Tp2 must be positive.
struct ProcessModel {
  double kp = 1.0;
  double tz = 0.0;
  double tp1 = 1.0;
  double tp2 = 1.0;
  double td = 0.0;

  void validate() const;
};

/// First-order ARMA measurement noise shaping C(s)/D(s) = (s+c0)/(s+d0);
/// c0 == d0 is the identity (white) model.
struct NoiseModel {
  double c0 = 0.0;
  double d0 = 0.0;

  bool is_identity(double tol = 1e-9) const;
};

/// G(s) as a TransferFunction (poles at -1/Tp1, -1/Tp2, zero at -1/Tz).
lti::TransferFunction model_to_tf(const ProcessModel& model);

/// H(s) = (s + c0)/(s + d0).
lti::TransferFunction noise_to_tf(const NoiseModel& noise);

/// Flat key=value files: kp/tz/tp1/tp2/td plus optional noise_c0/noise_d0.
/// %.17g serialization makes the round trip exact.
void save_model(const std::string& path, const ProcessModel& model,
                const std::optional<NoiseModel>& noise = std::nullopt);
std::pair<ProcessModel, std::optional<NoiseModel>> load_model(const std::string& path);

}  // namespace soro::sysid
