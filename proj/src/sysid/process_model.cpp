#include "soro/sysid/process_model.hpp"

#include <cmath>
#include <stdexcept>

#include "soro/io/keyvalue.hpp"

namespace soro::sysid {

void ProcessModel::validate() const {
  if (!(tp1 > 0.0) || !(tp2 > 0.0))
    throw std::invalid_argument("ProcessModel: pole time constants must be positive");
  if (td < 0.0) throw std::invalid_argument("ProcessModel: negative dead time");
  if (!std::isfinite(kp) || !std::isfinite(tz))
    throw std::invalid_argument("ProcessModel: non-finite parameters");
}

bool NoiseModel::is_identity(double tol) const {
  return std::abs(c0 - d0) <= tol * std::max({1.0, std::abs(c0), std::abs(d0)});
}

lti::TransferFunction model_to_tf(const ProcessModel& model) {
  model.validate();
  return lti::TransferFunction({model.kp * model.tz, model.kp},
                               {model.tp1 * model.tp2, model.tp1 + model.tp2, 1.0}, model.td);
}

lti::TransferFunction noise_to_tf(const NoiseModel& noise) {
  if (!(noise.d0 > 0.0)) throw std::invalid_argument("NoiseModel: d0 must be positive");
  return lti::TransferFunction({1.0, noise.c0}, {1.0, noise.d0});
}

void save_model(const std::string& path, const ProcessModel& model,
                const std::optional<NoiseModel>& noise) {
  model.validate();
  io::KeyValueFile kv;
  kv.set_double("kp", model.kp);
  kv.set_double("tz", model.tz);
  kv.set_double("tp1", model.tp1);
  kv.set_double("tp2", model.tp2);
  kv.set_double("td", model.td);
  if (noise) {
    kv.set_double("noise_c0", noise->c0);
    kv.set_double("noise_d0", noise->d0);
  }
  kv.save(path);
}

std::pair<ProcessModel, std::optional<NoiseModel>> load_model(const std::string& path) {
  const io::KeyValueFile kv = io::KeyValueFile::load(path);
  ProcessModel model;
  model.kp = kv.get_double("kp");
  model.tz = kv.get_double("tz");
  model.tp1 = kv.get_double("tp1");
  model.tp2 = kv.get_double("tp2");
  model.td = kv.get_double("td");
  model.validate();
  std::optional<NoiseModel> noise;
  if (kv.has("noise_c0") && kv.has("noise_d0"))
    noise = NoiseModel{kv.get_double("noise_c0"), kv.get_double("noise_d0")};
  return {model, noise};
}

}  // namespace soro::sysid
