#include "soro/sim/config.hpp"

#include <stdexcept>

#include "soro/io/csv.hpp"
#include "soro/io/keyvalue.hpp"

namespace soro::sim {

void SimConfig::validate() const {
  if (dt <= 0.0) throw std::invalid_argument("SimConfig: dt must be positive");
  if (duration < dt) throw std::invalid_argument("SimConfig: duration shorter than dt");
  if (u_min >= u_max) throw std::invalid_argument("SimConfig: u_min must be below u_max");
  if (sensor_rate <= 0.0) throw std::invalid_argument("SimConfig: sensor_rate must be positive");
  if (fir_taps < 1) throw std::invalid_argument("SimConfig: fir_taps must be >= 1");
  if (sensor_noise_std < 0.0 || sensor_quant < 0.0)
    throw std::invalid_argument("SimConfig: negative sensor noise/quantization");
}

SimConfig SimConfig::from_file(const std::string& path) {
  const io::KeyValueFile kv = io::KeyValueFile::load(path);
  SimConfig c;
  c.dt = kv.get_double("dt", c.dt);
  c.duration = kv.get_double("duration", c.duration);
  c.u_min = kv.get_double("u_min", c.u_min);
  c.u_max = kv.get_double("u_max", c.u_max);
  c.u_op = kv.get_double("u_op", c.u_op);
  c.sensor_noise_std = kv.get_double("sensor_noise_std", c.sensor_noise_std);
  c.sensor_quant = kv.get_double("sensor_quant", c.sensor_quant);
  c.sensor_rate = kv.get_double("sensor_rate", c.sensor_rate);
  c.fir_taps = static_cast<int>(kv.get_int("fir_taps", c.fir_taps));
  c.rest_height_cm = kv.get_double("rest_height_cm", c.rest_height_cm);
  c.mount_height_mm = kv.get_double("mount_height_mm", c.mount_height_mm);
  c.noise_c0 = kv.get_double("noise_c0", c.noise_c0);
  c.noise_d0 = kv.get_double("noise_d0", c.noise_d0);
  c.seed = static_cast<unsigned long>(kv.get_int("seed", static_cast<long>(c.seed)));
  c.validate();
  return c;
}

void SimConfig::save(const std::string& path) const {
  io::KeyValueFile kv;
  kv.set_double("dt", dt);
  kv.set_double("duration", duration);
  kv.set_double("u_min", u_min);
  kv.set_double("u_max", u_max);
  kv.set_double("u_op", u_op);
  kv.set_double("sensor_noise_std", sensor_noise_std);
  kv.set_double("sensor_quant", sensor_quant);
  kv.set_double("sensor_rate", sensor_rate);
  kv.set_int("fir_taps", fir_taps);
  kv.set_double("rest_height_cm", rest_height_cm);
  kv.set_double("mount_height_mm", mount_height_mm);
  kv.set_double("noise_c0", noise_c0);
  kv.set_double("noise_d0", noise_d0);
  kv.set_int("seed", static_cast<long>(seed));
  kv.save(path);
}

void Trajectory::validate() const {
  if (segments.empty()) throw std::invalid_argument("Trajectory: no segments");
  if (segments.front().start != 0.0)
    throw std::invalid_argument("Trajectory: first segment must start at t=0");
  for (std::size_t i = 1; i < segments.size(); ++i)
    if (segments[i].start <= segments[i - 1].start)
      throw std::invalid_argument("Trajectory: start times must be strictly increasing");
}

double Trajectory::setpoint_at(double t) const {
  double sp = segments.front().setpoint_cm;
  for (const auto& seg : segments) {
    if (t + 1e-12 >= seg.start) sp = seg.setpoint_cm;
    else break;
  }
  return sp;
}

Trajectory Trajectory::from_csv(const std::string& path) {
  const io::CsvTable table = io::read_csv(path);
  if (table.header.size() != 2 || table.header[0] != "t" || table.header[1] != "setpoint")
    throw std::runtime_error("Trajectory: expected header 't,setpoint' in " + path);
  Trajectory traj;
  const auto& t = table.column("t");
  const auto& sp = table.column("setpoint");
  for (std::size_t i = 0; i < t.size(); ++i) traj.segments.push_back({t[i], sp[i]});
  traj.validate();
  return traj;
}

void Trajectory::save_csv(const std::string& path) const {
  validate();
  io::CsvTable table;
  table.header = {"t", "setpoint"};
  table.columns.resize(2);
  for (const auto& seg : segments) {
    table.columns[0].push_back(seg.start);
    table.columns[1].push_back(seg.setpoint_cm);
  }
  io::write_csv(path, table);
}

}  // namespace soro::sim
