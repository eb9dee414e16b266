#include "soro/sysid/dataset.hpp"

#include <cmath>
#include <stdexcept>

#include "soro/io/csv.hpp"

namespace soro::sysid {

void DatasetZN::validate() const {
  if (u.size() != y.size()) throw std::invalid_argument("DatasetZN: u/y length mismatch");
  if (u.size() < 2) throw std::invalid_argument("DatasetZN: too few samples");
  if (u.dt != y.dt) throw std::invalid_argument("DatasetZN: u/y dt mismatch");
  if (u.dt <= 0.0) throw std::invalid_argument("DatasetZN: dt must be positive");
}

DatasetZN read_dataset_csv(const std::string& path, DataRole role) {
  const io::CsvTable table = io::read_csv(path);
  if (table.header.size() != 3 || table.header[0] != "t" || table.header[1] != "u" ||
      table.header[2] != "y")
    throw std::runtime_error("read_dataset_csv: expected header 't,u,y' in " + path);
  const auto& t = table.column("t");
  if (t.size() < 2) throw std::runtime_error("read_dataset_csv: need at least 2 rows in " + path);
  const double dt = t[1] - t[0];
  for (std::size_t i = 1; i < t.size(); ++i)
    if (std::abs(t[i] - t[i - 1] - dt) > 1e-9 * std::max(1.0, std::abs(dt)))
      throw std::runtime_error("read_dataset_csv: non-uniform time grid at row " +
                               std::to_string(i + 2) + " of " + path);

  DatasetZN z;
  z.role = role;
  z.u = {table.column("u"), dt};
  z.y = {table.column("y"), dt};
  z.validate();
  return z;
}

void write_dataset_csv(const std::string& path, const DatasetZN& z) {
  z.validate();
  io::CsvTable table;
  table.header = {"t", "u", "y"};
  std::vector<double> t(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) t[i] = static_cast<double>(i) * z.dt();
  table.columns = {std::move(t), z.u.samples, z.y.samples};
  io::write_csv(path, table);
}

}  // namespace soro::sysid
