#pragma once

#include <string>

#include "soro/signal/record.hpp"

namespace soro::sysid {

enum class DataRole { Estimation, Validation };

/// Paired input/output records Z^N: u in valve current, y in head height,
/// one sample per dt.
struct DatasetZN {
  signal::SignalRecord u;
  signal::SignalRecord y;
  DataRole role = DataRole::Estimation;

  std::size_t size() const { return u.size(); }
  double dt() const { return u.dt; }
  void validate() const;  // equal lengths, equal dt, nonempty
};

/// CSV schema `t,u,y`, time in seconds. dt is inferred from the t column
/// and must be uniform within 1e-9 relative.
DatasetZN read_dataset_csv(const std::string& path,
                           DataRole role = DataRole::Estimation);
void write_dataset_csv(const std::string& path, const DatasetZN& z);

}  // namespace soro::sysid
