#pragma once

#include <string>
#include <vector>

namespace soro::io {

/// Column-oriented CSV with a header row. Values serialize with %.17g so
/// a write/read round trip is exact.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> columns;  // one vector per header entry

  std::size_t rows() const { return columns.empty() ? 0 : columns[0].size(); }
  const std::vector<double>& column(const std::string& name) const;
};

void write_csv(const std::string& path, const CsvTable& table);

/// Throws with the offending line number on malformed input.
CsvTable read_csv(const std::string& path);

}  // namespace soro::io
