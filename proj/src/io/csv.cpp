#include "soro/io/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace soro::io {

const std::vector<double>& CsvTable::column(const std::string& name) const {
  for (std::size_t i = 0; i < header.size(); ++i)
    if (header[i] == name) return columns[i];
  throw std::invalid_argument("CsvTable: no column named '" + name + "'");
}

void write_csv(const std::string& path, const CsvTable& table) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("write_csv: cannot open " + path);
  for (std::size_t i = 0; i < table.header.size(); ++i)
    out << (i ? "," : "") << table.header[i];
  out << "\n";
  char buf[32];
  for (std::size_t r = 0; r < table.rows(); ++r) {
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      std::snprintf(buf, sizeof(buf), "%.17g", table.columns[c][r]);
      out << (c ? "," : "") << buf;
    }
    out << "\n";
  }
  if (!out) throw std::runtime_error("write_csv: write failed for " + path);
}

CsvTable read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("read_csv: cannot open " + path);
  CsvTable table;
  std::string line;
  std::size_t lineno = 0;
  if (!std::getline(in, line)) throw std::runtime_error("read_csv: empty file " + path);
  ++lineno;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  std::stringstream hs(line);
  std::string field;
  while (std::getline(hs, field, ',')) table.header.push_back(field);
  if (table.header.empty())
    throw std::runtime_error("read_csv: no header fields at line 1 of " + path);
  table.columns.resize(table.header.size());

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::stringstream ls(line);
    std::size_t col = 0;
    while (std::getline(ls, field, ',')) {
      if (col >= table.columns.size())
        throw std::runtime_error("read_csv: too many fields at line " + std::to_string(lineno) +
                                 " of " + path);
      try {
        table.columns[col].push_back(std::stod(field));
      } catch (const std::exception&) {
        throw std::runtime_error("read_csv: bad number '" + field + "' at line " +
                                 std::to_string(lineno) + " of " + path);
      }
      ++col;
    }
    if (col != table.columns.size())
      throw std::runtime_error("read_csv: expected " + std::to_string(table.columns.size()) +
                               " fields at line " + std::to_string(lineno) + " of " + path);
  }
  return table;
}

}  // namespace soro::io
