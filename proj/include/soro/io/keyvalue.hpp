#pragma once

#include <map>
#include <string>

namespace soro::io {

/// Flat `key=value` text files (model, controller, and sim configs).
/// '#' starts a comment; blank lines are skipped. Keys are unique; a
/// duplicate key throws with its line number.
class KeyValueFile {
 public:
  KeyValueFile() = default;
  static KeyValueFile load(const std::string& path);
  static KeyValueFile parse(const std::string& text, const std::string& origin = "<string>");

  void save(const std::string& path) const;

  bool has(const std::string& key) const { return values_.count(key) > 0; }
  double get_double(const std::string& key) const;
  double get_double(const std::string& key, double fallback) const;
  long get_int(const std::string& key, long fallback) const;
  std::string get_string(const std::string& key, const std::string& fallback) const;

  void set_double(const std::string& key, double value);  // %.17g, round-trip exact
  void set_int(const std::string& key, long value);
  void set_string(const std::string& key, const std::string& value);

  const std::map<std::string, std::string>& entries() const { return values_; }

 private:
  std::map<std::string, std::string> values_;
};

}  // namespace soro::io
