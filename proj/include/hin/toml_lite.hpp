#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace hin::toml {

/// Scalar or array-of-scalar value from a TOML document.
struct Value {
  std::variant<bool, int64_t, double, std::string,
               std::vector<std::string>, std::vector<int64_t>,
               std::vector<double>>
      v;

  bool as_bool() const;
  int64_t as_int() const;
  double as_double() const;  // accepts integer values too
  const std::string& as_string() const;
  std::vector<int64_t> as_int_array() const;
  std::vector<std::string> as_string_array() const;
};

/// Flat TOML table: "[section]" headers are folded into dotted keys
/// ("section.key"). Supported values: basic strings, booleans, integers,
/// floats, and single-line arrays of those. Not a full TOML parser; covers
/// the pipeline-config surface only.
class Table {
 public:
  bool has(const std::string& key) const { return map_.count(key) != 0; }
  const Value& at(const std::string& key) const;
  const std::map<std::string, Value>& entries() const { return map_; }

  void set(const std::string& key, Value v) { map_[key] = std::move(v); }

 private:
  std::map<std::string, Value> map_;
};

Table parse(const std::string& text);
Table parse_file(const std::filesystem::path& path);

}  // namespace hin::toml
