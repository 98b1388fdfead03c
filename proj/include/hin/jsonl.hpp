#pragma once

#include <filesystem>
#include <fstream>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hin/error.hpp"

namespace hin::jsonl {

using json = nlohmann::json;

/// Parses one JSON object per non-empty line. Throws ParseError with the
/// offending line number on malformed input.
inline std::vector<json> read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::vector<json> records;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded())
      throw ParseError(path.string() + ":" + std::to_string(lineno) +
                       ": invalid JSON");
    records.push_back(std::move(j));
  }
  return records;
}

class Writer {
 public:
  explicit Writer(const std::filesystem::path& path) : out_(path) {
    if (!out_) throw ParseError("cannot open " + path.string() + " for write");
  }

  void write(const json& record) { out_ << record.dump() << '\n'; }

 private:
  std::ofstream out_;
};

}  // namespace hin::jsonl
