#include "hin/toml_lite.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "hin/error.hpp"

namespace hin::toml {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

// Strips a trailing comment that is not inside a basic string.
std::string strip_comment(const std::string& line) {
  bool in_string = false;
  for (size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (c == '"' && (i == 0 || line[i - 1] != '\\')) in_string = !in_string;
    if (c == '#' && !in_string) return line.substr(0, i);
  }
  return line;
}

std::string unescape(const std::string& s, size_t lineno) {
  std::string out;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '\\') {
      out += s[i];
      continue;
    }
    if (++i == s.size())
      throw ParseError("toml line " + std::to_string(lineno) + ": bad escape");
    switch (s[i]) {
      case 'n': out += '\n'; break;
      case 't': out += '\t'; break;
      case 'r': out += '\r'; break;
      case '"': out += '"'; break;
      case '\\': out += '\\'; break;
      default:
        throw ParseError("toml line " + std::to_string(lineno) +
                         ": unsupported escape \\" + s[i]);
    }
  }
  return out;
}

Value parse_scalar(const std::string& raw, size_t lineno) {
  std::string t = trim(raw);
  if (t.empty())
    throw ParseError("toml line " + std::to_string(lineno) + ": empty value");
  if (t.front() == '"') {
    if (t.size() < 2 || t.back() != '"')
      throw ParseError("toml line " + std::to_string(lineno) +
                       ": unterminated string");
    return Value{unescape(t.substr(1, t.size() - 2), lineno)};
  }
  if (t == "true") return Value{true};
  if (t == "false") return Value{false};
  // Integer first, float as fallback.
  {
    int64_t i = 0;
    auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), i);
    if (ec == std::errc() && p == t.data() + t.size()) return Value{i};
  }
  {
    double d = 0;
    auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), d);
    if (ec == std::errc() && p == t.data() + t.size()) return Value{d};
  }
  throw ParseError("toml line " + std::to_string(lineno) + ": bad value '" +
                   t + "'");
}

// Splits a single-line array body on commas outside strings.
std::vector<std::string> split_array(const std::string& body, size_t lineno) {
  std::vector<std::string> parts;
  std::string cur;
  bool in_string = false;
  for (size_t i = 0; i < body.size(); ++i) {
    char c = body[i];
    if (c == '"' && (i == 0 || body[i - 1] != '\\')) in_string = !in_string;
    if (c == ',' && !in_string) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (in_string)
    throw ParseError("toml line " + std::to_string(lineno) +
                     ": unterminated string in array");
  if (!trim(cur).empty()) parts.push_back(cur);
  return parts;
}

Value parse_array(const std::string& raw, size_t lineno) {
  std::string body = trim(raw);
  body = body.substr(1, body.size() - 2);  // strip [ ]
  std::vector<Value> items;
  for (const auto& part : split_array(body, lineno))
    items.push_back(parse_scalar(part, lineno));
  if (items.empty()) return Value{std::vector<std::string>{}};
  if (std::holds_alternative<std::string>(items[0].v)) {
    std::vector<std::string> out;
    for (auto& it : items) out.push_back(it.as_string());
    return Value{out};
  }
  if (std::holds_alternative<int64_t>(items[0].v)) {
    bool all_int = true;
    for (auto& it : items)
      if (!std::holds_alternative<int64_t>(it.v)) all_int = false;
    if (all_int) {
      std::vector<int64_t> out;
      for (auto& it : items) out.push_back(it.as_int());
      return Value{out};
    }
  }
  std::vector<double> out;
  for (auto& it : items) out.push_back(it.as_double());
  return Value{out};
}

}  // namespace

bool Value::as_bool() const {
  if (auto* b = std::get_if<bool>(&v)) return *b;
  throw ConfigViolation("expected boolean config value");
}

int64_t Value::as_int() const {
  if (auto* i = std::get_if<int64_t>(&v)) return *i;
  throw ConfigViolation("expected integer config value");
}

double Value::as_double() const {
  if (auto* d = std::get_if<double>(&v)) return *d;
  if (auto* i = std::get_if<int64_t>(&v)) return static_cast<double>(*i);
  throw ConfigViolation("expected numeric config value");
}

const std::string& Value::as_string() const {
  if (auto* s = std::get_if<std::string>(&v)) return *s;
  throw ConfigViolation("expected string config value");
}

std::vector<int64_t> Value::as_int_array() const {
  if (auto* a = std::get_if<std::vector<int64_t>>(&v)) return *a;
  if (auto* i = std::get_if<int64_t>(&v)) return {*i};
  throw ConfigViolation("expected integer array config value");
}

std::vector<std::string> Value::as_string_array() const {
  if (auto* a = std::get_if<std::vector<std::string>>(&v)) return *a;
  if (auto* s = std::get_if<std::string>(&v)) return {*s};
  throw ConfigViolation("expected string array config value");
}

const Value& Table::at(const std::string& key) const {
  auto it = map_.find(key);
  if (it == map_.end()) throw ConfigViolation("missing config key '" + key + "'");
  return it->second;
}

Table parse(const std::string& text) {
  Table table;
  std::istringstream in(text);
  std::string line, section;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(strip_comment(line));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw ParseError("toml line " + std::to_string(lineno) +
                         ": malformed section header");
      section = trim(line.substr(1, line.size() - 2));
      if (section.empty())
        throw ParseError("toml line " + std::to_string(lineno) +
                         ": empty section name");
      continue;
    }
    size_t eq = std::string::npos;
    bool in_string = false;
    for (size_t i = 0; i < line.size(); ++i) {
      if (line[i] == '"') in_string = !in_string;
      if (line[i] == '=' && !in_string) {
        eq = i;
        break;
      }
    }
    if (eq == std::string::npos)
      throw ParseError("toml line " + std::to_string(lineno) +
                       ": expected key = value");
    std::string key = trim(line.substr(0, eq));
    std::string raw = trim(line.substr(eq + 1));
    if (key.empty())
      throw ParseError("toml line " + std::to_string(lineno) + ": empty key");
    if (!section.empty()) key = section + "." + key;
    Value value = (!raw.empty() && raw.front() == '[' && raw.back() == ']')
                      ? parse_array(raw, lineno)
                      : parse_scalar(raw, lineno);
    table.set(key, std::move(value));
  }
  return table;
}

Table parse_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

}  // namespace hin::toml
