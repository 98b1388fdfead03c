#include "hin/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "hin/embedding.hpp"
#include "hin/error.hpp"
#include "hin/jsonl.hpp"
#include "hin/toml_lite.hpp"

namespace hin {

const char* to_string(UnitKind kind) {
  switch (kind) {
    case UnitKind::Doc: return "Doc";
    case UnitKind::Item: return "Item";
    case UnitKind::Topic: return "Topic";
  }
  return "?";
}

UnitKind unit_kind_from_string(const std::string& s) {
  if (s == "Doc") return UnitKind::Doc;
  if (s == "Item") return UnitKind::Item;
  if (s == "Topic") return UnitKind::Topic;
  throw ParseError("unknown unit kind '" + s + "'");
}

TextUnit TextUnit::from_text(std::string id, UnitKind kind, std::string text) {
  TextUnit unit;
  unit.id = std::move(id);
  unit.kind = kind;
  unit.raw_text = std::move(text);
  // Split on '\n'; a trailing newline does not open an extra empty line.
  std::string cur;
  for (char c : unit.raw_text) {
    if (c == '\n') {
      unit.lines.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty() || unit.raw_text.empty() ||
      unit.raw_text.back() != '\n') {
    unit.lines.push_back(cur);
  }
  return unit;
}

uint64_t TokenCounts::total() const {
  uint64_t t = 0;
  for (const auto& [_, c] : counts) t += c;
  return t;
}

double NbowVector::sum() const {
  double s = 0;
  for (const auto& [_, w] : weights) s += w;
  return s;
}

TokenizerConfig TokenizerConfig::load(const std::filesystem::path& path) {
  TokenizerConfig cfg;
  std::filesystem::path stopword_path;
  if (path.extension() == ".json") {
    auto records = jsonl::read_file(path);
    if (records.size() != 1)
      throw ParseError("tokenizer config must be a single JSON object");
    const auto& j = records.front();
    if (j.contains("lowercase")) cfg.lowercase = j.at("lowercase").get<bool>();
    if (j.contains("stopwords"))
      stopword_path = j.at("stopwords").get<std::string>();
  } else {
    auto table = toml::parse_file(path);
    if (table.has("lowercase")) cfg.lowercase = table.at("lowercase").as_bool();
    if (table.has("stopwords"))
      stopword_path = table.at("stopwords").as_string();
  }
  if (!stopword_path.empty()) {
    if (stopword_path.is_relative())
      stopword_path = path.parent_path() / stopword_path;
    std::ifstream in(stopword_path);
    if (!in) throw ParseError("cannot open stopword list " + stopword_path.string());
    std::string word;
    while (std::getline(in, word)) {
      while (!word.empty() && (word.back() == '\r' || word.back() == ' '))
        word.pop_back();
      if (!word.empty()) cfg.stopwords.insert(word);
    }
  }
  return cfg;
}

namespace {

inline bool is_word_byte(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '_' || c >= 0x80;
}

}  // namespace

TokenCounts tokenize(const TextUnit& unit, const TokenizerConfig& rules) {
  TokenCounts out;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    if (!rules.stopwords.count(cur)) ++out.counts[cur];
    cur.clear();
  };
  for (unsigned char c : unit.raw_text) {
    if (is_word_byte(c)) {
      if (rules.lowercase && c >= 'A' && c <= 'Z') c = c - 'A' + 'a';
      cur += static_cast<char>(c);
    } else {
      flush();
    }
  }
  flush();
  return out;
}

NbowVector to_nbow(const TokenCounts& counts, const EmbeddingTable& table) {
  NbowVector out;
  uint64_t kept_total = 0;
  for (const auto& [token, count] : counts.counts) {
    if (auto idx = table.index_of(token)) {
      out.weights.emplace_back(*idx, static_cast<double>(count));
      kept_total += count;
    }
  }
  if (kept_total == 0) {
    out.weights.clear();
    return out;  // degenerate: every token is out of vocabulary
  }
  std::sort(out.weights.begin(), out.weights.end());
  for (auto& [_, w] : out.weights) w /= static_cast<double>(kept_total);
  return out;
}

std::vector<TextUnit> load_corpus(const std::filesystem::path& path) {
  std::vector<TextUnit> units;
  if (std::filesystem::is_directory(path)) {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(path))
      if (entry.is_regular_file() && entry.path().extension() == ".txt")
        files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const auto& file : files) {
      std::ifstream in(file, std::ios::binary);
      if (!in) throw ParseError("cannot open " + file.string());
      std::ostringstream buf;
      buf << in.rdbuf();
      units.push_back(
          TextUnit::from_text(file.stem().string(), UnitKind::Doc, buf.str()));
    }
  } else {
    for (const auto& j : jsonl::read_file(path)) {
      UnitKind kind = j.contains("kind")
                          ? unit_kind_from_string(j.at("kind").get<std::string>())
                          : UnitKind::Doc;
      units.push_back(TextUnit::from_text(j.at("id").get<std::string>(), kind,
                                          j.at("text").get<std::string>()));
    }
  }
  std::unordered_set<std::string> seen;
  for (const auto& u : units)
    if (!seen.insert(u.id).second)
      throw ParseError("duplicate unit id '" + u.id + "' in corpus");
  return units;
}

std::vector<TextUnit> load_topics(const std::filesystem::path& path) {
  std::vector<TextUnit> topics;
  std::unordered_set<std::string> seen;
  for (const auto& j : jsonl::read_file(path)) {
    auto id = j.at("id").get<std::string>();
    if (!seen.insert(id).second)
      throw ParseError("duplicate topic id '" + id + "'");
    topics.push_back(TextUnit::from_text(
        id, UnitKind::Topic, j.at("description").get<std::string>()));
  }
  return topics;
}

}  // namespace hin
