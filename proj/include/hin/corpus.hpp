#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace hin {

class EmbeddingTable;

enum class UnitKind { Doc, Item, Topic };

const char* to_string(UnitKind kind);
UnitKind unit_kind_from_string(const std::string& s);

/// One text-bearing network entity. `lines` keeps the raw line split so the
/// segmenter can address headers by line number; `raw_text` is the exact
/// '\n'-joined concatenation of `lines`.
struct TextUnit {
  std::string id;
  UnitKind kind = UnitKind::Doc;
  std::string raw_text;
  std::vector<std::string> lines;

  static TextUnit from_text(std::string id, UnitKind kind, std::string text);
};

/// Token -> occurrence count. Ordered map so every consumer iterates in a
/// stable order.
struct TokenCounts {
  std::map<std::string, uint64_t> counts;

  bool empty() const { return counts.empty(); }
  uint64_t total() const;
};

/// Sparse normalized bag-of-words over embedding-vocabulary indices,
/// entries sorted by index. Weights are strictly positive and sum to 1;
/// the empty (degenerate) vector is the only exception.
struct NbowVector {
  std::vector<std::pair<int, double>> weights;

  bool degenerate() const { return weights.empty(); }
  double sum() const;
};

struct TokenizerConfig {
  bool lowercase = true;
  std::unordered_set<std::string> stopwords;

  /// Reads a .json or .toml config with keys `lowercase` (bool) and
  /// `stopwords` (path to a one-word-per-line file, optional).
  static TokenizerConfig load(const std::filesystem::path& path);
};

/// Lowercases (optionally) and splits on non-word boundaries. Word bytes are
/// ASCII alphanumerics plus '_' plus anything >= 0x80, so multibyte UTF-8
/// sequences stay intact. Deterministic for a fixed config.
TokenCounts tokenize(const TextUnit& unit, const TokenizerConfig& rules);

/// Eq-2 normalization over the tokens present in `table`; out-of-vocabulary
/// tokens are dropped and the rest renormalized. All tokens unknown yields
/// the degenerate vector, which callers must exclude from WMD edges.
NbowVector to_nbow(const TokenCounts& counts, const EmbeddingTable& table);

/// Loads Docs from a directory of UTF-8 .txt files (file stem = id) or from
/// a JSON Lines file with records {"id","kind","text"}.
std::vector<TextUnit> load_corpus(const std::filesystem::path& path);

/// Loads Topics from JSON Lines records {"id","name","description"}; the
/// description is the Topic's text for similarity purposes.
std::vector<TextUnit> load_topics(const std::filesystem::path& path);

}  // namespace hin
