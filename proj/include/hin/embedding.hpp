#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <unordered_map>

#include <Eigen/Core>

namespace hin {

/// Pre-trained word embeddings: a vocabulary of n tokens mapped to rows of
/// an n x d matrix. Immutable after load; concurrent readers are safe.
class EmbeddingTable {
 public:
  EmbeddingTable() = default;
  EmbeddingTable(std::unordered_map<std::string, int> vocab,
                 Eigen::MatrixXd vectors);

  int dim() const { return static_cast<int>(vectors_.cols()); }
  int size() const { return static_cast<int>(vectors_.rows()); }

  std::optional<int> index_of(const std::string& token) const {
    auto it = vocab_.find(token);
    if (it == vocab_.end()) return std::nullopt;
    return it->second;
  }

  Eigen::MatrixXd::ConstRowXpr vector(int index) const;

  const std::unordered_map<std::string, int>& vocab() const { return vocab_; }

 private:
  std::unordered_map<std::string, int> vocab_;
  Eigen::MatrixXd vectors_;  // row i = embedding of token i
};

/// Reads the text word2vec convention: a "n d" header line, then one line
/// per token ("token v1 v2 ... vd", single-space separated). Rejects
/// duplicate tokens, dimension mismatches, non-finite components, and files
/// whose declared n does not match the line count.
EmbeddingTable load_embeddings(const std::filesystem::path& path);

/// Euclidean travel cost between two vocabulary entries.
double word_cost(const EmbeddingTable& table, int i, int j);

}  // namespace hin
