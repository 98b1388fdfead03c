#include "hin/embedding.hpp"

#include <charconv>
#include <cmath>
#include <fstream>

#include "hin/error.hpp"

namespace hin {

EmbeddingTable::EmbeddingTable(std::unordered_map<std::string, int> vocab,
                               Eigen::MatrixXd vectors)
    : vocab_(std::move(vocab)), vectors_(std::move(vectors)) {
  if (static_cast<int>(vocab_.size()) != vectors_.rows())
    throw ParseError("vocabulary size does not match vector count");
}

Eigen::MatrixXd::ConstRowXpr EmbeddingTable::vector(int index) const {
  if (index < 0 || index >= size())
    throw IndexOutOfRange("embedding index " + std::to_string(index) +
                          " not in [0, " + std::to_string(size()) + ")");
  return vectors_.row(index);
}

namespace {

double parse_component(const char* begin, const char* end, int lineno) {
  double value = 0;
  auto [p, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || p != end)
    throw ParseError("embeddings line " + std::to_string(lineno) +
                     ": bad number '" + std::string(begin, end) + "'");
  if (!std::isfinite(value))
    throw ParseError("embeddings line " + std::to_string(lineno) +
                     ": non-finite component");
  return value;
}

}  // namespace

EmbeddingTable load_embeddings(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());

  std::string line;
  if (!std::getline(in, line))
    throw ParseError(path.string() + ": empty embeddings file");
  long declared_n = 0, declared_d = 0;
  {
    size_t space = line.find(' ');
    if (space == std::string::npos)
      throw ParseError(path.string() + ": header must be 'n d'");
    auto r1 = std::from_chars(line.data(), line.data() + space, declared_n);
    auto r2 = std::from_chars(line.data() + space + 1,
                              line.data() + line.size(), declared_d);
    if (r1.ec != std::errc() || r2.ec != std::errc() ||
        r2.ptr != line.data() + line.size() || declared_n < 0 || declared_d <= 0)
      throw ParseError(path.string() + ": header must be 'n d'");
  }

  std::unordered_map<std::string, int> vocab;
  vocab.reserve(static_cast<size_t>(declared_n));
  Eigen::MatrixXd vectors(declared_n, declared_d);
  int row = 0;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (row >= declared_n)
      throw ParseError(path.string() + ": more tokens than declared n=" +
                       std::to_string(declared_n));
    size_t space = line.find(' ');
    if (space == std::string::npos || space == 0)
      throw ParseError(path.string() + ":" + std::to_string(lineno) +
                       ": expected 'token v1 .. vd'");
    std::string token = line.substr(0, space);
    if (!vocab.emplace(token, row).second)
      throw DuplicateToken("'" + token + "' at line " + std::to_string(lineno));

    int col = 0;
    size_t pos = space + 1;
    while (pos <= line.size()) {
      size_t next = line.find(' ', pos);
      size_t stop = (next == std::string::npos) ? line.size() : next;
      if (col >= declared_d)
        throw ParseError(path.string() + ":" + std::to_string(lineno) +
                         ": expected " + std::to_string(declared_d) +
                         " components, found more");
      vectors(row, col++) =
          parse_component(line.data() + pos, line.data() + stop, lineno);
      if (next == std::string::npos) break;
      pos = next + 1;
    }
    if (col != declared_d)
      throw ParseError(path.string() + ":" + std::to_string(lineno) + ": has " +
                       std::to_string(col) + " components, dim=" +
                       std::to_string(declared_d));
    ++row;
  }
  if (row != declared_n)
    throw ParseError(path.string() + ": declared n=" +
                     std::to_string(declared_n) + " but found " +
                     std::to_string(row) + " token lines");
  return EmbeddingTable(std::move(vocab), std::move(vectors));
}

double word_cost(const EmbeddingTable& table, int i, int j) {
  return (table.vector(i) - table.vector(j)).norm();
}

}  // namespace hin
