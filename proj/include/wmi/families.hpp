#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wmi/matroid.hpp"

namespace wmi {

// rank(S) = min(|S|, k).
class UniformMatroid final : public Matroid {
 public:
  UniformMatroid(std::size_t n, int k);
  int k() const { return k_; }
  std::string describe() const override;

 protected:
  int rank_of(std::span<const Element> elements) const override;

 private:
  int k_;
};

// rank(S) = sum over blocks of min(|S ∩ block|, cap). The blocks must
// partition [0, n) exactly.
class PartitionMatroid final : public Matroid {
 public:
  PartitionMatroid(std::vector<std::vector<Element>> blocks, std::vector<int> caps);
  const std::vector<std::vector<Element>>& blocks() const { return blocks_; }
  const std::vector<int>& caps() const { return caps_; }
  std::string describe() const override;

 protected:
  int rank_of(std::span<const Element> elements) const override;

 private:
  std::vector<std::vector<Element>> blocks_;
  std::vector<int> caps_;
  std::vector<int> block_of_;
};

// Cycle matroid of an undirected multigraph; element i is edge i. Each query
// rebuilds a disjoint-set forest over the touched endpoints.
class GraphicMatroid final : public Matroid {
 public:
  GraphicMatroid(int vertices, std::vector<std::pair<int, int>> edges);
  int vertices() const { return vertices_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  std::string describe() const override;

 protected:
  int rank_of(std::span<const Element> elements) const override;

 private:
  int vertices_;
  std::vector<std::pair<int, int>> edges_;
};

// Column matroid of a GF(2) matrix. Columns are packed into 64-bit words,
// bit i of the column is row i.
class LinearGf2Matroid final : public Matroid {
 public:
  LinearGf2Matroid(int rows, std::vector<std::vector<std::uint64_t>> columns);
  // Parses one "0101..." string per column; character i is row i.
  static std::shared_ptr<LinearGf2Matroid> from_bitstrings(int rows,
                                                           const std::vector<std::string>& cols);
  int rows() const { return rows_; }
  std::string column_bits(Element e) const;
  std::string describe() const override;

 protected:
  int rank_of(std::span<const Element> elements) const override;

 private:
  int rows_;
  std::size_t words_;
  std::vector<std::vector<std::uint64_t>> columns_;
};

}  // namespace wmi
