#include "wmi/families.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

namespace wmi {

UniformMatroid::UniformMatroid(std::size_t n, int k) : Matroid(n), k_(k) {
  if (k < 0) throw InstanceError("uniform matroid needs k >= 0");
}

int UniformMatroid::rank_of(std::span<const Element> elements) const {
  return std::min(static_cast<int>(elements.size()), k_);
}

std::string UniformMatroid::describe() const {
  return "uniform(n=" + std::to_string(ground_size()) + ", k=" + std::to_string(k_) + ")";
}

namespace {

std::size_t total_size(const std::vector<std::vector<Element>>& blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.size();
  return n;
}

}  // namespace

PartitionMatroid::PartitionMatroid(std::vector<std::vector<Element>> blocks, std::vector<int> caps)
    : Matroid(total_size(blocks)), blocks_(std::move(blocks)), caps_(std::move(caps)) {
  if (blocks_.size() != caps_.size())
    throw InstanceError("partition matroid: blocks and caps differ in length");
  block_of_.assign(ground_size(), -1);
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (caps_[b] < 0) throw InstanceError("partition matroid: negative capacity");
    for (Element e : blocks_[b]) {
      if (e < 0 || static_cast<std::size_t>(e) >= ground_size())
        throw InstanceError("partition matroid: element " + std::to_string(e) +
                            " outside [0, " + std::to_string(ground_size()) + ")");
      if (block_of_[e] != -1)
        throw InstanceError("partition matroid: element " + std::to_string(e) +
                            " appears in two blocks");
      block_of_[e] = static_cast<int>(b);
    }
  }
}

int PartitionMatroid::rank_of(std::span<const Element> elements) const {
  thread_local std::vector<int> used;
  used.assign(blocks_.size(), 0);
  int rank = 0;
  for (Element e : elements) {
    const int b = block_of_[e];
    if (used[b] < caps_[b]) {
      ++used[b];
      ++rank;
    }
  }
  return rank;
}

std::string PartitionMatroid::describe() const {
  return "partition(n=" + std::to_string(ground_size()) +
         ", blocks=" + std::to_string(blocks_.size()) + ")";
}

GraphicMatroid::GraphicMatroid(int vertices, std::vector<std::pair<int, int>> edges)
    : Matroid(edges.size()), vertices_(vertices), edges_(std::move(edges)) {
  if (vertices < 0) throw InstanceError("graphic matroid: negative vertex count");
  for (const auto& [u, v] : edges_) {
    if (u < 0 || v < 0 || u >= vertices || v >= vertices)
      throw InstanceError("graphic matroid: edge endpoint outside [0, " +
                          std::to_string(vertices) + ")");
  }
}

namespace {

// Disjoint-set forest whose reset is O(1) via generation stamps.
class StampedForest {
 public:
  void reset(std::size_t n) {
    if (parent_.size() < n) {
      parent_.resize(n);
      stamp_.resize(n, 0);
    }
    if (++generation_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      generation_ = 1;
    }
  }

  int find(int x) {
    touch(x);
    int root = x;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[x] != root) {
      const int next = parent_[x];
      parent_[x] = root;
      x = next;
    }
    return root;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  void touch(int x) {
    if (stamp_[x] != generation_) {
      stamp_[x] = generation_;
      parent_[x] = x;
    }
  }

  std::vector<int> parent_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t generation_ = 0;
};

}  // namespace

int GraphicMatroid::rank_of(std::span<const Element> elements) const {
  thread_local StampedForest forest;
  forest.reset(static_cast<std::size_t>(vertices_));
  int rank = 0;
  for (Element e : elements) {
    const auto& [u, v] = edges_[e];
    if (forest.unite(u, v)) ++rank;
  }
  return rank;
}

std::string GraphicMatroid::describe() const {
  return "graphic(vertices=" + std::to_string(vertices_) +
         ", edges=" + std::to_string(edges_.size()) + ")";
}

LinearGf2Matroid::LinearGf2Matroid(int rows, std::vector<std::vector<std::uint64_t>> columns)
    : Matroid(columns.size()),
      rows_(rows),
      words_(static_cast<std::size_t>((std::max(rows, 0) + 63) / 64)),
      columns_(std::move(columns)) {
  if (rows < 0) throw InstanceError("linear_gf2 matroid: negative row count");
  for (auto& col : columns_) {
    if (col.size() != words_)
      throw InstanceError("linear_gf2 matroid: column word count mismatch");
  }
}

std::shared_ptr<LinearGf2Matroid> LinearGf2Matroid::from_bitstrings(
    int rows, const std::vector<std::string>& cols) {
  const std::size_t words = static_cast<std::size_t>((std::max(rows, 0) + 63) / 64);
  std::vector<std::vector<std::uint64_t>> packed;
  packed.reserve(cols.size());
  for (const auto& bits : cols) {
    if (static_cast<int>(bits.size()) != rows)
      throw InstanceError("linear_gf2 column \"" + bits + "\" does not have " +
                          std::to_string(rows) + " bits");
    std::vector<std::uint64_t> col(words, 0);
    for (int i = 0; i < rows; ++i) {
      if (bits[i] == '1') {
        col[i / 64] |= std::uint64_t{1} << (i % 64);
      } else if (bits[i] != '0') {
        throw InstanceError("linear_gf2 column \"" + bits + "\" has a non-binary character");
      }
    }
    packed.push_back(std::move(col));
  }
  return std::make_shared<LinearGf2Matroid>(rows, std::move(packed));
}

std::string LinearGf2Matroid::column_bits(Element e) const {
  std::string bits(static_cast<std::size_t>(rows_), '0');
  for (int i = 0; i < rows_; ++i)
    if ((columns_[e][i / 64] >> (i % 64)) & 1U) bits[i] = '1';
  return bits;
}

int LinearGf2Matroid::rank_of(std::span<const Element> elements) const {
  // XOR basis indexed by pivot row: pivot_of[row] is the basis vector whose
  // lowest set bit is `row`.
  thread_local std::vector<std::vector<std::uint64_t>> basis;
  thread_local std::vector<int> pivot_of;
  basis.clear();
  pivot_of.assign(static_cast<std::size_t>(rows_), -1);
  std::vector<std::uint64_t> v(words_);
  for (Element e : elements) {
    v = columns_[e];
    for (;;) {
      int lowest = -1;
      for (std::size_t w = 0; w < words_; ++w) {
        if (v[w] != 0) {
          lowest = static_cast<int>(w * 64) + std::countr_zero(v[w]);
          break;
        }
      }
      if (lowest < 0) break;
      const int slot = pivot_of[lowest];
      if (slot < 0) {
        pivot_of[lowest] = static_cast<int>(basis.size());
        basis.push_back(v);
        break;
      }
      const auto& b = basis[slot];
      for (std::size_t w = 0; w < words_; ++w) v[w] ^= b[w];
    }
    if (static_cast<int>(basis.size()) == rows_) break;
  }
  return static_cast<int>(basis.size());
}

std::string LinearGf2Matroid::describe() const {
  return "linear_gf2(rows=" + std::to_string(rows_) +
         ", cols=" + std::to_string(columns_.size()) + ")";
}

}  // namespace wmi
