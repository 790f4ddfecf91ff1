#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <vector>

#include "circstab/error.hpp"

namespace circstab {

inline constexpr int kMaxVertices = 128;

/// A subset of {0, ..., kMaxVertices - 1}.
struct VertexSet {
  std::array<std::uint64_t, 2> words{};

  bool test(int v) const { return (words[v >> 6] >> (v & 63)) & 1u; }
  void set(int v) { words[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void reset(int v) { words[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  int count() const { return std::popcount(words[0]) + std::popcount(words[1]); }
  bool none() const { return (words[0] | words[1]) == 0; }

  int count_and(const VertexSet& o) const {
    return std::popcount(words[0] & o.words[0]) + std::popcount(words[1] & o.words[1]);
  }

  VertexSet operator&(const VertexSet& o) const {
    return {{words[0] & o.words[0], words[1] & o.words[1]}};
  }
  VertexSet operator|(const VertexSet& o) const {
    return {{words[0] | o.words[0], words[1] | o.words[1]}};
  }
  VertexSet operator~() const { return {{~words[0], ~words[1]}}; }

  template <class F>
  void for_each(F&& f) const {
    for (int w = 0; w < 2; ++w) {
      for (std::uint64_t b = words[w]; b != 0; b &= b - 1) f(w * 64 + std::countr_zero(b));
    }
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet& a, const VertexSet& b) {
    return a.words <=> b.words;
  }
};

/// Bijection on {0, ..., degree - 1}.
class Permutation {
 public:
  Permutation() = default;
  /// Validates that `image` is a bijection; throws DomainError otherwise.
  explicit Permutation(std::vector<int> image);

  static Permutation identity(int degree);

  int degree() const { return static_cast<int>(image_.size()); }
  int operator()(int v) const { return image_[v]; }
  const std::vector<int>& image() const { return image_; }

  bool is_identity() const;
  Permutation inverse() const;
  /// (*this after first)(v) = (*this)(first(v)).
  Permutation after(const Permutation& first) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> image_;
};

/// Vertex-colored simple undirected graph with at most kMaxVertices vertices.
class ColoredGraph {
 public:
  ColoredGraph() = default;
  explicit ColoredGraph(int vertex_count);

  int vertex_count() const { return n_; }
  std::size_t edge_count() const;

  void add_edge(int u, int v);
  bool adjacent(int u, int v) const { return adj_[u].test(v); }
  const VertexSet& neighbors(int v) const { return adj_[v]; }

  int color(int v) const { return color_[v]; }
  void set_color(int v, int c) { color_[v] = c; }
  const std::vector<int>& colors() const { return color_; }

  /// The graph with vertex v renamed p(v).
  ColoredGraph relabeled(const Permutation& p) const;

  /// Whether p preserves colors and adjacency.
  bool is_automorphism(const Permutation& p) const;

  friend bool operator==(const ColoredGraph&, const ColoredGraph&) = default;

 private:
  int n_ = 0;
  std::vector<VertexSet> adj_;
  std::vector<int> color_;
};

}  // namespace circstab
