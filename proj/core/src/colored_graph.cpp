#include "circstab/colored_graph.hpp"

#include <string>

namespace circstab {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  const int n = degree();
  std::vector<char> seen(n, 0);
  for (int v : image_) {
    if (v < 0 || v >= n || seen[v]) throw DomainError("permutation is not a bijection");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> img(degree);
  for (int i = 0; i < degree; ++i) img[i] = i;
  Permutation p;
  p.image_ = std::move(img);
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i) {
    if (image_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.image_.assign(image_.size(), 0);
  for (int i = 0; i < degree(); ++i) p.image_[image_[i]] = i;
  return p;
}

Permutation Permutation::after(const Permutation& first) const {
  if (first.degree() != degree()) throw DomainError("permutation degree mismatch");
  Permutation p;
  p.image_.resize(image_.size());
  for (int i = 0; i < degree(); ++i) p.image_[i] = image_[first.image_[i]];
  return p;
}

ColoredGraph::ColoredGraph(int vertex_count) : n_(vertex_count) {
  if (vertex_count < 0) throw DomainError("negative vertex count");
  if (vertex_count > kMaxVertices) {
    throw CapExceeded("graph has " + std::to_string(vertex_count) +
                      " vertices; the engine supports at most " +
                      std::to_string(kMaxVertices));
  }
  adj_.assign(n_, VertexSet{});
  color_.assign(n_, 0);
}

std::size_t ColoredGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& row : adj_) twice += row.count();
  return twice / 2;
}

void ColoredGraph::add_edge(int u, int v) {
  if (u == v) throw DomainError("self-loops are not representable");
  adj_[u].set(v);
  adj_[v].set(u);
}

ColoredGraph ColoredGraph::relabeled(const Permutation& p) const {
  if (p.degree() != n_) throw DomainError("relabeling degree mismatch");
  ColoredGraph g(n_);
  for (int v = 0; v < n_; ++v) {
    g.color_[p(v)] = color_[v];
    adj_[v].for_each([&](int u) { g.adj_[p(v)].set(p(u)); });
  }
  return g;
}

bool ColoredGraph::is_automorphism(const Permutation& p) const {
  if (p.degree() != n_) return false;
  for (int v = 0; v < n_; ++v) {
    if (color_[p(v)] != color_[v]) return false;
    const VertexSet& target = adj_[p(v)];
    if (target.count() != adj_[v].count()) return false;
    bool ok = true;
    adj_[v].for_each([&](int u) { ok = ok && target.test(p(u)); });
    if (!ok) return false;
  }
  return true;
}

}  // namespace circstab
