#include "circstab/autoeng.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace circstab {

namespace {

// Ordered partition of the vertex set. Every cell is a contiguous run of
// `elems`; cells are identified by their start position.
struct Partition {
  int n = 0;
  int cells = 0;
  std::array<std::uint8_t, kMaxVertices> elems{};     // position -> vertex
  std::array<std::uint8_t, kMaxVertices> cell_of{};   // vertex -> cell start
  std::array<std::uint8_t, kMaxVertices + 1> end{};   // cell start -> cell end

  bool discrete() const { return cells == n; }
  int size(int start) const { return end[start] - start; }
};

bool same_shape(const Partition& a, const Partition& b) {
  if (a.cells != b.cells) return false;
  for (int s = 0; s < a.n; s = a.end[s]) {
    if (b.cell_of[b.elems[s]] != s || b.end[s] != a.end[s]) return false;
  }
  return true;
}

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

class Engine {
 public:
  explicit Engine(const ColoredGraph& g) : g_(g), n_(g.vertex_count()) {}

  AutomorphismReport run(const AnalyzeOptions& options) {
    for (const Permutation& p : options.known_automorphisms) {
      if (p.degree() != n_ || !g_.is_automorphism(p)) {
        throw DomainError("known automorphism does not preserve the graph");
      }
      if (!p.is_identity()) gens_.push_back(p);
    }

    AutomorphismReport report;
    if (n_ == 0) {
      report.canonical_map = Permutation::identity(0);
      if (options.canonical) report.canonical_certificate = encode_certificate({});
      return report;
    }

    Partition root = initial_partition();
    build_first_path(root);
    report.group_order = resolve_first_path_levels();

    if (options.canonical) {
      best_rows_.clear();
      std::vector<int> prefix;
      canonical_search(root, prefix);
      std::vector<int> pos(n_);
      for (int i = 0; i < n_; ++i) pos[best_elems_[i]] = i;
      report.canonical_map = Permutation(std::move(pos));
      report.canonical_certificate = encode_certificate(best_rows_);
    } else {
      report.canonical_map = Permutation::identity(n_);
    }
    report.generators = std::move(gens_);
    return report;
  }

 private:
  // ---- partition refinement -------------------------------------------------

  Partition initial_partition() {
    Partition p;
    p.n = n_;
    std::vector<int> order(n_);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g_.color(a) < g_.color(b); });
    std::array<std::uint8_t, 2 * kMaxVertices> queue{};
    int tail = 0;
    int start = 0;
    for (int i = 0; i < n_; ++i) {
      p.elems[i] = static_cast<std::uint8_t>(order[i]);
      if (i > 0 && g_.color(order[i]) != g_.color(order[i - 1])) {
        p.end[start] = static_cast<std::uint8_t>(i);
        queue[tail++] = static_cast<std::uint8_t>(start);
        start = i;
      }
      p.cell_of[order[i]] = static_cast<std::uint8_t>(start);
    }
    p.end[start] = static_cast<std::uint8_t>(n_);
    queue[tail++] = static_cast<std::uint8_t>(start);
    p.cells = tail;
    refine(p, queue, tail);
    return p;
  }

  // `queue` is a ring buffer; at most one entry per cell is pending at a time.
  // Splits every cell by the number of neighbours its members have in each
  // splitter cell until the partition is equitable.
  void refine(Partition& p, std::array<std::uint8_t, 2 * kMaxVertices>& queue, int tail) {
    std::array<bool, kMaxVertices> queued{};
    for (int i = 0; i < tail; ++i) queued[queue[i]] = true;
    int head = 0;
    std::array<std::pair<int, int>, kMaxVertices> keyed{};

    while (head < tail && !p.discrete()) {
      const int w = queue[head++ & 0xff];
      queued[w] = false;
      VertexSet mask;
      for (int i = w; i < p.end[w]; ++i) mask.set(p.elems[i]);

      for (int start = 0; start < n_;) {
        const int stop = p.end[start];
        const int len = stop - start;
        if (len == 1) {
          start = stop;
          continue;
        }
        bool uniform = true;
        for (int i = 0; i < len; ++i) {
          const int v = p.elems[start + i];
          keyed[i] = {g_.neighbors(v).count_and(mask), v};
          if (keyed[i].first != keyed[0].first) uniform = false;
        }
        if (uniform) {
          start = stop;
          continue;
        }
        std::sort(keyed.begin(), keyed.begin() + len);

        const bool was_queued = queued[start];
        int largest_start = start;
        int largest_len = 0;
        for (int i = 0, frag = start; i < len; ++i) {
          p.elems[start + i] = static_cast<std::uint8_t>(keyed[i].second);
          if (i + 1 == len || keyed[i + 1].first != keyed[i].first) {
            const int frag_end = start + i + 1;
            p.end[frag] = static_cast<std::uint8_t>(frag_end);
            for (int j = frag; j < frag_end; ++j) p.cell_of[p.elems[j]] = static_cast<std::uint8_t>(frag);
            if (frag != start) ++p.cells;
            if (frag_end - frag > largest_len) {
              largest_len = frag_end - frag;
              largest_start = frag;
            }
            frag = frag_end;
          }
        }
        for (int frag = start; frag < stop; frag = p.end[frag]) {
          const bool push = was_queued ? frag != start : frag != largest_start;
          if (push && !queued[frag]) {
            queue[tail++ & 0xff] = static_cast<std::uint8_t>(frag);
            queued[frag] = true;
          }
        }
        start = stop;
      }
    }
  }

  void individualize(Partition& p, int v) {
    const int start = p.cell_of[v];
    const int stop = p.end[start];
    if (stop - start == 1) return;
    int pos = start;
    while (p.elems[pos] != v) ++pos;
    std::swap(p.elems[pos], p.elems[start]);
    p.end[start] = static_cast<std::uint8_t>(start + 1);
    p.end[start + 1] = static_cast<std::uint8_t>(stop);
    for (int i = start + 1; i < stop; ++i) p.cell_of[p.elems[i]] = static_cast<std::uint8_t>(start + 1);
    ++p.cells;
    std::array<std::uint8_t, 2 * kMaxVertices> queue{};
    queue[0] = static_cast<std::uint8_t>(start);
    refine(p, queue, 1);
  }

  static int target_cell(const Partition& p) {
    int best = -1;
    int best_size = kMaxVertices + 1;
    for (int s = 0; s < p.n; s = p.end[s]) {
      const int sz = p.size(s);
      if (sz > 1 && sz < best_size) {
        best = s;
        best_size = sz;
      }
    }
    return best;
  }

  static std::vector<int> cell_members(const Partition& p, int start) {
    std::vector<int> out(p.elems.begin() + start, p.elems.begin() + p.end[start]);
    std::sort(out.begin(), out.end());
    return out;
  }

  // ---- automorphism bookkeeping -------------------------------------------

  UnionFind orbits_fixing(const std::vector<int>& prefix) const {
    UnionFind uf(n_);
    for (const Permutation& gen : gens_) {
      bool fixes = true;
      for (int b : prefix) fixes = fixes && gen(b) == b;
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) uf.unite(v, gen(v));
    }
    return uf;
  }

  bool try_leaf_automorphism(const Partition& from, const Partition& to) {
    std::vector<int> img(n_);
    for (int i = 0; i < n_; ++i) img[from.elems[i]] = to.elems[i];
    Permutation p(std::move(img));
    if (!g_.is_automorphism(p)) return false;
    if (!p.is_identity()) gens_.push_back(std::move(p));
    return true;
  }

  // ---- group order along the first path --------------------------------------

  void build_first_path(const Partition& root) {
    Partition p = root;
    for (;;) {
      path_.push_back(p);
      if (p.discrete()) break;
      const int t = target_cell(p);
      targets_.push_back(t);
      const int v = cell_members(p, t).front();
      base_.push_back(v);
      individualize(p, v);
    }
  }

  BigInt resolve_first_path_levels() {
    BigInt order = 1;
    const Partition& leaf = path_.back();
    for (int level = static_cast<int>(base_.size()) - 1; level >= 0; --level) {
      std::vector<int> prefix(base_.begin(), base_.begin() + level);
      const int v = base_[level];
      std::vector<int> explored{v};
      for (int w : cell_members(path_[level], targets_[level])) {
        if (w == v) continue;
        UnionFind uf = orbits_fixing(prefix);
        const bool covered = std::any_of(explored.begin(), explored.end(),
                                         [&](int e) { return uf.find(e) == uf.find(w); });
        if (covered) continue;
        Partition child = path_[level];
        individualize(child, w);
        std::vector<int> child_prefix = prefix;
        child_prefix.push_back(w);
        if (!find_equivalent_leaf(child, level + 1, child_prefix, leaf)) explored.push_back(w);
      }
      UnionFind uf = orbits_fixing(prefix);
      int orbit = 0;
      for (int w : cell_members(path_[level], targets_[level])) {
        if (uf.find(w) == uf.find(v)) ++orbit;
      }
      order *= orbit;
    }
    return order;
  }

  // Looks for a leaf below `p` equivalent to the first leaf; records the
  // automorphism when one is found.
  bool find_equivalent_leaf(const Partition& p, int depth, std::vector<int>& prefix,
                            const Partition& leaf) {
    if (depth >= static_cast<int>(path_.size()) || !same_shape(p, path_[depth])) return false;
    if (p.discrete()) return try_leaf_automorphism(leaf, p);
    const int t = targets_[depth];
    std::vector<int> explored;
    for (int u : cell_members(p, t)) {
      if (!explored.empty()) {
        UnionFind uf = orbits_fixing(prefix);
        const bool covered = std::any_of(explored.begin(), explored.end(),
                                         [&](int e) { return uf.find(e) == uf.find(u); });
        if (covered) continue;
      }
      Partition child = p;
      individualize(child, u);
      prefix.push_back(u);
      const bool found = find_equivalent_leaf(child, depth + 1, prefix, leaf);
      prefix.pop_back();
      if (found) return true;
      explored.push_back(u);
    }
    return false;
  }

  // ---- canonical form ---------------------------------------------------------

  std::vector<VertexSet> leaf_rows(const Partition& p) const {
    std::array<int, kMaxVertices> pos{};
    for (int i = 0; i < n_; ++i) pos[p.elems[i]] = i;
    std::vector<VertexSet> rows(n_);
    for (int i = 0; i < n_; ++i) {
      g_.neighbors(p.elems[i]).for_each([&](int u) { rows[i].set(pos[u]); });
    }
    return rows;
  }

  void canonical_search(const Partition& p, std::vector<int>& prefix) {
    if (p.discrete()) {
      std::vector<VertexSet> rows = leaf_rows(p);
      if (best_rows_.empty() || rows < best_rows_) {
        best_rows_ = std::move(rows);
        best_elems_.assign(p.elems.begin(), p.elems.begin() + n_);
        best_leaf_ = p;
      } else if (rows == best_rows_) {
        try_leaf_automorphism(best_leaf_, p);
      }
      return;
    }
    const int t = target_cell(p);
    std::vector<int> explored;
    for (int u : cell_members(p, t)) {
      if (!explored.empty()) {
        UnionFind uf = orbits_fixing(prefix);
        const bool covered = std::any_of(explored.begin(), explored.end(),
                                         [&](int e) { return uf.find(e) == uf.find(u); });
        if (covered) continue;
      }
      Partition child = p;
      individualize(child, u);
      prefix.push_back(u);
      canonical_search(child, prefix);
      prefix.pop_back();
      explored.push_back(u);
    }
  }

  std::vector<std::uint8_t> encode_certificate(const std::vector<VertexSet>& rows) const {
    std::vector<std::uint8_t> out;
    out.push_back(static_cast<std::uint8_t>(n_ & 0xff));
    out.push_back(static_cast<std::uint8_t>(n_ >> 8));
    std::vector<int> colors(g_.colors());
    std::sort(colors.begin(), colors.end());
    for (int c : colors) {
      for (int shift = 0; shift < 32; shift += 8) out.push_back(static_cast<std::uint8_t>(c >> shift));
    }
    std::uint8_t acc = 0;
    int nbits = 0;
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) {
        acc = static_cast<std::uint8_t>((acc << 1) | (rows[i].test(j) ? 1 : 0));
        if (++nbits == 8) {
          out.push_back(acc);
          acc = 0;
          nbits = 0;
        }
      }
    }
    if (nbits > 0) out.push_back(static_cast<std::uint8_t>(acc << (8 - nbits)));
    return out;
  }

  const ColoredGraph& g_;
  int n_;
  std::vector<Permutation> gens_;
  std::vector<Partition> path_;
  std::vector<int> targets_;
  std::vector<int> base_;
  std::vector<VertexSet> best_rows_;
  std::vector<int> best_elems_;
  Partition best_leaf_;
};

// ---- Schreier-Sims ----------------------------------------------------------

class StabilizerChain {
 public:
  explicit StabilizerChain(int degree) : degree_(degree) {}

  BigInt build(std::vector<Permutation> gens) {
    for (Permutation& s : gens) {
      if (!s.is_identity()) add_generator(std::move(s));
    }
    for (std::size_t i = 0; i < base_.size(); ++i) rebuild_level(i);

    int i = static_cast<int>(base_.size()) - 1;
    while (i >= 0) {
      bool clean = true;
      const std::vector<int> orbit = orbit_points(i);
      for (int beta : orbit) {
        for (const Permutation& x : level_generators(i)) {
          const int image = x(beta);
          // h = u_{x(beta)}^{-1} x u_beta fixes base_[i].
          Permutation h = transversal_[i][image]->inverse().after(x.after(*transversal_[i][beta]));
          if (h.is_identity()) continue;
          auto [residue, level] = strip(h, i + 1);
          if (level < static_cast<int>(base_.size()) || !residue.is_identity()) {
            const int j = level;
            add_generator(std::move(residue));
            for (int l = i + 1; l < static_cast<int>(base_.size()); ++l) rebuild_level(l);
            i = std::min<int>(j, static_cast<int>(base_.size()) - 1);
            clean = false;
            break;
          }
        }
        if (!clean) break;
      }
      if (clean) --i;
    }

    BigInt order = 1;
    for (std::size_t l = 0; l < base_.size(); ++l) order *= static_cast<int>(orbit_points(l).size());
    return order;
  }

 private:
  void add_generator(Permutation s) {
    bool moves_base = false;
    for (int b : base_) moves_base = moves_base || s(b) != b;
    if (!moves_base) {
      for (int p = 0; p < degree_; ++p) {
        if (s(p) != p) {
          base_.push_back(p);
          transversal_.emplace_back();
          break;
        }
      }
    }
    strong_.push_back(std::move(s));
  }

  std::vector<Permutation> level_generators(std::size_t level) const {
    std::vector<Permutation> out;
    for (const Permutation& s : strong_) {
      bool fixes = true;
      for (std::size_t b = 0; b < level; ++b) fixes = fixes && s(base_[b]) == base_[b];
      if (fixes) out.push_back(s);
    }
    return out;
  }

  void rebuild_level(std::size_t level) {
    auto& t = transversal_[level];
    t.assign(degree_, std::nullopt);
    const int b = base_[level];
    t[b] = Permutation::identity(degree_);
    std::vector<int> queue{b};
    const std::vector<Permutation> gens = level_generators(level);
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const int pt = queue[q];
      for (const Permutation& x : gens) {
        const int img = x(pt);
        if (!t[img]) {
          t[img] = x.after(*t[pt]);
          queue.push_back(img);
        }
      }
    }
  }

  std::vector<int> orbit_points(std::size_t level) const {
    std::vector<int> out;
    for (int p = 0; p < degree_; ++p) {
      if (transversal_[level][p]) out.push_back(p);
    }
    return out;
  }

  std::pair<Permutation, int> strip(Permutation g, std::size_t from) const {
    for (std::size_t l = from; l < base_.size(); ++l) {
      const int beta = g(base_[l]);
      if (!transversal_[l][beta]) return {std::move(g), static_cast<int>(l)};
      g = transversal_[l][beta]->inverse().after(g);
    }
    return {std::move(g), static_cast<int>(base_.size())};
  }

  int degree_;
  std::vector<int> base_;
  std::vector<Permutation> strong_;
  std::vector<std::vector<std::optional<Permutation>>> transversal_;
};

}  // namespace

AutomorphismReport analyze(const ColoredGraph& g, const AnalyzeOptions& options) {
  Engine engine(g);
  return engine.run(options);
}

std::optional<Permutation> is_isomorphic(const ColoredGraph& g1, const ColoredGraph& g2) {
  if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count()) {
    return std::nullopt;
  }
  std::vector<int> c1 = g1.colors();
  std::vector<int> c2 = g2.colors();
  std::sort(c1.begin(), c1.end());
  std::sort(c2.begin(), c2.end());
  if (c1 != c2) return std::nullopt;

  const AutomorphismReport r1 = analyze(g1);
  const AutomorphismReport r2 = analyze(g2);
  if (r1.canonical_certificate != r2.canonical_certificate) return std::nullopt;

  Permutation witness = r2.canonical_map.inverse().after(r1.canonical_map);
  if (g1.relabeled(witness) != g2) {
    throw std::logic_error("canonical forms agree but the induced map is not an isomorphism");
  }
  return witness;
}

BigInt brute_force_aut_order(const ColoredGraph& g) {
  const int n = g.vertex_count();
  if (n > 16) throw CapExceeded("brute_force_aut_order supports at most 16 vertices");
  if (n == 0) return 1;

  // allowed[d][v]: images still possible for v once vertices 0..d-1 are mapped.
  std::array<std::array<std::uint32_t, 16>, 17> allowed{};
  for (int v = 0; v < n; ++v) {
    for (int w = 0; w < n; ++w) {
      if (g.color(w) == g.color(v)) allowed[0][v] |= 1u << w;
    }
  }
  std::array<std::uint32_t, 16> nb{};
  for (int v = 0; v < n; ++v) nb[v] = static_cast<std::uint32_t>(g.neighbors(v).words[0]);
  const std::uint32_t all = (1u << n) - 1;

  std::uint64_t count = 0;
  // Whether the vertices of `set` are pairwise all adjacent (1), all
  // non-adjacent (0), or mixed (-1).
  auto uniformity = [&](std::uint32_t set) {
    int kind = -2;
    for (std::uint32_t b = set; b != 0; b &= b - 1) {
      const int u = std::countr_zero(b);
      const std::uint32_t inside = nb[u] & set;
      const int k = inside == 0 ? 0 : inside == (set & ~(1u << u)) ? 1 : -1;
      if (k == -1 || (kind != -2 && k != kind)) return -1;
      kind = k;
    }
    return kind;
  };
  std::array<BigInt, 17> factorial;
  factorial[0] = 1;
  for (int k = 1; k <= 16; ++k) factorial[k] = factorial[k - 1] * k;

  BigInt shortcut = 0;
  auto recurse = [&](auto&& self, int v) -> void {
    std::uint32_t cand = allowed[v][v];
    // When the unmapped vertices share one candidate set of the same size and
    // both sides induce the same complete or empty graph, every bijection works.
    if (v + 1 < n) {
      bool same = std::popcount(cand) == n - v;
      for (int u = v + 1; u < n && same; ++u) same = allowed[v][u] == cand;
      if (same) {
        const std::uint32_t rest = (all >> v) << v;
        const int a = uniformity(rest);
        if (a != -1 && a == uniformity(cand)) {
          shortcut += factorial[n - v];
          return;
        }
      }
    }
    if (v == n - 1) {
      count += std::popcount(cand);
      return;
    }
    for (; cand != 0; cand &= cand - 1) {
      const int w = std::countr_zero(cand);
      bool dead = false;
      for (int u = v + 1; u < n && !dead; ++u) {
        const std::uint32_t keep = g.adjacent(v, u) ? nb[w] : (all & ~nb[w]);
        allowed[v + 1][u] = allowed[v][u] & keep & ~(1u << w);
        dead = allowed[v + 1][u] == 0;
      }
      if (!dead) self(self, v + 1);
    }
  };
  recurse(recurse, 0);
  return BigInt(count) + shortcut;
}

BigInt group_order_from_generators(std::span<const Permutation> generators) {
  if (generators.empty()) return 1;
  const int degree = generators.front().degree();
  for (const Permutation& p : generators) {
    if (p.degree() != degree) throw DomainError("generators have different degrees");
  }
  StabilizerChain chain(degree);
  return chain.build(std::vector<Permutation>(generators.begin(), generators.end()));
}

std::vector<int> orbit_partition(std::span<const Permutation> generators, int degree) {
  UnionFind uf(degree);
  for (const Permutation& p : generators) {
    if (p.degree() != degree) throw DomainError("generator degree mismatch");
    for (int v = 0; v < degree; ++v) uf.unite(v, p(v));
  }
  std::vector<int> out(degree);
  for (int v = 0; v < degree; ++v) out[v] = uf.find(v);
  return out;
}

}  // namespace circstab
