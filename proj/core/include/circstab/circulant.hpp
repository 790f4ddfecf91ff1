#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "circstab/colored_graph.hpp"
#include "circstab/zmod.hpp"

namespace circstab {

/// A symmetric subset S of Z_n \ {0}; defines the circulant Cay(Z_n, S).
class ConnectionSet {
 public:
  /// Throws DomainError unless 0 is absent and S = -S.
  explicit ConnectionSet(ResidueSet members);
  ConnectionSet(int n, const std::vector<int>& values);

  int order() const { return members_.modulus(); }
  const ResidueSet& members() const { return members_; }
  std::uint64_t bits() const { return members_.bits(); }
  bool contains(int x) const { return members_.contains(mod(x, order())); }
  int size() const { return members_.size(); }

  /// S_e = S intersected with 2Z_n.
  ResidueSet even_part() const;
  /// S_o = S \ S_e.
  ResidueSet odd_part() const;

  /// Parses `n:s1,s2,...` (ascending distinct residues; `n:` is the empty
  /// set). Throws ParseError on malformed, non-ascending, zero, out-of-range
  /// or non-symmetric input and CapExceeded when n is above the cap.
  static ConnectionSet parse(std::string_view literal);
  std::string to_literal() const;

  friend bool operator==(const ConnectionSet&, const ConnectionSet&) = default;

 private:
  ResidueSet members_;
};

/// Mask with bit i set for every even residue i < n.
std::uint64_t even_residue_mask(int n);

/// Cay(Z_n, S): u ~ v iff v - u in S.
struct CirculantGraph {
  ConnectionSet connection;

  int order() const { return connection.order(); }
  bool adjacent(int u, int v) const { return connection.contains(v - u); }
  ColoredGraph to_colored() const;
};

inline CirculantGraph circulant(int n, const std::vector<int>& values) {
  return CirculantGraph{ConnectionSet(n, values)};
}

/// gcd test: connected iff gcd(S u {n}) = 1.
bool is_connected(const CirculantGraph& x);
/// Breadth-first search version of is_connected.
bool is_connected_bfs(const CirculantGraph& x);

/// BFS 2-colouring.
bool is_bipartite(const CirculantGraph& x);

/// No nonzero h with h + S = S.
bool is_twin_free(const CirculantGraph& x);
/// Twin-freeness straight from the definition (distinct vertices with equal
/// neighbourhoods).
bool is_twin_free_by_neighborhoods(const CirculantGraph& x);

enum class CoverLayout {
  plain,    ///< every vertex colour 0
  layered,  ///< vertex (v, i) gets colour i
};

/// Canonical bipartite double cover BX on 2n vertices; vertex (v, i) has index
/// v + i n and (v, 0) ~ (w, 1) iff v ~ w.
ColoredGraph double_cover(const CirculantGraph& x, CoverLayout layout = CoverLayout::plain);

inline int cover_vertex(int v, int layer, int n) { return v + layer * n; }

/// Cay(Z_n x Z_2, 2S' x {0}) with S' = {s in S : s + n/2 not in S}.
struct Aux2SPrime {
  ResidueSet s_prime;
  ResidueSet two_s_prime;
  /// 0 in 2S', i.e. a loop at every vertex. Recorded through the colour of
  /// every vertex (1 = looped) rather than as an edge.
  bool has_loops = false;
  ColoredGraph graph;
};

/// Throws DomainError when n is odd.
Aux2SPrime aux_2sprime_graph(const CirculantGraph& x);

/// X_e = Cay(2Z_n, S_e) transported to Z_{n/2} by 2k -> k. Throws DomainError
/// when n is odd.
CirculantGraph even_subgraph(const CirculantGraph& x);

/// Sorted eigenvalues sum_{s in S} cos(2 pi j s / n), j = 0..n-1.
std::vector<double> circulant_spectrum(const ConnectionSet& s);

/// Whether two spectra agree to within `tolerance` (necessary for isomorphism).
bool spectra_match(const std::vector<double>& a, const std::vector<double>& b,
                   double tolerance = 1e-7);

}  // namespace circstab
