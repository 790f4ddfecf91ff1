#pragma once

// Automorphism groups and canonical labelling of vertex-coloured graphs by
// individualisation-refinement.
//
// Refinement is the coarsest equitable partition reached by colour-wise
// neighbour counts; the target cell is the first smallest non-singleton cell
// and its members are individualised in increasing vertex order. Automorphisms
// discovered along the way prune sibling branches through orbits of the
// generators that fix the current prefix pointwise.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "circstab/colored_graph.hpp"

namespace circstab {

using BigInt = boost::multiprecision::cpp_int;

struct AutomorphismReport {
  /// Generators of Aut(G); each one is checked against G before it is kept.
  std::vector<Permutation> generators;
  BigInt group_order = 1;
  /// Labelling-invariant encoding of G; empty unless canonical form was requested.
  std::vector<std::uint8_t> canonical_certificate;
  /// Vertex -> position in the canonical form.
  Permutation canonical_map;
};

struct AnalyzeOptions {
  /// Also compute the canonical certificate and canonical map.
  bool canonical = true;
  /// Automorphisms already known to the caller. They are verified and then
  /// used for pruning and included among the reported generators.
  std::vector<Permutation> known_automorphisms;
};

AutomorphismReport analyze(const ColoredGraph& g, const AnalyzeOptions& options = {});

inline std::vector<std::uint8_t> canonical_certificate(const ColoredGraph& g) {
  return analyze(g).canonical_certificate;
}

/// An isomorphism G1 -> G2 (vertex v of G1 goes to witness(v)) when one exists.
/// The witness is verified edge by edge before it is returned.
std::optional<Permutation> is_isomorphic(const ColoredGraph& g1, const ColoredGraph& g2);

/// Number of colour- and adjacency-preserving permutations, by backtracking.
/// Throws CapExceeded above 16 vertices.
BigInt brute_force_aut_order(const ColoredGraph& g);

/// Order of the group generated by `generators` (Schreier-Sims). Throws
/// DomainError when the degrees differ.
BigInt group_order_from_generators(std::span<const Permutation> generators);

/// Orbit index of every point under the group generated by `generators`;
/// two points share an orbit iff they get the same index.
std::vector<int> orbit_partition(std::span<const Permutation> generators, int degree);

}  // namespace circstab
