#pragma once

// Stability verdicts for circulant graphs and the sufficient conditions for
// instability that annotate them.
//
// The verdict itself always comes from comparing |Aut BX| with 2|Aut X|. The
// condition checkers only annotate a report; every witness they emit is
// checked edge by edge before it is returned.

#include <optional>
#include <string>
#include <vector>

#include "circstab/autoeng.hpp"
#include "circstab/circulant.hpp"

namespace circstab {

enum class Verdict { stable, trivially_unstable, nontrivially_unstable };
enum class TrivialityReason { disconnected, bipartite, has_twins };

std::string to_string(Verdict v);
std::string to_string(TrivialityReason r);

/// Permutations alpha, beta of Z_n with alpha(u) ~ beta(v) for every edge uv.
struct PermPair {
  Permutation alpha;
  Permutation beta;

  friend bool operator==(const PermPair&, const PermPair&) = default;
};

/// alpha != beta and alpha(u) ~ beta(v) for every edge uv of X. Throws
/// DomainError when a permutation does not act on Z_n.
bool verify_perm_pair(const CirculantGraph& x, const PermPair& p);

/// Splits an automorphism of BX (vertex (v, i) = v + i n) into a PermPair,
/// first composing with the layer swap if g exchanges the layers. Empty when g
/// lies in Aut X x S_2. Throws DomainError when BX is disconnected or g is not
/// an automorphism of BX.
std::optional<PermPair> extract_perm_pair(const CirculantGraph& x, const Permutation& g);

// ---- Wilson types --------------------------------------------------------------

/// Smallest nonzero even h with h + S_e = S_e. With S_e empty every such h
/// works and the smallest (2) is returned. Throws DomainError for odd n.
std::optional<int> check_c1(const ConnectionSet& s);

/// Smallest odd h with 2h + S_o = S_o and s + h in S for every s in S with
/// s = 0 or -h (mod 4). Throws DomainError unless 4 | n.
std::optional<int> check_c2(const ConnectionSet& s);

struct C3Hit {
  Subgroup h;
  ResidueSet r;
  int d = 0;

  friend bool operator==(const C3Hit&, const C3Hit&) = default;
};

/// First subgroup H (by increasing order) with R = {s in S : s + H not in S}
/// nonempty, d = gcd(R u {n}), n/d even, r/d odd for r in R, and H not in dZ_n
/// or H in 2dZ_n.
std::optional<C3Hit> check_c3(const ConnectionSet& s);

/// Smallest unit m with n/2 + mS = S. Throws DomainError for odd n.
std::optional<int> check_c4(const ConnectionSet& s);

// ---- subgroup pairs (H, K) -------------------------------------------------------

struct GeneralHkHit {
  int variant = 0;  ///< 1: S + H in S u (K_o + H), H n K_o empty; 2: (S \ K_o) + H in S u K_o
  Subgroup h;
  Subgroup k;

  friend bool operator==(const GeneralHkHit&, const GeneralHkHit&) = default;
};

/// K_o = K \ 2K; requires |K| even.
ResidueSet odd_part_of_subgroup(const Subgroup& k);

/// Whether (variant, H, K) satisfies the hypotheses, including H, K != {0}
/// and |K| even.
bool general_hk_accepts(const ConnectionSet& s, int variant, const Subgroup& h, const Subgroup& k);

/// Scans H and K by increasing order, all pairs for variant 2 before any pair
/// for variant 1. Empty for odd n.
std::optional<GeneralHkHit> check_general_hk(const ConnectionSet& s);

/// The (alpha, beta) built from h = generator of H. Throws DomainError when the
/// hit is not accepted.
PermPair witness_general_hk(const ConnectionSet& s, const GeneralHkHit& hit);

// ---- X isomorphic to Cay(Z_n, S + n/2) ----------------------------------------------

enum class IsoMethod { multiplier, canonical_form };

std::string to_string(IsoMethod m);

struct IsoWitness {
  IsoMethod method = IsoMethod::multiplier;
  int multiplier = 0;  ///< the unit m when method == multiplier
  /// Isomorphism Cay(Z_n, S) -> Cay(Z_n, S + n/2).
  Permutation isomorphism;
  /// (isomorphism, isomorphism + n/2).
  PermPair pair;
};

struct IsoTranslateOptions {
  /// Run the canonical-form test after a multiplier miss even when n has the
  /// Cayley isomorphism guarantee.
  bool force_canonical = false;
};

/// Multiplier search for mS = S + n/2 first; otherwise, when n is neither
/// square-free nor twice square-free (or when forced), a spectral filter and
/// a canonical-form isomorphism test. Empty when n/2 is in S, since S + n/2
/// then contains 0. Throws DomainError for odd n.
std::optional<IsoWitness> check_iso_translate(const ConnectionSet& s,
                                              const IsoTranslateOptions& options = {});

// ---- conditions on the even subgraph ----------------------------------------------

enum class XeFamily { multiplier, even_cover };

std::string to_string(XeFamily f);

struct XeWitness {
  XeFamily family = XeFamily::multiplier;
  Subgroup h;
  /// Extension of (alpha, beta) by the identity on odd vertices.
  PermPair pair;
};

/// Checks conditions (1)-(4) for permutations alpha, beta of Z_n that fix every
/// odd vertex and a subgroup H of 2Z_n. On success the extended pair is
/// verified and written to `extended` when given. Throws DomainError when n is
/// odd, H is not in 2Z_n, or a permutation moves an odd vertex.
bool verify_xe_general(const CirculantGraph& x, const Permutation& alpha, const Permutation& beta,
                       const Subgroup& h, PermPair* extended = nullptr);

/// Smallest unit m with mS_e + n/2 = S_e and S_o + 2(m-1)Z_n = S_o + n/2 = S_o.
/// Throws DomainError unless 4 | n.
std::optional<int> check_xe_c4(const ConnectionSet& s);

/// Restricted search: pairs x -> mx, x -> mx + t on 2Z_n, then generators of
/// Aut B(X_e) with the layers fixed, lifted through k -> 2k. Each candidate is
/// tried against the subgroups of Stab(S_o) n 2Z_n by increasing order.
/// Incomplete by design. Empty for odd n.
std::optional<XeWitness> search_xe_general(const CirculantGraph& x);

// ---- reports ----------------------------------------------------------------------

struct WilsonTypes {
  std::optional<int> c1;
  std::optional<int> c2;
  std::optional<C3Hit> c3;
  std::optional<int> c4;

  bool any() const { return c1 || c2 || c3 || c4; }
  friend bool operator==(const WilsonTypes&, const WilsonTypes&) = default;
};

struct IsoTranslateHit {
  IsoMethod method = IsoMethod::multiplier;
  int multiplier = 0;

  friend bool operator==(const IsoTranslateHit&, const IsoTranslateHit&) = default;
};

struct XeGeneralHit {
  XeFamily family = XeFamily::multiplier;
  Subgroup h;

  friend bool operator==(const XeGeneralHit&, const XeGeneralHit&) = default;
};

struct NewConditions {
  std::optional<GeneralHkHit> general_hk;
  std::optional<IsoTranslateHit> iso_translate;
  std::optional<int> xe_c4;
  std::optional<XeGeneralHit> xe_general;

  bool any() const { return general_hk || iso_translate || xe_c4 || xe_general; }
  friend bool operator==(const NewConditions&, const NewConditions&) = default;
};

/// A verified PermPair together with the check that produced it
/// ("aut-bx", "C1".."C4", "general-hk", "iso-translate", "xe-c4", "xe-general").
struct Witness {
  std::string source;
  PermPair pair;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct StabilityReport {
  ConnectionSet connection{ResidueSet(1)};
  Verdict verdict = Verdict::stable;
  std::vector<TrivialityReason> triviality_reasons;
  BigInt aut_x = 1;
  BigInt aut_bx = 2;
  WilsonTypes wilson;
  NewConditions conditions;
  std::vector<Witness> witnesses;
  bool even_part_empty = false;  ///< S_e empty: C.1 and the S_e equations hold vacuously
  bool odd_part_empty = false;   ///< S_o empty: C.2(a) and the S_o equations hold vacuously
  bool aux_loops = false;        ///< n even and 0 in 2S' (equivalently n/2 in S)
  bool annotated = false;        ///< condition checkers were run
  /// Nontrivially unstable with no condition hit.
  bool unexplained = false;

  bool unstable() const { return verdict != Verdict::stable; }
  bool any_condition() const { return wilson.any() || conditions.any(); }
  friend bool operator==(const StabilityReport&, const StabilityReport&) = default;
};

struct VerdictOptions {
  /// Run the condition checkers (for even n) and collect their witnesses.
  bool annotate = true;
  IsoTranslateOptions iso;
};

/// Throws CapExceeded when 2n exceeds the engine's vertex cap.
StabilityReport stability_verdict(const CirculantGraph& x, const VerdictOptions& options = {});

/// The checkers alone, filling wilson, conditions, witnesses and the vacuity
/// flags of `report`.
void annotate_conditions(const CirculantGraph& x, StabilityReport& report,
                         const IsoTranslateOptions& iso = {});

/// |Aut X| with the rotation and negation as seeds.
AutomorphismReport circulant_automorphisms(const CirculantGraph& x);

/// Aut BX computed directly on the uncoloured cover (for cross-checks).
BigInt double_cover_order_plain(const CirculantGraph& x);

}  // namespace circstab
