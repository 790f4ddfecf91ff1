#pragma once

// Circulants of order 2p, p an odd prime.

#include <optional>
#include <vector>

#include "circstab/conditions.hpp"

namespace circstab {

/// S = S_e u (p + m S_e) with m^2 S_e = S_e and m S_e != S_e.
struct TwoPrimeClassification {
  int p = 0;
  int m = 0;
  ResidueSet s_e;

  /// (x -> m x, x -> m x + p).
  PermPair witness() const;
  friend bool operator==(const TwoPrimeClassification&, const TwoPrimeClassification&) = default;
};

enum class TwoPrimeStatus {
  classified,
  not_classified,
  trivial_case,  ///< disconnected, bipartite or with twins; not examined
};

struct TwoPrimeResult {
  TwoPrimeStatus status = TwoPrimeStatus::not_classified;
  std::optional<TwoPrimeClassification> classification;
  std::vector<TrivialityReason> reasons;
};

/// Finds the smallest unit m giving the description above. The same m is
/// rederived through check_c4 and the two must agree (std::logic_error
/// otherwise). Throws DomainError unless n = 2p with p an odd prime.
TwoPrimeResult classify_2p(const ConnectionSet& s);

/// check_c4(S) has a hit. Throws DomainError unless n is twice a prime.
bool has_wilson_c4_2p(const ConnectionSet& s);

/// True when no nontrivially unstable circulant of order n exists: n odd,
/// n < 8, or n = 2p with p prime and p = 3 (mod 4).
bool orders_predicate(int n);

}  // namespace circstab
