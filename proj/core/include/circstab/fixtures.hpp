#pragma once

// Two parametrised families of nontrivially unstable circulants without a
// Wilson type, built from their parameters rather than listed.

#include "circstab/circulant.hpp"

namespace circstab {

/// n = 3 * 2^ell with ell >= 4 even, S = {+-3, +-6, +-n/12, n/2 +- 3}.
/// Throws DomainError for bad ell and CapExceeded when n is above the cap.
ConnectionSet val8_example(int ell);

/// The isomorphism v -> m v + rho(v) n/2 from Cay(Z_n, S) to
/// Cay(Z_n, S + n/2), m = n/6 - 1, where rho(v) is the parity of v/2 for even
/// v and of (v+1)/2 for odd v.
Permutation val8_isomorphism(int ell);

/// n = 2 p^2 with p = 1 (mod 4) prime, c^2 = -1 (mod p), a of order p:
/// S_e = (+-2 + <a>) u {+-a}, S_o = n/2 + ((+-2 + <a>) u {+-ca}).
/// Throws DomainError when the parameters do not fit.
ConnectionSet iso_translate_example(int p, int c, int a);

/// r + x -> r + c x for r in a transversal R of <a> with R + n/2 = R and x in
/// <a>; an isomorphism Cay(Z_n, S) -> Cay(Z_n, S + n/2).
Permutation iso_translate_isomorphism(int p, int c, int a);

}  // namespace circstab
