#include "circstab/fixtures.hpp"

#include <numeric>
#include <string>

namespace circstab {

namespace {

int val8_order(int ell) {
  if (ell < 4 || ell % 2 != 0 || ell > 20) {
    throw DomainError("val8 example needs an even ell >= 4, got " + std::to_string(ell));
  }
  const int n = 3 << ell;
  require_modulus(n);
  return n;
}

int iso_order(int p, int c, int a) {
  if (!is_prime(p) || p % 4 != 1) throw DomainError("p must be a prime with p = 1 (mod 4)");
  if (mod(static_cast<long long>(c) * c + 1, p) != 0) throw DomainError("c^2 must be -1 (mod p)");
  const int n = 2 * p * p;
  require_modulus(n);
  if (mod(a, n) == 0 || n / std::gcd(mod(a, n), n) != p) throw DomainError("a must have order p");
  return n;
}

}  // namespace

ConnectionSet val8_example(int ell) {
  const int n = val8_order(ell);
  const int h = n / 2;
  ResidueSet s(n);
  for (int v : {3, -3, 6, -6, n / 12, -n / 12, h + 3, h - 3}) s.insert(mod(v, n));
  return ConnectionSet(s);
}

Permutation val8_isomorphism(int ell) {
  const int n = val8_order(ell);
  const int m = n / 6 - 1;
  std::vector<int> img(n);
  for (int v = 0; v < n; ++v) {
    const int rho = (v % 2 == 0 ? v / 2 : (v + 1) / 2) % 2;
    img[v] = mod(static_cast<long long>(m) * v + rho * (n / 2), n);
  }
  return Permutation(img);
}

ConnectionSet iso_translate_example(int p, int c, int a) {
  const int n = iso_order(p, c, a);
  ResidueSet s(n);
  for (int k = 0; k < p; ++k) {
    for (int sign : {1, -1}) {
      const int v = mod(2 * sign + k * a, n);
      s.insert(v);
      s.insert(mod(v + n / 2, n));
    }
  }
  for (int sign : {1, -1}) {
    s.insert(mod(sign * a, n));
    s.insert(mod(n / 2 + static_cast<long long>(sign) * c * a, n));
  }
  return ConnectionSet(s);
}

Permutation iso_translate_isomorphism(int p, int c, int a) {
  const int n = iso_order(p, c, a);
  // <a> = 2pZ_n and n/2 = p^2 = p (mod 2p), so {0..p-1} u (n/2 + {0..p-1})
  // is a transversal closed under +n/2.
  std::vector<int> img(n);
  for (int base : {0, n / 2}) {
    for (int r = base; r < base + p; ++r) {
      for (int k = 0; k < p; ++k) {
        const long long x = static_cast<long long>(k) * a;
        img[mod(r + x, n)] = mod(r + c * x, n);
      }
    }
  }
  return Permutation(img);
}

}  // namespace circstab
