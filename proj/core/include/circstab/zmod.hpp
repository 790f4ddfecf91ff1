#pragma once

// Arithmetic in the cyclic group Z_n for n <= kMaxModulus.
//
// Residue sets are single 64-bit words indexed by value, so translation is a
// rotation and multiplication by a unit is a bit permutation.

#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "circstab/error.hpp"

namespace circstab {

inline constexpr int kMaxModulus = 64;

/// The modulus cap currently in force: kMaxModulus unless lowered through the
/// CIRC_CAP environment variable.
int modulus_cap();

/// Throws CapExceeded when n is outside [1, modulus_cap()].
void require_modulus(int n);

struct Residue {
  int value = 0;
  int modulus = 1;

  Residue() = default;
  Residue(int v, int n);

  friend bool operator==(const Residue&, const Residue&) = default;
};

/// A subset of Z_n stored as a bit mask (bit i <=> residue i).
class ResidueSet {
 public:
  ResidueSet() = default;
  explicit ResidueSet(int modulus) : modulus_(modulus) { require_modulus(modulus); }
  ResidueSet(int modulus, std::uint64_t bits);

  static ResidueSet from_values(int modulus, const std::vector<int>& values);
  static ResidueSet full(int modulus);

  int modulus() const { return modulus_; }
  std::uint64_t bits() const { return bits_; }

  bool contains(int x) const { return (bits_ >> x) & 1u; }
  bool empty() const { return bits_ == 0; }
  int size() const { return std::popcount(bits_); }

  void insert(int x) { bits_ |= std::uint64_t{1} << x; }
  void erase(int x) { bits_ &= ~(std::uint64_t{1} << x); }

  std::vector<int> values() const;

  template <class F>
  void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) f(std::countr_zero(b));
  }

  bool is_subset_of(const ResidueSet& other) const;

  ResidueSet operator|(const ResidueSet& o) const;
  ResidueSet operator&(const ResidueSet& o) const;
  /// Set difference.
  ResidueSet operator-(const ResidueSet& o) const;
  ResidueSet complement() const;

  friend bool operator==(const ResidueSet&, const ResidueSet&) = default;

  std::string to_string() const;  // "{1,2,8,9}"

 private:
  int modulus_ = 1;
  std::uint64_t bits_ = 0;
};

inline std::uint64_t modulus_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

inline int mod(long long a, int n) {
  long long r = a % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

/// The subgroup dZ_n, identified by the divisor d of n that generates it.
class Subgroup {
 public:
  Subgroup() = default;
  Subgroup(int modulus, int generator);

  int modulus() const { return modulus_; }
  int generator() const { return generator_; }
  int order() const { return modulus_ / generator_; }
  bool is_trivial() const { return generator_ == modulus_; }

  bool contains(int x) const { return mod(x, modulus_) % generator_ == 0; }
  bool is_subgroup_of(const Subgroup& other) const {
    return generator_ % other.generator_ == 0;
  }
  ResidueSet members() const;

  friend bool operator==(const Subgroup&, const Subgroup&) = default;

 private:
  int modulus_ = 1;
  int generator_ = 1;
};

/// The subgroup generated by x (i.e. gcd(x, n) Z_n).
Subgroup subgroup_generated_by(int x, int n);

ResidueSet units(int n);

/// One subgroup per divisor of n, sorted by increasing order.
std::vector<Subgroup> subgroups(int n);

/// {a + h : a in A}.
ResidueSet translate_set(const ResidueSet& a, int h);
ResidueSet translate_set(const ResidueSet& a, const Residue& h);

/// {m a : a in A}.
ResidueSet scale_set(const ResidueSet& a, int m);
ResidueSet scale_set(const ResidueSet& a, const Residue& m);

/// A + H as a set (union of the H-cosets meeting A).
ResidueSet add_subgroup(const ResidueSet& a, const Subgroup& h);

/// {h : h + A = A}; always a subgroup of Z_n.
Subgroup translation_stabilizer(const ResidueSet& a);

int multiplicative_order(const Residue& m);

bool is_prime(int n);
bool is_square_free(int n);

/// True when Muzychuk's theorem guarantees every circulant on Z_n has the
/// Cayley isomorphism property (n or n/2 square-free).
bool has_ci_guarantee(int n);

/// Multiplication by a fixed unit, precomputed as byte lookup tables so that
/// scaling a set costs eight table reads.
class Multiplier {
 public:
  Multiplier(int modulus, int m);

  int value() const { return m_; }
  int modulus() const { return n_; }
  std::uint64_t apply(std::uint64_t bits) const {
    std::uint64_t out = 0;
    for (int byte = 0; byte < 8 && bits != 0; ++byte, bits >>= 8) {
      out |= table_[byte][bits & 0xff];
    }
    return out;
  }

 private:
  int n_;
  int m_;
  std::vector<std::array<std::uint64_t, 256>> table_;
};

}  // namespace circstab
