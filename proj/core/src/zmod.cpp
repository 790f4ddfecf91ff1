#include "circstab/zmod.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace circstab {

namespace {

int read_cap_from_env() {
  const char* raw = std::getenv("CIRC_CAP");
  if (raw == nullptr || *raw == '\0') return kMaxModulus;
  char* end = nullptr;
  long v = std::strtol(raw, &end, 10);
  if (end == raw || *end != '\0' || v < 1) return kMaxModulus;
  return static_cast<int>(std::min<long>(v, kMaxModulus));
}

void require_same_modulus(const ResidueSet& a, const ResidueSet& b) {
  if (a.modulus() != b.modulus()) {
    throw DomainError("residue sets have different moduli (" +
                      std::to_string(a.modulus()) + " vs " +
                      std::to_string(b.modulus()) + ")");
  }
}

}  // namespace

int modulus_cap() {
  static const int cap = read_cap_from_env();
  return cap;
}

void require_modulus(int n) {
  if (n < 1) throw DomainError("modulus must be positive, got " + std::to_string(n));
  if (n > modulus_cap()) {
    throw CapExceeded("order " + std::to_string(n) + " exceeds the cap " +
                      std::to_string(modulus_cap()));
  }
}

Residue::Residue(int v, int n) : value(0), modulus(n) {
  require_modulus(n);
  value = mod(v, n);
}

ResidueSet::ResidueSet(int modulus, std::uint64_t bits) : modulus_(modulus), bits_(bits) {
  require_modulus(modulus);
  if ((bits & ~modulus_mask(modulus)) != 0) {
    throw DomainError("residue set has bits outside Z_" + std::to_string(modulus));
  }
}

ResidueSet ResidueSet::from_values(int modulus, const std::vector<int>& values) {
  ResidueSet s(modulus);
  for (int v : values) s.insert(mod(v, modulus));
  return s;
}

ResidueSet ResidueSet::full(int modulus) { return ResidueSet(modulus, modulus_mask(modulus)); }

std::vector<int> ResidueSet::values() const {
  std::vector<int> out;
  out.reserve(size());
  for_each([&](int x) { out.push_back(x); });
  return out;
}

bool ResidueSet::is_subset_of(const ResidueSet& other) const {
  require_same_modulus(*this, other);
  return (bits_ & ~other.bits_) == 0;
}

ResidueSet ResidueSet::operator|(const ResidueSet& o) const {
  require_same_modulus(*this, o);
  return ResidueSet(modulus_, bits_ | o.bits_);
}

ResidueSet ResidueSet::operator&(const ResidueSet& o) const {
  require_same_modulus(*this, o);
  return ResidueSet(modulus_, bits_ & o.bits_);
}

ResidueSet ResidueSet::operator-(const ResidueSet& o) const {
  require_same_modulus(*this, o);
  return ResidueSet(modulus_, bits_ & ~o.bits_);
}

ResidueSet ResidueSet::complement() const {
  return ResidueSet(modulus_, ~bits_ & modulus_mask(modulus_));
}

std::string ResidueSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for_each([&](int x) {
    if (!first) os << ',';
    os << x;
    first = false;
  });
  os << '}';
  return os.str();
}

Subgroup::Subgroup(int modulus, int generator) : modulus_(modulus), generator_(generator) {
  require_modulus(modulus);
  if (generator < 1 || modulus % generator != 0) {
    throw DomainError("subgroup generator " + std::to_string(generator) +
                      " does not divide " + std::to_string(modulus));
  }
}

ResidueSet Subgroup::members() const {
  ResidueSet s(modulus_);
  for (int x = 0; x < modulus_; x += generator_) s.insert(x);
  return s;
}

Subgroup subgroup_generated_by(int x, int n) {
  return Subgroup(n, std::gcd(mod(x, n), n));
}

ResidueSet units(int n) {
  ResidueSet s(n);
  for (int x = 0; x < n; ++x) {
    if (std::gcd(x, n) == 1) s.insert(x);
  }
  return s;
}

std::vector<Subgroup> subgroups(int n) {
  require_modulus(n);
  std::vector<Subgroup> out;
  // Larger generator means smaller order.
  for (int d = n; d >= 1; --d) {
    if (n % d == 0) out.emplace_back(n, d);
  }
  return out;
}

ResidueSet translate_set(const ResidueSet& a, int h) {
  const int n = a.modulus();
  h = mod(h, n);
  if (h == 0 || a.empty()) return a;
  const std::uint64_t mask = modulus_mask(n);
  const std::uint64_t b = a.bits();
  return ResidueSet(n, ((b << h) | (b >> (n - h))) & mask);
}

ResidueSet translate_set(const ResidueSet& a, const Residue& h) {
  if (h.modulus != a.modulus()) throw DomainError("translate_set: modulus mismatch");
  return translate_set(a, h.value);
}

ResidueSet scale_set(const ResidueSet& a, int m) {
  const int n = a.modulus();
  ResidueSet out(n);
  a.for_each([&](int x) { out.insert(mod(static_cast<long long>(m) * x, n)); });
  return out;
}

ResidueSet scale_set(const ResidueSet& a, const Residue& m) {
  if (m.modulus != a.modulus()) throw DomainError("scale_set: modulus mismatch");
  return scale_set(a, m.value);
}

ResidueSet add_subgroup(const ResidueSet& a, const Subgroup& h) {
  if (h.modulus() != a.modulus()) throw DomainError("add_subgroup: modulus mismatch");
  ResidueSet out(a.modulus());
  for (int x = 0; x < a.modulus(); x += h.generator()) out = out | translate_set(a, x);
  return out;
}

Subgroup translation_stabilizer(const ResidueSet& a) {
  const int n = a.modulus();
  for (int d = 1; d < n; ++d) {
    if (n % d == 0 && translate_set(a, d) == a) return Subgroup(n, d);
  }
  return Subgroup(n, n);
}

int multiplicative_order(const Residue& m) {
  const int n = m.modulus;
  if (std::gcd(m.value, n) != 1) {
    throw DomainError(std::to_string(m.value) + " is not a unit mod " + std::to_string(n));
  }
  if (n == 1) return 1;
  int k = 1;
  long long x = m.value;
  while (x % n != 1) {
    x = (x * m.value) % n;
    ++k;
  }
  return k;
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_square_free(int n) {
  for (int d = 2; d * d <= n; ++d) {
    if (n % (d * d) == 0) return false;
  }
  return n >= 1;
}

bool has_ci_guarantee(int n) {
  return is_square_free(n) || (n % 2 == 0 && is_square_free(n / 2));
}

Multiplier::Multiplier(int modulus, int m) : n_(modulus), m_(mod(m, modulus)), table_(8) {
  require_modulus(modulus);
  for (int byte = 0; byte < 8; ++byte) {
    for (int v = 0; v < 256; ++v) {
      std::uint64_t out = 0;
      for (int bit = 0; bit < 8; ++bit) {
        const int x = byte * 8 + bit;
        if (((v >> bit) & 1) && x < n_) {
          out |= std::uint64_t{1} << mod(static_cast<long long>(m_) * x, n_);
        }
      }
      table_[byte][v] = out;
    }
  }
}

}  // namespace circstab
