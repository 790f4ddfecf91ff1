#include "circstab/twoprime.hpp"

#include <stdexcept>

namespace circstab {

PermPair TwoPrimeClassification::witness() const {
  const int n = 2 * p;
  std::vector<int> a(n), b(n);
  for (int x = 0; x < n; ++x) {
    a[x] = m * x % n;
    b[x] = (m * x + p) % n;
  }
  return PermPair{Permutation(std::move(a)), Permutation(std::move(b))};
}

TwoPrimeResult classify_2p(const ConnectionSet& s) {
  const int n = s.order();
  const int p = n / 2;
  if (n % 2 != 0 || p % 2 == 0 || !is_prime(p)) {
    throw DomainError("classify_2p requires n = 2p with p an odd prime, got n=" + std::to_string(n));
  }
  TwoPrimeResult result;
  const CirculantGraph x{s};
  if (!is_connected(x)) result.reasons.push_back(TrivialityReason::disconnected);
  if (is_bipartite(x)) result.reasons.push_back(TrivialityReason::bipartite);
  if (!is_twin_free(x)) result.reasons.push_back(TrivialityReason::has_twins);
  if (!result.reasons.empty()) {
    result.status = TwoPrimeStatus::trivial_case;
    return result;
  }

  const ResidueSet se = s.even_part();
  for (int m : units(n).values()) {
    const ResidueSet mse = scale_set(se, m);
    if (scale_set(mse, m) != se || mse == se) continue;
    if ((se | translate_set(mse, p)) != s.members()) continue;
    result.status = TwoPrimeStatus::classified;
    result.classification = TwoPrimeClassification{p, m, se};
    break;
  }

  const std::optional<int> c4 = check_c4(s);
  const std::optional<int> mine =
      result.classification ? std::optional<int>(result.classification->m) : std::nullopt;
  if (c4 != mine) {
    throw std::logic_error("order-2p classification and C.4 disagree on " + s.to_literal());
  }
  return result;
}

bool has_wilson_c4_2p(const ConnectionSet& s) {
  const int n = s.order();
  if (n % 2 != 0 || !is_prime(n / 2)) {
    throw DomainError("has_wilson_c4_2p requires n = 2p, got n=" + std::to_string(n));
  }
  return check_c4(s).has_value();
}

bool orders_predicate(int n) {
  if (n < 1) throw DomainError("orders_predicate requires n >= 1");
  if (n % 2 != 0 || n < 8) return true;
  const int p = n / 2;
  return is_prime(p) && p % 4 == 3;
}

}  // namespace circstab
