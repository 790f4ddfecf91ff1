#include <gtest/gtest.h>

#include <random>

#include "circstab/zmod.hpp"

using namespace circstab;

namespace {

ResidueSet set_of(int n, std::vector<int> v) { return ResidueSet::from_values(n, v); }

}  // namespace

TEST(Units, SmallModuli) {
  EXPECT_EQ(units(8), set_of(8, {1, 3, 5, 7}));
  EXPECT_EQ(units(2), set_of(2, {1}));
  EXPECT_EQ(units(10), set_of(10, {1, 3, 7, 9}));
  EXPECT_EQ(units(1).size(), 1);
}

TEST(Units, MatchesGcd) {
  for (int n = 1; n <= kMaxModulus; ++n) {
    const ResidueSet u = units(n);
    for (int x = 0; x < n; ++x) EXPECT_EQ(u.contains(x), std::gcd(x, n) == 1 || n == 1) << n << " " << x;
  }
}

TEST(Subgroups, CountsAndOrder) {
  const auto s12 = subgroups(12);
  ASSERT_EQ(s12.size(), 6u);
  std::vector<int> gens;
  for (const auto& h : s12) gens.push_back(h.generator());
  EXPECT_EQ(gens, (std::vector<int>{12, 6, 4, 3, 2, 1}));
  const auto s1 = subgroups(1);
  ASSERT_EQ(s1.size(), 1u);
  EXPECT_TRUE(s1[0].is_trivial());
  EXPECT_EQ(subgroups(10).size(), 4u);
}

TEST(Subgroups, ClosedUnderAdditionAndNegation) {
  for (int n = 1; n <= kMaxModulus; ++n) {
    int previous_order = 0;
    for (const Subgroup& h : subgroups(n)) {
      EXPECT_GT(h.order(), previous_order);
      previous_order = h.order();
      const ResidueSet m = h.members();
      EXPECT_EQ(m.size(), h.order());
      m.for_each([&](int a) {
        EXPECT_TRUE(m.contains((n - a) % n));
        m.for_each([&](int b) { EXPECT_TRUE(m.contains((a + b) % n)); });
      });
    }
  }
}

TEST(TranslateSet, Examples) {
  EXPECT_EQ(translate_set(set_of(8, {2, 6}), Residue(4, 8)), set_of(8, {2, 6}));
  EXPECT_TRUE(translate_set(ResidueSet(9), 4).empty());
  EXPECT_EQ(translate_set(set_of(10, {1, 2, 8, 9}), Residue(5, 10)), set_of(10, {6, 7, 3, 4}));
}

TEST(TranslateSet, ModulusMismatchThrows) {
  EXPECT_THROW(translate_set(set_of(8, {1}), Residue(1, 10)), DomainError);
  EXPECT_THROW(scale_set(set_of(8, {1}), Residue(3, 10)), DomainError);
}

TEST(TranslateSet, InverseTranslationRestores) {
  std::mt19937_64 rng(7);
  for (int n = 1; n <= kMaxModulus; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      const ResidueSet a(n, rng() & modulus_mask(n));
      const int h = static_cast<int>(rng() % n);
      EXPECT_EQ(translate_set(translate_set(a, h), (n - h) % n), a);
    }
  }
}

TEST(ScaleSet, Examples) {
  EXPECT_EQ(scale_set(set_of(10, {1, 2, 8, 9}), Residue(3, 10)), set_of(10, {3, 6, 4, 7}));
  const ResidueSet a = set_of(12, {1, 5, 6});
  EXPECT_EQ(scale_set(a, 1), a);
  EXPECT_EQ(scale_set(set_of(8, {2, 6}), Residue(3, 8)), set_of(8, {6, 2}));
}

TEST(ScaleSet, UnitsPreserveSizeAndCompose) {
  std::mt19937_64 rng(11);
  for (int n = 2; n <= kMaxModulus; ++n) {
    const std::vector<int> u = units(n).values();
    for (int trial = 0; trial < 10; ++trial) {
      const ResidueSet a(n, rng() & modulus_mask(n));
      const int m1 = u[rng() % u.size()];
      const int m2 = u[rng() % u.size()];
      EXPECT_EQ(scale_set(a, m1).size(), a.size());
      EXPECT_EQ(scale_set(a, m1 * m2 % n), scale_set(scale_set(a, m2), m1));
      EXPECT_EQ(Multiplier(n, m1).apply(a.bits()), scale_set(a, m1).bits());
    }
  }
}

TEST(MultiplicativeOrder, Examples) {
  EXPECT_EQ(multiplicative_order(Residue(3, 8)), 2);
  EXPECT_EQ(multiplicative_order(Residue(1, 17)), 1);
  EXPECT_EQ(multiplicative_order(Residue(3, 10)), 4);
  EXPECT_THROW(multiplicative_order(Residue(2, 10)), DomainError);
}

TEST(TranslationStabilizer, IsLargestInvariantSubgroup) {
  std::mt19937_64 rng(3);
  for (int n = 1; n <= 40; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      const ResidueSet a(n, rng() & modulus_mask(n));
      const Subgroup st = translation_stabilizer(a);
      for (int h = 0; h < n; ++h) EXPECT_EQ(translate_set(a, h) == a, st.contains(h));
    }
  }
}

TEST(Arithmetic, PrimesAndSquareFree) {
  std::vector<int> primes;
  for (int n = 1; n <= 50; ++n) {
    if (is_prime(n)) primes.push_back(n);
  }
  EXPECT_EQ(primes, (std::vector<int>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}));
  std::vector<int> no_ci;
  for (int n = 1; n <= 50; ++n) {
    if (!has_ci_guarantee(n)) no_ci.push_back(n);
  }
  EXPECT_EQ(no_ci, (std::vector<int>{8, 9, 16, 18, 24, 25, 27, 32, 36, 40, 45, 48, 49, 50}));
}

TEST(Cap, RejectsLargeModuli) {
  EXPECT_THROW(ResidueSet(kMaxModulus + 1), CapExceeded);
  EXPECT_THROW(ResidueSet(0), DomainError);
}
