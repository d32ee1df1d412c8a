#include "wreathkit/arith.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>

using namespace wreathkit;

TEST(FactorSmooth, TwelveOverThree) {
  const SmoothFactorization f = factor_smooth(12, 3);
  ASSERT_EQ(f.factors.size(), 2u);
  EXPECT_EQ(f.factors[0], (PrimePower{2, 2}));
  EXPECT_EQ(f.factors[1], (PrimePower{3, 1}));
  EXPECT_EQ(f.product(), 12);
}

TEST(FactorSmooth, UnitHasNoFactors) {
  EXPECT_TRUE(factor_smooth(1, 5).factors.empty());
  EXPECT_EQ(factor_smooth(1, 5).product(), 1);
}

TEST(FactorSmooth, RejectsLargePrime) {
  try {
    factor_smooth(10, 3);
    FAIL() << "expected NotSmooth";
  } catch (const NotSmooth& e) {
    EXPECT_EQ(e.cofactor(), 5);
  }
}

TEST(FactorSmooth, RoundTrip) {
  for (int n = 1; n <= 2000; ++n) {
    const SmoothFactorization f = factor_smooth(n, 2000);
    EXPECT_EQ(f.product(), n);
    for (std::size_t i = 1; i < f.factors.size(); ++i)
      EXPECT_LT(f.factors[i - 1].prime, f.factors[i].prime);
  }
}

TEST(FactorSmooth, LargeSmoothNumber) {
  const BigInt n = pow_int(2, 100) * pow_int(3, 40) * 61;
  const SmoothFactorization f = factor_smooth(n, 64);
  EXPECT_EQ(f.product(), n);
  EXPECT_EQ(f.factors.back(), (PrimePower{61, 1}));
}

TEST(Congruence, NormalizesResidue) {
  const Congruence c = Congruence::modulo(-1, 6);
  EXPECT_EQ(c.residue(), 5);
  EXPECT_EQ(c.modulus(), 6);
  EXPECT_TRUE(c.contains(-7));
  EXPECT_FALSE(c.contains(4));
  EXPECT_THROW(Congruence::modulo(1, 0), std::invalid_argument);
}

TEST(Congruence, ExactIsDistinctFromFinite) {
  const Congruence e = Congruence::exactly(-3);
  EXPECT_TRUE(e.is_exact());
  EXPECT_EQ(e.residue(), -3);
  EXPECT_THROW(e.modulus(), std::bad_variant_access);
  EXPECT_TRUE(e.contains(-3));
  EXPECT_FALSE(e.contains(3));
}

TEST(CrtSolve, OneModTwoTwoModThree) {
  const auto s = crt_solve({Congruence::modulo(1, 2), Congruence::modulo(2, 3)}, kDefaultBeta);
  ASSERT_TRUE(s);
  EXPECT_EQ(*s, Congruence::modulo(5, 6));
}

TEST(CrtSolve, ContradictoryParities) {
  EXPECT_FALSE(crt_solve({Congruence::modulo(0, 2), Congruence::modulo(1, 2)}, kDefaultBeta));
}

TEST(CrtSolve, EqualityWins) {
  const auto s = crt_solve({Congruence::exactly(5), Congruence::modulo(1, 2)}, kDefaultBeta);
  ASSERT_TRUE(s);
  EXPECT_EQ(*s, Congruence::exactly(5));
}

TEST(CrtSolve, EqualityConflicts) {
  EXPECT_FALSE(crt_solve({Congruence::exactly(4), Congruence::modulo(1, 2)}, kDefaultBeta));
  EXPECT_FALSE(crt_solve({Congruence::exactly(4), Congruence::exactly(5)}, kDefaultBeta));
}

TEST(CrtSolve, OverlappingPrimePowers) {
  // 3 mod 4 and 7 mod 8 agree modulo 4; the stronger constraint survives.
  const auto s = crt_solve({Congruence::modulo(3, 4), Congruence::modulo(7, 8)}, kDefaultBeta);
  ASSERT_TRUE(s);
  EXPECT_EQ(*s, Congruence::modulo(7, 8));
  EXPECT_FALSE(crt_solve({Congruence::modulo(1, 4), Congruence::modulo(7, 8)}, kDefaultBeta));
}

TEST(CrtSolve, ModulusOneIsNoConstraint) {
  const auto s = crt_solve({Congruence::modulo(0, 1)}, kDefaultBeta);
  ASSERT_TRUE(s);
  EXPECT_EQ(*s, Congruence::modulo(0, 1));
}

TEST(CrtSolve, NotSmoothPropagates) {
  EXPECT_THROW(crt_solve({Congruence::modulo(1, 67)}, kDefaultBeta), NotSmooth);
  EXPECT_NO_THROW(crt_solve({Congruence::modulo(1, 67)}, 67));
}

TEST(CrtSolve, EmptySystemRejected) {
  EXPECT_THROW(crt_solve(std::span<const Congruence>{}, kDefaultBeta), std::invalid_argument);
}

TEST(CrtSolve, AgreesWithExhaustiveSearch) {
  std::mt19937_64 rng(7);
  const std::vector<int> moduli{2, 3, 4, 6, 8, 9, 12};
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 5)(rng);
    std::vector<Congruence> sys;
    std::vector<std::pair<int, int>> raw;
    long long l = 1;
    for (int i = 0; i < n; ++i) {
      const int m = moduli[std::uniform_int_distribution<std::size_t>(0, moduli.size() - 1)(rng)];
      const int r = std::uniform_int_distribution<int>(0, m - 1)(rng);
      sys.push_back(Congruence::modulo(r, m));
      raw.emplace_back(r, m);
      l = std::lcm(l, static_cast<long long>(m));
    }
    std::optional<long long> smallest;
    for (long long x = 0; x < l && !smallest; ++x) {
      bool ok = true;
      for (const auto& [r, m] : raw) ok = ok && x % m == r;
      if (ok) smallest = x;
    }
    const auto s = crt_solve(sys, kDefaultBeta);
    ASSERT_EQ(s.has_value(), smallest.has_value());
    if (s) {
      EXPECT_EQ(s->residue(), *smallest);
      EXPECT_EQ(s->modulus(), l);
    }
  }
}

TEST(Helpers, FloorOperations) {
  EXPECT_EQ(mod_floor(-7, 3), 2);
  EXPECT_EQ(div_floor(-7, 3), -3);
  EXPECT_EQ(div_floor(7, -3), -3);
  EXPECT_EQ(div_floor(6, 3), 2);
  EXPECT_EQ(gcd(-12, 18), 6);
  EXPECT_EQ(lcm(4, 6), 12);
  EXPECT_EQ(mod_inverse(3, 7), 5);
  EXPECT_THROW(mod_inverse(2, 4), std::invalid_argument);
  EXPECT_EQ(pow_int(3, 5), 243);
}
