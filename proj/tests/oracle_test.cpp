#include "wreathkit/wreathkit.hpp"
#include "wreathkit/selftest.hpp"

#include <gtest/gtest.h>

using namespace wreathkit;

namespace {

Element n(long long v) { return Element({BigInt(v)}); }

WreathElement lamps(long long top, std::initializer_list<long long> keys) {
  WreathElement x{n(top), {}};
  for (long long k : keys) x.support.emplace_back(n(k), n(1));
  return x;
}

}  // namespace

TEST(Ball, Sizes) {
  EXPECT_EQ(enumerate_ball(*AbelianGroup::free(1), 3).size(), 7u);
  EXPECT_EQ(enumerate_ball(*AbelianGroup::free(2), 2).size(), 13u);
  const BallIndex finite = enumerate_ball(*make_wreath(AbelianGroup::cyclic(2), AbelianGroup::cyclic(3)), 16, 16);
  EXPECT_TRUE(finite.exhausted);
  EXPECT_EQ(finite.size(), 24u);
  const BallIndex trivial = enumerate_ball(*AbelianGroup::trivial(), 4);
  EXPECT_EQ(trivial.size(), 1u);
  EXPECT_TRUE(trivial.exhausted);
  EXPECT_FALSE(enumerate_ball(*AbelianGroup::free(1), 3).exhausted);
}

TEST(Ball, WordsAreShortestAndCorrect) {
  auto G = make_wreath(AbelianGroup::cyclic(2), AbelianGroup::free(1));
  const BallIndex ball = enumerate_ball(*G, 5);
  for (const auto& [e, w] : ball.elements) {
    EXPECT_EQ(G->evaluate(w), e);
    EXPECT_LE(w.size(), 5u);
  }
  EXPECT_EQ(ball.find(G->generator(0))->size(), 1u);
  EXPECT_EQ(ball.find(G->identity())->size(), 0u);
  // a t a t^-1 needs four letters.
  EXPECT_EQ(ball.find(G->evaluate(Word{{0, 1}, {1, 1}, {0, 1}, {1, -1}}))->size(), 4u);
}

TEST(Ball, CapExceeded) {
  EXPECT_THROW(enumerate_ball(*AbelianGroup::free(1), 9), CapExceeded);
  EXPECT_NO_THROW(enumerate_ball(*AbelianGroup::free(1), 9, 9));
  EXPECT_THROW(enumerate_ball(*AbelianGroup::free(1), -1), std::invalid_argument);
}

TEST(BruteConjugacy, Examples) {
  auto G = make_wreath(AbelianGroup::cyclic(2), AbelianGroup::free(1));
  const Element at = G->evaluate(Word{{0, 1}, {1, 1}});
  const Element ta = G->evaluate(Word{{1, 1}, {0, 1}});
  const BruteConjugacy found = brute_cp(*G, at, ta, 2);
  ASSERT_TRUE(found.found());
  EXPECT_EQ(G->conjugate_by(at, G->evaluate(*found.conjugator)), ta);
  const BruteConjugacy missing = brute_cp(*G, G->generator(1), at, 4);
  EXPECT_FALSE(missing.found());
  EXPECT_FALSE(missing.definitive);
}

TEST(BruteConjugacy, FarConjugatorNeedsLargerBall) {
  auto G = make_wreath(AbelianGroup::cyclic(2), AbelianGroup::free(1));
  // Two lamps three apart, against the same pair shifted by four steps.
  const Element x = G->from_wreath(lamps(0, {0, 3}));
  const Element y = G->from_wreath(lamps(0, {4, 7}));
  EXPECT_FALSE(brute_cp(*G, x, y, 3).found());
  EXPECT_TRUE(brute_cp(*G, x, y, 4).found());
  EXPECT_TRUE(brute_cp(*G, x, y, 12, 12).found());
}

TEST(BruteConjugacy, DefinitiveOnFiniteGroups) {
  auto G = make_wreath(AbelianGroup::cyclic(2), AbelianGroup::cyclic(3));
  const BruteConjugacy r = brute_cp(*G, G->generator(0), G->generator(1), 16, 16);
  EXPECT_FALSE(r.found());
  EXPECT_TRUE(r.definitive);
}

TEST(BrutePower, Examples) {
  auto z = AbelianGroup::free(1);
  EXPECT_EQ(brute_pp(*z, n(3), n(-12), 10), BigInt(-4));
  EXPECT_FALSE(brute_pp(*z, n(3), n(-12), 3));
  EXPECT_EQ(brute_pp(*z, n(3), n(0), 0), BigInt(0));
  auto z6 = AbelianGroup::cyclic(6);
  // Non-negative exponents are scanned first.
  EXPECT_EQ(brute_pp(*z6, n(1), n(5), 10), BigInt(5));
}

TEST(LamplighterOracle, Examples) {
  auto A = AbelianGroup::cyclic(2);
  auto B = AbelianGroup::free(1);
  EXPECT_TRUE(lamplighter_cp(*A, *B, lamps(1, {1}), lamps(1, {0})));
  EXPECT_FALSE(lamplighter_cp(*A, *B, lamps(1, {}), lamps(1, {0})));
  EXPECT_TRUE(lamplighter_cp(*A, *B, lamps(0, {1, 2}), lamps(0, {-5, -4})));
  EXPECT_FALSE(lamplighter_cp(*A, *B, lamps(0, {1, 2}), lamps(0, {1, 3})));
  EXPECT_TRUE(lamplighter_cp(*A, *B, lamps(-2, {0}), lamps(-2, {3})));
  EXPECT_FALSE(lamplighter_cp(*A, *B, lamps(2, {0}), lamps(-2, {0})));
}

TEST(LamplighterOracle, AgreesWithBruteForceInSmallBalls) {
  auto G = make_wreath(AbelianGroup::cyclic(2), AbelianGroup::free(1));
  const BallIndex ball = enumerate_ball(*G, 6);
  Rng rng(61);
  for (int i = 0; i < 300; ++i) {
    const Element x = random_element(*G, 5, rng);
    const Element y = G->conjugate_by(x, random_element(*G, 3, rng));
    EXPECT_TRUE(lamplighter_cp(G->base(), G->top(), G->to_wreath(x), G->to_wreath(y)));
    const Element u = random_element(*G, 5, rng);
    if (brute_cp(*G, ball, x, u).found())
      EXPECT_TRUE(lamplighter_cp(G->base(), G->top(), G->to_wreath(x), G->to_wreath(u)));
  }
}

TEST(LamplighterOracle, WrongGroup) {
  auto A = AbelianGroup::cyclic(3);
  auto B = AbelianGroup::free(1);
  EXPECT_THROW(lamplighter_cp(*A, *B, lamps(0, {}), lamps(0, {})), WrongGroup);
  EXPECT_THROW(lamplighter_cp(*AbelianGroup::cyclic(2), *AbelianGroup::free(2), lamps(0, {}),
                              lamps(0, {})),
               WrongGroup);
}

TEST(Oracles, ReferenceExamples) {
  EXPECT_EQ(enumerate_ball(*make_wreath(AbelianGroup::cyclic(2), AbelianGroup::cyclic(3)), 6).size(),
            24u);
  auto G = make_wreath(AbelianGroup::cyclic(2), AbelianGroup::free(1));
  const Element x = G->from_wreath(lamps(1, {0}));
  const BruteConjugacy self = brute_cp(*G, x, x, 2);
  ASSERT_TRUE(self.found());
  EXPECT_TRUE(self.conjugator->empty());
  EXPECT_TRUE(brute_cp(*G, x, G->from_wreath(lamps(1, {5})), 12, 12).found());

  auto z = AbelianGroup::free(1);
  EXPECT_EQ(brute_pp(*z, n(2), n(10), 16), BigInt(5));
  EXPECT_FALSE(brute_pp(*z, n(2), n(3), 16));
  EXPECT_EQ(brute_pp(*G, x, G->power(x, 3), 8), BigInt(3));

  const Group &A = G->base(), &B = G->top();
  EXPECT_TRUE(lamplighter_cp(A, B, lamps(1, {0}), lamps(1, {5})));
  EXPECT_TRUE(lamplighter_cp(A, B, lamps(0, {0, 1}), lamps(0, {3, 4})));
  EXPECT_FALSE(lamplighter_cp(A, B, lamps(0, {0, 1}), lamps(0, {0, 2})));
}
