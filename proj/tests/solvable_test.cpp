#include "wreathkit/wreathkit.hpp"
#include "wreathkit/selftest.hpp"

#include <gtest/gtest.h>

using namespace wreathkit;

namespace {

Word x(std::size_t i, int sign = 1) { return Word{{i, sign}}; }

// A word is trivial in the free metabelian group of rank r iff its path in the
// Cayley graph of Z^r is closed and crosses every edge equally often in both
// directions.
bool metabelian_trivial(const Word& w, std::size_t rank) {
  std::vector<long long> at(rank, 0);
  std::map<std::pair<std::vector<long long>, std::size_t>, long long> flow;
  for (const auto& l : w) {
    if (l.sign > 0) {
      ++flow[{at, l.generator}];
      ++at[l.generator];
    } else {
      --at[l.generator];
      --flow[{at, l.generator}];
    }
  }
  for (long long c : at)
    if (c != 0) return false;
  for (const auto& [edge, n] : flow)
    if (n != 0) return false;
  return true;
}

// Products of conjugated commutators, so most samples lie in the derived subgroup.
Word derived_word(const FreeSolvableGroup& S, Rng& rng) {
  Word w;
  const int parts = std::uniform_int_distribution<int>(1, 3)(rng);
  for (int i = 0; i < parts; ++i) {
    const Word u = random_word(S, 3, rng), v = random_word(S, 3, rng), c = random_word(S, 3, rng);
    w = concat(w, concat(inverse(c), concat(commutator(u, v), c)));
  }
  return w;
}

}  // namespace

TEST(FreeSolvable, DegreeOneIsFreeAbelian) {
  FreeSolvableGroup s(1, 3);
  EXPECT_TRUE(s.capabilities().is_abelian);
  EXPECT_TRUE(s.wp(s.evaluate(commutator(x(0), x(1)))));
  EXPECT_EQ(s.inner().name(), "Z^3");
  EXPECT_FALSE(s.lower());
}

TEST(FreeSolvable, Structure) {
  FreeSolvableGroup s(3, 2);
  EXPECT_EQ(s.name(), "freesolvable(3, 2)");
  EXPECT_EQ(s.alphabet(), (std::vector<std::string>{"x1", "x2"}));
  EXPECT_EQ(s.inner().name(), "wr(Z^2, freesolvable(2, 2))");
  ASSERT_TRUE(s.lower());
  EXPECT_EQ(s.lower()->degree(), 2);
  EXPECT_TRUE(s.capabilities().is_torsion_free);
  EXPECT_FALSE(s.capabilities().is_abelian);
  EXPECT_THROW(FreeSolvableGroup(0, 2), std::invalid_argument);
  EXPECT_THROW(FreeSolvableGroup(2, 0), std::invalid_argument);
}

TEST(FreeSolvable, GeneratorImages) {
  FreeSolvableGroup s(2, 2);
  EXPECT_EQ(s.render(s.generator(0)), "((1, 0); {(0, 0): (1, 0)})");
  EXPECT_EQ(s.render(s.generator(1)), "((0, 1); {(0, 0): (0, 1)})");
  EXPECT_EQ(s.magnus_embed(x(0)), s.generator(0));
}

TEST(FreeSolvable, CommutatorIsNontrivialInDegreeTwo) {
  FreeSolvableGroup s(2, 2);
  const Word c = commutator(x(0), x(1));
  EXPECT_FALSE(s.wp(s.evaluate(c)));
  // Its image has trivial top.
  const auto* inner = dynamic_cast<const WreathGroup*>(&s.inner());
  ASSERT_NE(inner, nullptr);
  const WreathElement e = inner->to_wreath(s.evaluate(c));
  EXPECT_TRUE(s.lower()->wp(e.top));
  EXPECT_FALSE(e.support.empty());
}

TEST(FreeSolvable, DerivedLengthRelators) {
  const Word c = commutator(x(0), x(1));
  const Word c2 = concat(x(1, -1), concat(c, x(1)));
  const Word cc = commutator(c, c2);
  EXPECT_TRUE(FreeSolvableGroup(2, 2).wp(FreeSolvableGroup(2, 2).evaluate(cc)));
  EXPECT_FALSE(FreeSolvableGroup(3, 2).wp(FreeSolvableGroup(3, 2).evaluate(cc)));
  const Word c3 = concat(x(0), concat(c, x(0, -1)));
  const Word ccc = commutator(cc, commutator(c3, c2));
  EXPECT_FALSE(FreeSolvableGroup(3, 2).wp(FreeSolvableGroup(3, 2).evaluate(cc)));
  EXPECT_TRUE(FreeSolvableGroup(3, 2).wp(FreeSolvableGroup(3, 2).evaluate(ccc)));
  EXPECT_FALSE(FreeSolvableGroup(4, 2).wp(FreeSolvableGroup(4, 2).evaluate(ccc)));
}

TEST(FreeSolvable, MetabelianWordProblemAgreesWithEdgeFlows) {
  Rng rng(51);
  for (std::size_t r : {2u, 3u}) {
    FreeSolvableGroup s(2, static_cast<int>(r));
    int trivial = 0;
    for (int i = 0; i < 400; ++i) {
      Word w = i % 4 == 0 ? random_word(s, 12, rng) : derived_word(s, rng);
      if (i % 4 == 1) w = concat(w, inverse(derived_word(s, rng)));
      // Commutators of derived words are trivial.
      if (i % 4 == 2) w = commutator(w, derived_word(s, rng));
      const bool expected = metabelian_trivial(w, r);
      EXPECT_EQ(s.wp(s.evaluate(w)), expected) << format_word(s, w);
      trivial += expected;
    }
    EXPECT_GT(trivial, 50);
  }
}

TEST(FreeSolvable, EmbeddingIsAHomomorphism) {
  Rng rng(52);
  FreeSolvableGroup s(3, 2);
  for (int i = 0; i < 200; ++i) {
    const Word u = random_word(s, 8, rng), v = random_word(s, 8, rng);
    EXPECT_EQ(s.magnus_embed(concat(u, v)), s.multiply(s.magnus_embed(u), s.magnus_embed(v)));
    EXPECT_EQ(s.magnus_embed(inverse(u)), s.invert(s.magnus_embed(u)));
  }
}

TEST(FreeSolvable, ConjugacyExamples) {
  FreeSolvableGroup s(2, 2);
  const Element x1 = s.generator(0), x2 = s.generator(1);
  EXPECT_FALSE(s.cp(x1, x2));
  EXPECT_TRUE(s.cp(x1, s.conjugate_by(x1, x2)));
  const Element c = s.evaluate(commutator(x(0), x(1)));
  EXPECT_TRUE(s.cp(c, s.conjugate_by(c, s.multiply(x1, x2))));
  EXPECT_FALSE(s.cp(c, s.multiply(c, c)));
  EXPECT_FALSE(s.cp(c, s.invert(c)));
  EXPECT_FALSE(s.conjugacy(x1, x1).witness);
}

TEST(FreeSolvable, ConjugatesRecognizedInDegreeThree) {
  Rng rng(53);
  FreeSolvableGroup s(3, 2);
  for (int i = 0; i < 60; ++i) {
    const Element g = s.evaluate(random_word(s, 6, rng));
    const Element h = s.conjugate_by(g, s.evaluate(random_word(s, 5, rng)));
    EXPECT_TRUE(s.cp(g, h)) << s.render(g);
  }
}

TEST(FreeSolvable, PowerProblem) {
  FreeSolvableGroup s(2, 2);
  const Element x1 = s.generator(0), x2 = s.generator(1);
  EXPECT_EQ(s.pp(x1, s.power(x1, 5)), BigInt(5));
  EXPECT_EQ(s.pp(x1, s.power(x1, -4)), BigInt(-4));
  EXPECT_FALSE(s.pp(x1, x2));
  EXPECT_FALSE(s.pp(s.multiply(x1, x1), x1));
  const Element c = s.evaluate(commutator(x(0), x(1)));
  EXPECT_EQ(s.pp(c, s.power(c, 7)), BigInt(7));
  EXPECT_FALSE(s.pp(c, s.evaluate(commutator(x(0, -1), x(1)))));
  EXPECT_EQ(s.order(c), Order::infinite());
  EXPECT_TRUE(s.csmmp(c, s.power(c, 3)));
  EXPECT_FALSE(s.csmmp(c, s.power(c, -3)));
}

TEST(FreeSolvable, PowerProblemRecoversExponents) {
  Rng rng(54);
  for (int d : {2, 3}) {
    FreeSolvableGroup s(d, 2);
    for (int i = 0; i < 80; ++i) {
      const Element g = s.evaluate(random_word(s, 6, rng));
      if (s.wp(g)) continue;
      const long long k = std::uniform_int_distribution<long long>(-5, 5)(rng);
      EXPECT_EQ(s.pp(g, s.power(g, k)), BigInt(k)) << s.render(g);
    }
  }
}

TEST(FreeSolvable, ReferenceExamples) {
  FreeSolvableGroup s(2, 2);
  EXPECT_TRUE(s.wp(s.magnus_embed(Word{{0, 1}, {0, -1}})));
  const Word rel = commutator(commutator(x(0), x(1)), commutator(x(0, -1), x(1)));
  EXPECT_TRUE(s.wp(s.magnus_embed(rel)));
  EXPECT_FALSE(FreeSolvableGroup(3, 2).wp(FreeSolvableGroup(3, 2).magnus_embed(rel)));
}
