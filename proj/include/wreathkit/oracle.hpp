#pragma once

// Ground-truth engines used by tests and the selftest: Cayley-ball
// enumeration, brute-force conjugator and power searches, and the closed-form
// conjugacy criterion of the lamplighter group.

#include "wreathkit/abelian.hpp"
#include "wreathkit/wreath_element.hpp"

#include <map>
#include <set>

namespace wreathkit {

inline constexpr int kDefaultRadiusCap = 8;

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class WrongGroup : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Distinct elements of the ball of the given radius, each with a shortest word.
struct BallIndex {
  int radius = 0;
  /// True when breadth-first search stopped growing before the radius was reached,
  /// i.e. the ball is the whole (finite) group.
  bool exhausted = false;
  std::vector<std::pair<Element, Word>> elements;
  std::map<Element, std::size_t> index;

  std::size_t size() const { return elements.size(); }
  const Word* find(const Element& e) const {
    auto it = index.find(e);
    return it == index.end() ? nullptr : &elements[it->second].second;
  }
};

inline BallIndex enumerate_ball(const Group& G, int radius, int cap = kDefaultRadiusCap) {
  if (radius < 0) throw std::invalid_argument("enumerate_ball: negative radius");
  if (radius > cap)
    throw CapExceeded("radius " + std::to_string(radius) + " exceeds cap " + std::to_string(cap));
  BallIndex ball;
  ball.radius = radius;
  const std::size_t ngen = G.alphabet().size();
  std::vector<std::pair<Letter, Element>> steps;
  for (std::size_t i = 0; i < ngen; ++i)
    for (int s : {1, -1}) steps.push_back({{i, s}, G.letter({i, s})});

  ball.index.emplace(G.identity(), 0);
  ball.elements.emplace_back(G.identity(), Word{});
  std::size_t layer_begin = 0;
  for (int r = 0; r < radius; ++r) {
    const std::size_t layer_end = ball.elements.size();
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      for (const auto& [l, g] : steps) {
        Element next = G.multiply(ball.elements[i].first, g);
        if (ball.index.count(next)) continue;
        Word w = ball.elements[i].second;
        w.push_back(l);
        ball.index.emplace(next, ball.elements.size());
        ball.elements.emplace_back(std::move(next), std::move(w));
      }
    }
    layer_begin = layer_end;
    if (ball.elements.size() == layer_end) {
      ball.exhausted = true;
      break;
    }
  }
  return ball;
}

/// FoundConjugator(word) when conjugator has a value; NotFoundWithinRadius otherwise.
/// The latter is definitive only when the ball is exhausted.
struct BruteConjugacy {
  std::optional<Word> conjugator;
  bool definitive = false;
  bool found() const { return conjugator.has_value(); }
};

/// Searches z in the ball with z^-1 x z = y.
inline BruteConjugacy brute_cp(const Group& G, const BallIndex& ball, const Element& x,
                               const Element& y) {
  for (const auto& [z, w] : ball.elements)
    if (G.conjugate_by(x, z) == y) return {w, true};
  return {std::nullopt, ball.exhausted};
}

inline BruteConjugacy brute_cp(const Group& G, const Element& x, const Element& y, int radius,
                               int cap = kDefaultRadiusCap) {
  return brute_cp(G, enumerate_ball(G, radius, cap), x, y);
}

/// Scans k = 0, 1, ..., bound and then k = -1, ..., -bound for v^k = w, so the
/// smallest non-negative solution wins.
inline PowerAnswer brute_pp(const Group& G, const Element& v, const Element& w, long long bound) {
  Element acc = G.identity();
  for (long long k = 0; k <= bound; ++k) {
    if (acc == w) return BigInt(k);
    acc = G.multiply(acc, v);
  }
  const Element vinv = G.invert(v);
  acc = vinv;
  for (long long k = 1; k <= bound; ++k) {
    if (acc == w) return BigInt(-k);
    acc = G.multiply(acc, vinv);
  }
  return std::nullopt;
}

/// Conjugacy in Z/2 wr Z via parities of support points per residue class.
/// A and B must be Z/2 and Z.
inline bool lamplighter_cp(const Group& A, const Group& B, const WreathElement& x,
                           const WreathElement& y) {
  auto a = dynamic_cast<const AbelianGroup*>(&A);
  auto b = dynamic_cast<const AbelianGroup*>(&B);
  if (!a || !b || a->moduli() != std::vector<std::uint64_t>{2} ||
      b->moduli() != std::vector<std::uint64_t>{0})
    throw WrongGroup("lamplighter_cp requires Z/2 wr Z");

  const BigInt top = x.top.ints()[0];
  if (top != y.top.ints()[0]) return false;
  std::vector<BigInt> f, g;
  for (const auto& e : x.support) f.push_back(e.first.ints()[0]);
  for (const auto& e : y.support) g.push_back(e.first.ints()[0]);

  if (top == 0) {
    // f = g + shift for some shift
    if (f.size() != g.size()) return false;
    if (f.empty()) return true;
    const BigInt shift = f.front() - g.front();
    for (std::size_t i = 0; i < f.size(); ++i)
      if (f[i] != g[i] + shift) return false;
    return true;
  }

  const BigInt period = abs(top);
  const auto n = period.convert_to<long long>();
  std::vector<int> pf(n, 0), pg(n, 0);
  for (const auto& v : f) pf[mod_floor(v, period).convert_to<long long>()] ^= 1;
  for (const auto& v : g) pg[mod_floor(v, period).convert_to<long long>()] ^= 1;
  for (long long d = 0; d < n; ++d) {
    bool ok = true;
    for (long long t = 0; t < n && ok; ++t) ok = pf[t] == pg[((t - d) % n + n) % n];
    if (ok) return true;
  }
  return false;
}

}  // namespace wreathkit
