#pragma once

// Randomized and exhaustive cross-checks of the decision procedures against
// the brute-force oracles, one check per acceptance criterion.

#include "wreathkit/baumslag_solitar.hpp"
#include "wreathkit/oracle.hpp"
#include "wreathkit/solvable.hpp"
#include "wreathkit/wreath.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

namespace wreathkit {

using Rng = std::mt19937_64;

inline Word random_word(const Group& g, std::size_t max_length, Rng& rng) {
  const std::size_t n = g.alphabet().size();
  Word w;
  if (n == 0) return w;
  const std::size_t length = std::uniform_int_distribution<std::size_t>(0, max_length)(rng);
  std::uniform_int_distribution<std::size_t> gen(0, n - 1);
  std::bernoulli_distribution positive(0.5);
  for (std::size_t i = 0; i < length; ++i) w.push_back({gen(rng), positive(rng) ? 1 : -1});
  return w;
}

inline Element random_element(const Group& g, std::size_t max_length, Rng& rng) {
  return g.evaluate(random_word(g, max_length, rng));
}

/// x^k by |k| successive multiplications.
inline Element slow_power(const Group& g, const Element& x, long long k) {
  const Element base = k < 0 ? g.invert(x) : x;
  Element acc = g.identity();
  for (long long i = 0; i < (k < 0 ? -k : k); ++i) acc = g.multiply(acc, base);
  return acc;
}

/// Order by repeated multiplication; nullopt when it exceeds the bound.
inline std::optional<long long> slow_order(const Group& g, const Element& x, long long bound) {
  Element acc = x;
  for (long long k = 1; k <= bound; ++k) {
    if (acc == g.identity()) return k;
    acc = g.multiply(acc, x);
  }
  return std::nullopt;
}

/// Commutator x^-1 y^-1 x y as a word.
inline Word commutator(const Word& x, const Word& y) {
  return concat(concat(concat(inverse(x), inverse(y)), x), y);
}

enum class Scale { kQuick, kFull };

struct SelftestOptions {
  Scale scale = Scale::kQuick;
  std::uint64_t seed = 20240601;
  /// Deliberately corrupts the congruence-solver comparison; used to check
  /// that failures are reported.
  bool inject_fault = false;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  double budget_seconds = 0;
};

namespace selftest {

struct Tally {
  long long checked = 0;
  long long failed = 0;
  std::string first_failure;

  void check(bool ok, const std::function<std::string()>& describe) {
    ++checked;
    if (ok) return;
    if (failed++ == 0) first_failure = describe();
  }
  std::string summary() const {
    std::string s = std::to_string(checked) + " checks";
    if (failed) s += ", " + std::to_string(failed) + " failed (first: " + first_failure + ")";
    return s;
  }
};

inline bool full(const SelftestOptions& o) { return o.scale == Scale::kFull; }

inline std::string show(const PowerAnswer& k) { return k ? k->str() : std::string("none"); }

inline GroupHandle z() { return AbelianGroup::free(1); }
inline GroupHandle zmod(std::uint64_t n) { return AbelianGroup::cyclic(n); }

/// Both decision procedures against exhaustive search on a finite wreath product.
inline void finite_exhaustive(const WreathGroup& G, std::size_t expected_size, Tally& t) {
  const BallIndex ball = enumerate_ball(G, 64, 64);
  t.check(ball.exhausted && ball.size() == expected_size, [&] {
    return G.name() + " enumerated " + std::to_string(ball.size()) + " elements";
  });
  const long long bound = static_cast<long long>(ball.size());
  for (const auto& [x, wx] : ball.elements) {
    for (const auto& [y, wy] : ball.elements) {
      const ConjugacyAnswer fast = G.conjugacy(x, y);
      const BruteConjugacy slow = brute_cp(G, ball, x, y);
      t.check(fast.conjugate == slow.found() && slow.definitive, [&] {
        return "cp " + G.render(x) + " ~ " + G.render(y);
      });
      if (fast.conjugate && fast.witness) {
        const WreathElement a = G.to_wreath(x), b = G.to_wreath(y);
        const Group& B = G.top();
        t.check(B.multiply(*fast.witness, a.top) == B.multiply(b.top, *fast.witness),
                [&] { return "witness of " + G.render(x) + " ~ " + G.render(y); });
      }
      const PowerAnswer k = G.pp(x, y);
      const PowerAnswer k0 = brute_pp(G, x, y, bound);
      t.check(k == k0, [&] {
        return "pp " + G.render(x) + ", " + G.render(y) + ": " + show(k) + " vs " + show(k0);
      });
    }
  }
}

inline void criterion1(const SelftestOptions& o, Tally& t) {
  finite_exhaustive(*make_wreath(zmod(2), zmod(3)), 24, t);
  if (full(o)) finite_exhaustive(*make_wreath(zmod(2), zmod(4)), 64, t);
}

inline void criterion2(const SelftestOptions& o, Tally& t) {
  Rng rng(o.seed + 2);
  auto G = make_wreath(zmod(2), z());
  const int pairs = full(o) ? 1000 : 200;
  for (int i = 0; i < pairs; ++i) {
    const Element x = random_element(*G, 12, rng);
    Element y;
    switch (i % 3) {
      case 0:
        y = random_element(*G, 12, rng);
        break;
      case 1:
        y = G->conjugate_by(x, random_element(*G, 12, rng));
        break;
      default:
        // Same top, perturbed lamps.
        y = G->multiply(x, G->conjugate_by(G->generator(0), random_element(*G, 6, rng)));
        break;
    }
    const bool fast = G->cp(x, y);
    const bool closed = lamplighter_cp(G->base(), G->top(), G->to_wreath(x), G->to_wreath(y));
    t.check(fast == closed, [&] { return "cp " + G->render(x) + " ~ " + G->render(y); });
  }
}

inline void power_soundness(const WreathGroup& G, int samples, Rng& rng, Tally& t) {
  std::uniform_int_distribution<long long> kdist(-16, 16);
  for (int i = 0; i < samples; ++i) {
    const Element x = random_element(G, 8, rng);
    const long long k = kdist(rng);
    const Element y = slow_power(G, x, k);
    const PowerAnswer got = G.pp(x, y);
    auto where = [&] { return G.name() + " x=" + G.render(x) + " k=" + std::to_string(k); };
    t.check(got.has_value(), where);
    if (!got) continue;
    t.check(abs(*got) <= 4096 && slow_power(G, x, got->convert_to<long long>()) == y, where);
    const Order ord = G.order(x);
    if (ord.is_finite()) {
      t.check(*got >= 0 && *got < ord.value(), where);
      for (long long j = 0; j < *got; ++j)
        if (slow_power(G, x, j) == y) {
          t.check(false, where);
          break;
        }
    }
  }
}

inline void criterion3(const SelftestOptions& o, Tally& t) {
  Rng rng(o.seed + 3);
  const int samples = full(o) ? 300 : 60;
  power_soundness(*make_wreath(zmod(2), z()), samples, rng, t);
  power_soundness(*make_wreath(z(), z()), samples, rng, t);
  power_soundness(*make_wreath(zmod(2), zmod(4)), samples, rng, t);
}

inline void criterion4(const SelftestOptions& o, Tally& t) {
  Rng rng(o.seed + 4);
  // Non-commutative values make the order of the factors observable.
  auto A = make_wreath(zmod(2), zmod(3));
  auto B = z();
  auto G = make_wreath(A, B);
  const int samples = full(o) ? 500 : 100;
  std::uniform_int_distribution<int> size(0, 5), expo(0, 19), kdist(1, 32), stride(1, 3);
  for (int i = 0; i < samples; ++i) {
    // keys r + s e for exponents e, so b = s and the coset representative is r.
    const int s = stride(rng);
    const int r = std::uniform_int_distribution<int>(0, s - 1)(rng);
    std::map<int, Element> chosen;
    const int n = size(rng);
    for (int j = 0; j < n; ++j) {
      Element a = random_element(*A, 6, rng);
      if (a != A->identity()) chosen[expo(rng)] = a;
    }
    CosetEntries dec;
    std::vector<std::pair<Element, Element>> entries;
    for (const auto& [e, a] : chosen) {
      dec.emplace_back(e, a);
      entries.emplace_back(Element({BigInt(r + s * e)}), a);
    }
    const Element b({BigInt(s)});
    const WreathElement x = make_wreath_element(*A, b, entries);
    const int k = kdist(rng);
    const WreathElement xk = G->to_wreath(slow_power(*G, G->from_wreath(x), k));
    for (int l = -2; l <= 20 + k + 2; ++l) {
      const Element want = support_value(*A, xk.support, Element({BigInt(r + s * l)}));
      t.check(eval_fbk(*A, dec, k, l) == want, [&] {
        return "eval_fbk k=" + std::to_string(k) + " l=" + std::to_string(l);
      });
    }
  }
}

inline void gadgets_over(const GroupHandle& B, int samples, Rng& rng, Tally& t) {
  auto lamp = zmod(2);
  auto nonab = make_wreath(zmod(2), zmod(2));
  const Element a1 = nonab->generator(0), a2 = nonab->generator(1);
  for (int i = 0; i < samples; ++i) {
    const Element b = random_element(*B, 8, rng);
    const Element c = random_element(*B, 8, rng);
    auto where = [&] { return B->name() + " b=" + B->render(b) + " c=" + B->render(c); };
    const PowerAnswer brute = brute_pp(*B, b, c, 64);
    const bool sg = B->csgmp(b, c), sm = B->csmmp(b, c);
    t.check(sg == brute.has_value(), where);
    t.check(sm == (brute.has_value() && *brute >= 0), where);

    auto [x, y] = csgmp_gadget(*lamp, *B, b, c, lamp->generator(0));
    t.check(conjugacy_test(*lamp, *B, x, y).conjugate == sg, where);
    auto [u, v] = csmmp_gadget(*nonab, *B, b, c, a1, a2);
    t.check(conjugacy_test(*nonab, *B, u, v).conjugate == sm, where);
  }
}

inline void criterion5(const SelftestOptions& o, Tally& t) {
  Rng rng(o.seed + 5);
  const int samples = full(o) ? 200 : 40;
  gadgets_over(z(), samples, rng, t);
  gadgets_over(zmod(6), samples, rng, t);
}

inline void rep_independence(const GroupHandle& B, bool want_infinite, int samples, Rng& rng,
                             Tally& t) {
  auto A = make_wreath(zmod(2), zmod(2));
  std::uniform_int_distribution<long long> shift(-6, 6);
  std::uniform_int_distribution<int> size(0, 5);
  int done = 0;
  while (done < samples) {
    const Element b = random_element(*B, 6, rng);
    if (B->order(b).is_finite() == want_infinite) continue;
    const Element r = random_element(*B, 6, rng);
    const Element d = random_element(*B, 6, rng);
    // Keys partly on the orbit r <b> d^-1 so that the products are nontrivial.
    std::vector<std::pair<Element, Element>> entries;
    const int n = size(rng);
    for (int j = 0; j < n; ++j) {
      Element key = j % 2 == 0
                        ? B->multiply(B->multiply(r, B->power(b, shift(rng))), B->invert(d))
                        : random_element(*B, 6, rng);
      entries.emplace_back(std::move(key), random_element(*A, 6, rng));
    }
    const Support f = make_wreath_element(*A, B->identity(), entries).support;
    const Element r2 = B->multiply(r, B->power(b, shift(rng)));
    const Element d2 = B->multiply(d, B->power(b, shift(rng)));
    const Element p1 = pi_product(*A, *B, f, r, b, d);
    const Element p2 = pi_product(*A, *B, f, r2, b, d2);
    auto where = [&] { return B->name() + " b=" + B->render(b) + " r=" + B->render(r); };
    if (want_infinite) {
      t.check(p1 == p2, where);
      if (B->capabilities().is_torsion_free)
        t.check(pi_product(*A, *B, f, r, b, d, PiMethod::kMonoidOrder) == p1, where);
    } else {
      t.check(A->cp(p1, p2), where);
    }
    ++done;
  }
}

inline void criterion6(const SelftestOptions& o, Tally& t) {
  Rng rng(o.seed + 6);
  const int samples = full(o) ? 125 : 25;
  rep_independence(AbelianGroup::free(2), true, samples, rng, t);
  rep_independence(make_wreath(zmod(2), z()), true, samples, rng, t);
  rep_independence(zmod(6), false, samples, rng, t);
  rep_independence(make_wreath(zmod(2), zmod(3)), false, samples, rng, t);
}

inline void free_solvable(const FreeSolvableGroup& S, const SelftestOptions& o, Rng& rng,
                          Tally& t) {
  const Group& inner = S.inner();
  const std::size_t r = static_cast<std::size_t>(S.rank());
  auto where = [&](const std::string& what) { return [&S, what] { return S.name() + ": " + what; }; };

  // Homomorphism, with the image also computed by collecting generator images.
  auto substitute = [&](const Word& w) {
    Word out;
    for (const Letter& l : w) {
      if (S.degree() == 1) {
        out.push_back(l);
      } else if (l.sign > 0) {
        out.push_back({r + l.generator, 1});
        out.push_back({l.generator, 1});
      } else {
        out.push_back({l.generator, -1});
        out.push_back({r + l.generator, -1});
      }
    }
    return out;
  };
  const int pairs = full(o) ? 500 : 60;
  for (int i = 0; i < pairs; ++i) {
    const Word u = random_word(S, 10, rng), v = random_word(S, 10, rng);
    const Element eu = S.magnus_embed(u), ev = S.magnus_embed(v);
    const Element euv = S.magnus_embed(concat(u, v));
    t.check(euv == S.multiply(eu, ev), where("homomorphism"));
    t.check(inner.evaluate(substitute(concat(u, v))) == euv, where("collected image"));
    t.check(S.magnus_embed(inverse(u)) == S.invert(eu), where("inverse"));
  }

  // d-fold commutators vanish.
  std::function<Word(int)> fold = [&](int depth) -> Word {
    if (depth == 0) return random_word(S, 4, rng);
    return commutator(fold(depth - 1), fold(depth - 1));
  };
  const int relators = full(o) ? 100 : 20;
  for (int i = 0; i < relators; ++i)
    t.check(S.wp(S.magnus_embed(fold(S.degree()))), where("relator"));

  // Free witnesses.
  const Word x1{{0, 1}}, x2{{1, 1}};
  t.check(!S.wp(S.magnus_embed(x1)), where("x1 trivial"));
  t.check(!S.wp(S.magnus_embed(commutator(x1, x2))), where("[x1,x2] trivial"));
  if (S.degree() >= 3) {
    const Word x1inv{{0, -1}};
    t.check(!S.wp(S.magnus_embed(commutator(commutator(x1, x2), commutator(x1inv, x2)))),
            where("2-fold commutator trivial"));
  }

  // Conjugacy.
  t.check(!S.cp(S.generator(0), S.generator(1)), where("x1 ~ x2"));
  const int conj = full(o) ? 40 : 8;
  for (int i = 0; i < conj; ++i) {
    const Element w = random_element(S, 6, rng), zz = random_element(S, 6, rng);
    t.check(S.cp(w, S.conjugate_by(w, zz)), where("w ~ z^-1 w z"));
  }

  // Power problem.
  const int powers = full(o) ? 100 : 20;
  std::uniform_int_distribution<long long> kdist(-8, 8);
  for (int i = 0; i < powers;) {
    const Element w = random_element(S, 6, rng);
    if (S.wp(w)) continue;
    const long long k = kdist(rng);
    const PowerAnswer got = S.pp(w, slow_power(S, w, k));
    t.check(got && *got == k, where("pp(w, w^" + std::to_string(k) + ") = " + show(got)));
    ++i;
  }
}

inline void criterion7(const SelftestOptions& o, Tally& t) {
  Rng rng(o.seed + 7);
  free_solvable(FreeSolvableGroup(2, 2), o, rng, t);
  free_solvable(FreeSolvableGroup(3, 2), o, rng, t);
  // [[x1,x2],[x1,x3]] survives at degree 3, rank 3 and dies at degree 2.
  const Word x1{{0, 1}}, x2{{1, 1}}, x3{{2, 1}};
  const Word w = commutator(commutator(x1, x2), commutator(x1, x3));
  FreeSolvableGroup s33(3, 3), s23(2, 3);
  t.check(!s33.wp(s33.magnus_embed(w)), [] { return "[[x1,x2],[x1,x3]] trivial in S(3,3)"; });
  t.check(s23.wp(s23.magnus_embed(w)), [] { return "[[x1,x2],[x1,x3]] nontrivial in S(2,3)"; });
}

inline bool two_smooth(long long n) {
  while (n % 2 == 0) n /= 2;
  return n == 1;
}

inline void smooth_orders(const WreathGroup& G, std::size_t expected_size, Tally& t) {
  const BallIndex ball = enumerate_ball(G, 64, 64);
  t.check(ball.exhausted && ball.size() == expected_size, [&] { return G.name() + " size"; });
  for (const auto& [x, w] : ball.elements) {
    const Order ord = G.order(x);
    const auto slow = slow_order(G, x, static_cast<long long>(ball.size()));
    t.check(ord.is_finite() && slow && ord.value() == *slow && two_smooth(*slow),
            [&] { return G.render(x) + " has order " + ord.str(); });
  }
}

inline void criterion8(const SelftestOptions&, Tally& t) {
  smooth_orders(*make_wreath(zmod(2), zmod(4)), 64, t);
  smooth_orders(*make_wreath(make_wreath(zmod(2), zmod(2)), zmod(2)), 128, t);
}

inline void criterion9(const SelftestOptions& o, Tally& t) {
  Rng rng(o.seed + 9);
  BaumslagSolitarGroup G(2);
  const int samples = full(o) ? 200 : 40;
  std::uniform_int_distribution<long long> kdist(-12, 12);
  for (int i = 0; i < samples; ++i) {
    const Element x = random_element(G, 8, rng);
    const long long k = kdist(rng);
    const Element y = slow_power(G, x, k);
    const PowerAnswer got = G.pp(x, y);
    t.check(got && slow_power(G, x, got->convert_to<long long>()) == y &&
                (G.wp(x) || *got == k),
            [&] { return "pp " + G.render(x) + " k=" + std::to_string(k); });
  }
  int rejected = 0, attempts = 0;
  while (rejected < samples && attempts < 100 * samples) {
    ++attempts;
    const Element x = random_element(G, 8, rng);
    const Element y = random_element(G, 8, rng);
    const PowerAnswer brute = brute_pp(G, x, y, 32);
    const PowerAnswer got = G.pp(x, y);
    auto where = [&] { return "pp " + G.render(x) + ", " + G.render(y); };
    if (brute) {
      t.check(got == brute, where);
    } else if (got) {
      // A genuine power beyond the brute-force window.
      t.check(abs(*got) > 32 && G.closed_power(x, *got) == y, where);
    } else {
      ++rejected;
    }
  }
  t.check(rejected == samples, [&] { return "only " + std::to_string(rejected) + " non-powers"; });
}

inline void criterion10(const SelftestOptions& o, Tally& t) {
  Rng rng(o.seed + 10);
  const std::vector<int> moduli{2, 3, 4, 6, 8, 9, 12};
  std::uniform_int_distribution<std::size_t> pick(0, moduli.size() - 1);
  std::uniform_int_distribution<int> count(1, 4);
  const int systems = full(o) ? 1000 : 200;
  for (int i = 0; i < systems; ++i) {
    std::vector<Congruence> sys;
    std::vector<std::pair<int, int>> raw;
    long long l = 1;
    const int n = count(rng);
    for (int j = 0; j < n; ++j) {
      const int m = moduli[pick(rng)];
      const int res = std::uniform_int_distribution<int>(0, m - 1)(rng);
      raw.emplace_back(res, m);
      sys.push_back(Congruence::modulo(res, m));
      l = std::lcm(l, static_cast<long long>(m));
    }
    std::optional<long long> smallest;
    for (long long x = 0; x < l && !smallest; ++x) {
      bool ok = true;
      for (const auto& [res, m] : raw) ok = ok && x % m == res;
      if (ok) smallest = x;
    }
    const auto got = crt_solve(sys, kDefaultBeta);
    long long want = smallest.value_or(-1);
    if (o.inject_fault && smallest) ++want;
    const bool agree = smallest ? (got && !got->is_exact() && got->residue() == want &&
                                   got->modulus() == l)
                                : !got.has_value();
    t.check(agree, [&] {
      std::string s = "system";
      for (const auto& [res, m] : raw) s += " " + std::to_string(res) + " mod " + std::to_string(m);
      return s + ": got " + (got ? got->str() : std::string("none"));
    });
  }
}

}  // namespace selftest

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;
  void (*run)(const SelftestOptions&, selftest::Tally&);
};

inline const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list{
      {1, "finite exhaustive equivalence (Z/2 wr Z/3, Z/2 wr Z/4)", 30, selftest::criterion1},
      {2, "lamplighter closed form", 10, selftest::criterion2},
      {3, "power problem soundness and minimality", 20, selftest::criterion3},
      {4, "eval_fbk vs explicit product", 5, selftest::criterion4},
      {5, "lower-bound gadgets", 10, selftest::criterion5},
      {6, "representative independence", 5, selftest::criterion6},
      {7, "free solvable suite", 60, selftest::criterion7},
      {8, "smoothness of element orders", 10, selftest::criterion8},
      {9, "BS(1,2) power problem", 5, selftest::criterion9},
      {10, "congruence solver vs exhaustive scan", 5, selftest::criterion10},
  };
  return list;
}

/// Runs one criterion. Passing requires every check to hold and, at full
/// scale, the run to finish within its time budget.
inline CriterionResult run_criterion(const Criterion& c, const SelftestOptions& options) {
  CriterionResult out{c.id, c.title, false, {}, 0, c.budget_seconds};
  selftest::Tally tally;
  const auto start = std::chrono::steady_clock::now();
  try {
    c.run(options, tally);
  } catch (const std::exception& e) {
    tally.check(false, [&] { return std::string("exception: ") + e.what(); });
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out.passed = tally.failed == 0 && tally.checked > 0;
  out.detail = tally.summary();
  if (options.scale == Scale::kFull && out.seconds > c.budget_seconds) {
    out.passed = false;
    out.detail += ", over time budget";
  }
  return out;
}

inline std::string format_result(const CriterionResult& r) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(2);
  s << (r.passed ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.title << "  (" << r.detail
    << "; " << r.seconds << " s of " << r.budget_seconds << " s)";
  return s.str();
}

}  // namespace wreathkit
