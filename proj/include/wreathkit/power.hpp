#pragma once

// The power problem in A wr B.
//
// Supports are split along cosets t<b>. On one coset a function is a sorted
// list of (exponent e, value a) with f(t b^e) = a, and
//   f^(b,k)(t b^l) = f(t b^(l-k+1)) ... f(t b^l),   where (b,f)^k = (b^k, f^(b,k)).
// For infinite-order b the candidate exponent comes from B and is verified on
// finitely many test points. For b of finite order K the problem reduces to
// pointwise power problems in A, whose solution sets are merged by the
// congruence solver.

#include "wreathkit/arith.hpp"
#include "wreathkit/wreath_element.hpp"

#include <set>

namespace wreathkit {

class KeyOutsideCosets : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// (exponent, value) pairs of one coset, exponents strictly increasing.
using CosetEntries = std::vector<std::pair<BigInt, Element>>;

struct CosetDecomposition {
  std::vector<Element> reps;
  std::vector<CosetEntries> entries;  // parallel to reps
};

/// Piecewise-constant description of l -> f^(b,k)(t b^l) on one coset of a
/// finite-order b: the value is values[i-1] for boundaries[i-1] < l <= boundaries[i],
/// and boundaries.front() + period = boundaries.back().
struct BreakpointList {
  std::vector<BigInt> boundaries;
  std::vector<Element> values;
};

/// First key of every <b>-coset met by the support, in support order.
inline std::vector<Element> coset_reps(const Group& B, const Support& f, const Element& b) {
  std::vector<Element> reps;
  for (const auto& [key, value] : f) {
    bool fresh = true;
    for (const auto& r : reps) {
      if (B.csgmp(b, B.multiply(B.invert(r), key))) {
        fresh = false;
        break;
      }
    }
    if (fresh) reps.push_back(key);
  }
  return reps;
}

inline std::optional<std::size_t> find_coset(const Group& B, const Element& b,
                                             std::span<const Element> reps, const Element& key) {
  for (std::size_t i = 0; i < reps.size(); ++i)
    if (B.csgmp(b, B.multiply(B.invert(reps[i]), key))) return i;
  return std::nullopt;
}

inline bool support_in_cosets(const Group& B, const Support& g, const Element& b,
                              std::span<const Element> reps) {
  for (const auto& [key, value] : g)
    if (!find_coset(B, b, reps, key)) return false;
  return true;
}

/// Exponents are those returned by B's power problem, so for finite-order b
/// they lie in [0, ord(b)).
inline CosetDecomposition coset_decompose(const Group& B, const Support& f, const Element& b,
                                          std::vector<Element> reps) {
  CosetDecomposition out{std::move(reps), {}};
  out.entries.resize(out.reps.size());
  std::vector<Element> inv_reps;
  for (const auto& r : out.reps) inv_reps.push_back(B.invert(r));
  for (const auto& [key, value] : f) {
    bool placed = false;
    for (std::size_t i = 0; i < out.reps.size() && !placed; ++i) {
      if (auto e = B.pp(b, B.multiply(inv_reps[i], key))) {
        out.entries[i].emplace_back(*e, value);
        placed = true;
      }
    }
    if (!placed) throw KeyOutsideCosets("support key outside the given cosets");
  }
  for (auto& list : out.entries)
    std::sort(list.begin(), list.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

/// f^(b,k)(t b^l) for one coset: the product of the values whose exponents
/// fall in [l - k + 1, l], in increasing exponent order.
inline Element eval_fbk(const Group& A, const CosetEntries& dec, const BigInt& k, const BigInt& l) {
  const BigInt lo = l - k + 1;
  auto first = std::lower_bound(dec.begin(), dec.end(), lo,
                                [](const auto& entry, const BigInt& v) { return entry.first < v; });
  auto last = std::upper_bound(dec.begin(), dec.end(), l,
                               [](const BigInt& v, const auto& entry) { return v < entry.first; });
  Element acc = A.identity();
  for (auto it = first; it < last; ++it) acc = A.multiply(acc, it->second);
  return acc;
}

/// eval_fbk on a coset of size `period`, exponents in [0, period), 0 <= k <= period.
inline Element eval_fbk_cyclic(const Group& A, const CosetEntries& dec, const BigInt& k,
                               const BigInt& l, const BigInt& period) {
  CosetEntries unrolled;
  unrolled.reserve(2 * dec.size());
  for (const auto& [e, a] : dec) unrolled.emplace_back(e - period, a);
  for (const auto& entry : dec) unrolled.push_back(entry);
  return eval_fbk(A, unrolled, k, mod_floor(l, period));
}

/// Value changes between l and l + 1 only when l + 1 = e or l + 1 = e + k (mod period).
inline BreakpointList breakpoints(const Group& A, const CosetEntries& dec, const BigInt& k,
                                  const BigInt& period) {
  std::set<BigInt> cuts;
  for (const auto& [e, a] : dec) {
    cuts.insert(mod_floor(e - 1, period));
    cuts.insert(mod_floor(e + k - 1, period));
  }
  if (cuts.empty()) cuts.insert(period - 1);
  BreakpointList out;
  out.boundaries.push_back(*cuts.rbegin() - period);
  for (const auto& c : cuts) {
    out.boundaries.push_back(c);
    out.values.push_back(eval_fbk_cyclic(A, dec, k, c, period));
  }
  return out;
}

namespace detail {

inline PowerAnswer power_infinite_order(const Group& A, const Group& B, const WreathElement& x,
                                        const WreathElement& y, const BigInt& k) {
  const auto reps = coset_reps(B, x.support, x.top);
  if (!support_in_cosets(B, y.support, x.top, reps)) return std::nullopt;
  const auto fdec = coset_decompose(B, x.support, x.top, reps);
  const auto gdec = coset_decompose(B, y.support, x.top, reps);
  const Element one = A.identity();

  for (std::size_t c = 0; c < reps.size(); ++c) {
    const CosetEntries& fe = fdec.entries[c];
    const CosetEntries& ge = gdec.entries[c];

    // Agreement on the support of g.
    for (const auto& [e, a] : ge)
      if (eval_fbk(A, fe, k, e) != a) return std::nullopt;

    // Support of f^(b,k) inside the support of g, one interval cell at a time.
    // Cell (i, j) carries the product a_i ... a_{j-1} on
    //   max(e_{j-1}, e_{i-1} + k) <= l <= min(e_i + k - 1, e_j - 1).
    const std::size_t n = fe.size();
    std::set<BigInt> gexp;
    for (const auto& [e, a] : ge) gexp.insert(e);
    for (std::size_t i = 1; i <= n; ++i) {
      Element prod = one;
      for (std::size_t j = i + 1; j <= n + 1; ++j) {
        prod = A.multiply(prod, fe[j - 2].second);
        if (prod == one) continue;
        BigInt lo = fe[j - 2].first;
        if (i >= 2) lo = std::max(lo, fe[i - 2].first + k);
        BigInt hi = fe[i - 1].first + k - 1;
        if (j <= n) hi = std::min(hi, fe[j - 1].first - 1);
        if (lo > hi) continue;
        if (hi - lo + 1 > BigInt(gexp.size())) return std::nullopt;
        for (BigInt l = lo; l <= hi; ++l)
          if (!gexp.count(l)) return std::nullopt;
      }
    }
  }
  return k;
}

inline PowerAnswer power_finite_order(const Group& A, const Group& B, const WreathElement& x,
                                      const WreathElement& y, const BigInt& k0,
                                      const BigInt& period, int beta) {
  const auto reps = coset_reps(B, x.support, x.top);
  if (!support_in_cosets(B, y.support, x.top, reps)) return std::nullopt;
  const auto fdec = coset_decompose(B, x.support, x.top, reps);
  const auto gdec = coset_decompose(B, y.support, x.top, reps);

  // x^(k0 + period * m) = y  iff  F^m = H pointwise, where (1, F) = x^period
  // and (1, H) = y x^-k0, i.e. H(t b^l) = g(t b^(l+k0)) f^(b,k0)(t b^(l+k0))^-1.
  std::vector<Congruence> system{Congruence::modulo(0, 1)};
  for (std::size_t c = 0; c < reps.size(); ++c) {
    const CosetEntries& fe = fdec.entries[c];
    const CosetEntries& ge = gdec.entries[c];
    std::set<BigInt> test_points;
    for (const auto& g : breakpoints(A, fe, period, period).boundaries)
      test_points.insert(mod_floor(g, period));
    for (const auto& g : breakpoints(A, fe, k0, period).boundaries)
      test_points.insert(mod_floor(g - k0, period));
    for (const auto& g : breakpoints(A, ge, 1, period).boundaries)
      test_points.insert(mod_floor(g - k0, period));

    for (const auto& l : test_points) {
      const Element alpha = eval_fbk_cyclic(A, fe, period, l, period);
      const Element target =
          A.multiply(eval_fbk_cyclic(A, ge, 1, l + k0, period),
                     A.invert(eval_fbk_cyclic(A, fe, k0, l + k0, period)));
      auto kl = A.pp(alpha, target);
      if (!kl) return std::nullopt;
      Order ol = A.order(alpha);
      system.push_back(ol.is_finite() ? Congruence::modulo(*kl, ol.value())
                                      : Congruence::exactly(*kl));
    }
  }

  auto solved = crt_solve(system, beta);
  if (!solved) return std::nullopt;
  if (solved->is_exact()) return k0 + period * solved->residue();
  // Solution set k0 + period * (r + M Z); report its smallest non-negative member.
  return mod_floor(k0 + period * solved->residue(), period * solved->modulus());
}

}  // namespace detail

/// Smallest non-negative k with x^k = y when x has finite order; the unique k otherwise.
inline PowerAnswer power_test(const Group& A, const Group& B, const WreathElement& x,
                              const WreathElement& y, int beta = kDefaultBeta) {
  auto kb = B.pp(x.top, y.top);
  if (!kb) return std::nullopt;
  Order ob = B.order(x.top);
  if (ob.is_finite()) return detail::power_finite_order(A, B, x, y, *kb, ob.value(), beta);

  if (*kb == 0) {
    if (y.support.empty()) return BigInt(0);
    return std::nullopt;
  }
  if (*kb < 0) {
    // x^k = y with k < 0  iff  (x^-1)^(-k) = y
    auto r = power_test(A, B, wreath_invert(A, B, x), y, beta);
    if (!r) return std::nullopt;
    return BigInt(-*r);
  }
  return detail::power_infinite_order(A, B, x, y, *kb);
}

inline Order wreath_order(const Group& A, const Group& B, const WreathElement& x,
                          int beta = kDefaultBeta) {
  auto k = power_test(A, B, x, wreath_invert(A, B, x), beta);
  if (k && *k >= 0) return Order::finite(*k + 1);
  return Order::infinite();
}

}  // namespace wreathkit
