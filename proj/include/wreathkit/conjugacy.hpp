#pragma once

// Conjugacy in A wr B.
//
// For x = (b, f) and t, d in B the invariant
//   pi_{t,b}^(d)(f) = product over j of f(t b^j d^-1), in increasing j,
// is the ordered product of f along the <b>-orbit through t d^-1. Two elements
// (b, f), (c, g) are conjugate iff some d with db = cd makes pi_{t,b}(f) and
// pi_{t,b}^(d)(g) equal (b of infinite order) or conjugate in A (finite order)
// for every coset t<b>.

#include "wreathkit/oracle.hpp"
#include "wreathkit/power.hpp"

namespace wreathkit {

class CommutingPair : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class PiMethod {
  /// Sort the hits by the exponents reported by B's power problem.
  kExponent,
  /// Order hits pairwise through cyclic submonoid membership; needs b of infinite order.
  kMonoidOrder,
};

inline Element pi_product(const Group& A, const Group& B, const Support& f, const Element& t,
                          const Element& b, const Element& d,
                          PiMethod method = PiMethod::kExponent) {
  const Element tinv = B.invert(t);
  std::vector<std::pair<BigInt, const Element*>> hits;
  std::vector<const std::pair<Element, Element>*> entries;
  for (const auto& entry : f) {
    auto k = B.pp(b, B.multiply(B.multiply(tinv, entry.first), d));
    if (!k) continue;
    hits.emplace_back(*k, &entry.second);
    entries.push_back(&entry);
  }
  if (hits.empty()) return A.identity();

  if (method == PiMethod::kMonoidOrder) {
    // key_i comes before key_j iff key_i^-1 key_j is a positive power of b.
    std::sort(entries.begin(), entries.end(), [&](const auto* x, const auto* y) {
      return x->first != y->first && B.csmmp(b, B.multiply(B.invert(x->first), y->first));
    });
    Element acc = A.identity();
    for (const auto* e : entries) acc = A.multiply(acc, e->second);
    return acc;
  }

  if (!A.capabilities().is_abelian)
    std::sort(hits.begin(), hits.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
  Element acc = A.identity();
  for (const auto& [k, a] : hits) acc = A.multiply(acc, *a);
  return acc;
}

struct ConjugacyOptions {
  /// Ball radius in B for the fallback search of a witness in the all-trivial case.
  int witness_radius = 8;
  /// Compare on every element of {beta_i beta_j^-1 b_k} instead of one point per coset.
  bool literal_test_set = false;
};

namespace detail {

inline bool commutes_into(const Group& B, const Element& d, const Element& b, const Element& c) {
  return B.multiply(d, b) == B.multiply(c, d);
}

inline std::optional<Element> find_twisting(const Group& B, const Element& b, const Element& c,
                                            const Support& f, const Support& g, int radius) {
  if (commutes_into(B, B.identity(), b, c)) return B.identity();
  for (const auto& [beta, v] : g)
    for (const auto& [key, w] : f) {
      Element d = B.multiply(B.invert(beta), key);
      if (commutes_into(B, d, b, c)) return d;
    }
  try {
    auto direct = B.conjugacy(c, b);
    if (direct.witness && !direct.top_only && commutes_into(B, *direct.witness, b, c))
      return direct.witness;
  } catch (const Unsupported&) {
  }
  if (radius <= 0) return std::nullopt;
  try {
    // z^-1 c z = b  is  z b = c z
    auto found = brute_cp(B, c, b, radius, std::max(radius, kDefaultRadiusCap));
    if (found.found()) return B.evaluate(*found.conjugator);
  } catch (const CapExceeded&) {
  } catch (const Unsupported&) {
  }
  return std::nullopt;
}

inline bool pi_match(const Group& A, const Element& lhs, const Element& rhs, bool finite_order) {
  if (lhs == rhs) return true;
  return finite_order && A.cp(lhs, rhs);
}

}  // namespace detail

/// Decides x ~ y. On a positive answer the witness, when present, is the top
/// component d of a conjugator, with d b = c d.
inline ConjugacyAnswer conjugacy_test(const Group& A, const Group& B, const WreathElement& x,
                                      const WreathElement& y, ConjugacyOptions options = {}) {
  const Element& b = x.top;
  const Element& c = y.top;
  const Support& f = x.support;
  const Support& g = y.support;
  if (!B.cp(b, c)) return ConjugacyAnswer::no();

  const Element one_a = A.identity();
  const Element one_b = B.identity();
  const auto freps = coset_reps(B, f, b);
  std::optional<Element> pivot;
  for (const auto& t : freps) {
    if (pi_product(A, B, f, t, b, one_b) != one_a) {
      pivot = t;
      break;
    }
  }

  if (!pivot) {
    // Case (i): every pi-product of f is trivial.
    for (const auto& s : coset_reps(B, g, c))
      if (pi_product(A, B, g, s, c, one_b) != one_a) return ConjugacyAnswer::no();
    return ConjugacyAnswer::yes(detail::find_twisting(B, b, c, f, g, options.witness_radius));
  }

  // Case (ii): d ranges over beta_k^-1 t with db = cd.
  const bool finite_order = B.order(b).is_finite();
  std::vector<Element> tested;
  for (const auto& [beta, v] : g) {
    Element d = B.multiply(B.invert(beta), *pivot);
    if (!detail::commutes_into(B, d, b, c)) continue;
    if (std::find(tested.begin(), tested.end(), d) != tested.end()) continue;
    tested.push_back(d);

    std::vector<Element> points;
    if (options.literal_test_set) {
      std::set<Element> seen;
      for (const auto& [bi, vi] : g)
        for (const auto& [bj, vj] : g) {
          const Element ij = B.multiply(bi, B.invert(bj));
          for (const auto& [bk, vk] : f) seen.insert(B.multiply(ij, bk));
        }
      points.assign(seen.begin(), seen.end());
    } else {
      // pi_{t,b}(f) and pi_{t,b}^(d)(g) are trivial off the cosets of supp(f) and
      // supp(g) d, and depend on t only through its coset.
      Support probe = f;
      for (const auto& [key, value] : g) probe.emplace_back(B.multiply(key, d), value);
      points = coset_reps(B, probe, b);
    }

    bool ok = true;
    for (const auto& t : points) {
      const Element lhs = pi_product(A, B, f, t, b, one_b);
      const Element rhs = pi_product(A, B, g, t, b, d);
      if (!detail::pi_match(A, lhs, rhs, finite_order)) {
        ok = false;
        break;
      }
    }
    if (ok) return ConjugacyAnswer::yes(d);
  }
  return ConjugacyAnswer::no();
}

/// ((b, 1), (b, {1: a, c: a^-1})): conjugate iff c lies in <b>.
inline std::pair<WreathElement, WreathElement> csgmp_gadget(const Group& A, const Group& B,
                                                            const Element& b, const Element& c,
                                                            const Element& a) {
  if (a == A.identity()) throw std::invalid_argument("csgmp_gadget: a must be nontrivial");
  WreathElement lhs{b, {}};
  WreathElement rhs = make_wreath_element(A, b, {{B.identity(), a}, {c, A.invert(a)}});
  return {lhs, rhs};
}

/// ((b, {1: a1 a2}), (b, {1: a1, c: a2})): conjugate iff c = b^k for some k >= 0.
inline std::pair<WreathElement, WreathElement> csmmp_gadget(const Group& A, const Group& B,
                                                            const Element& b, const Element& c,
                                                            const Element& a1, const Element& a2) {
  const Element a12 = A.multiply(a1, a2);
  if (a12 == A.multiply(a2, a1)) throw CommutingPair("csmmp_gadget: a1 and a2 commute");
  WreathElement lhs = make_wreath_element(A, b, {{B.identity(), a12}});
  WreathElement rhs = make_wreath_element(A, b, {{B.identity(), a1}, {c, a2}});
  return {lhs, rhs};
}

}  // namespace wreathkit
