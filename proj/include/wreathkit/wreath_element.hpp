#pragma once

// Normal forms of the restricted wreath product A wr B = B x| A^(B).
//
// An element (b, f) stands for the product b * f with b in B and f a finitely
// supported function B -> A. The action is f^c(x) = f(x c^-1), so
//   (b, f)(c, g) = (bc, f^c g)        and        (b, f)^-1 = (b^-1, (f^-1)^(b^-1)).
// A support entry (key, value) means f(key) = value != 1.

#include "wreathkit/group.hpp"

#include <map>
#include <span>

namespace wreathkit {

using Support = std::vector<std::pair<Element, Element>>;

struct WreathElement {
  Element top;
  Support support;  // keys strictly increasing, values never the identity of A

  friend bool operator==(const WreathElement&, const WreathElement&) = default;
};

/// Builds a normal form from an unordered list of (key, value) pairs. Values
/// at equal keys are multiplied in list order; identity values are dropped.
inline WreathElement make_wreath_element(const Group& A, Element top,
                                         std::span<const std::pair<Element, Element>> entries) {
  std::map<Element, Element> acc;
  for (const auto& [key, value] : entries) {
    auto [it, inserted] = acc.try_emplace(key, value);
    if (!inserted) it->second = A.multiply(it->second, value);
  }
  WreathElement out{std::move(top), {}};
  out.support.reserve(acc.size());
  const Element one = A.identity();
  for (auto& [key, value] : acc)
    if (value != one) out.support.emplace_back(key, std::move(value));
  return out;
}

inline WreathElement make_wreath_element(const Group& A, Element top,
                                         std::initializer_list<std::pair<Element, Element>> entries) {
  return make_wreath_element(
      A, std::move(top), std::span<const std::pair<Element, Element>>(entries.begin(), entries.size()));
}

/// True iff keys are strictly increasing and no value is trivial.
inline bool is_normal_form(const Group& A, const WreathElement& x) {
  const Element one = A.identity();
  for (std::size_t i = 0; i < x.support.size(); ++i) {
    if (x.support[i].second == one) return false;
    if (i > 0 && !(x.support[i - 1].first < x.support[i].first)) return false;
  }
  return true;
}

inline Element encode(const WreathElement& x) {
  std::vector<Element> children;
  children.reserve(1 + 2 * x.support.size());
  children.push_back(x.top);
  for (const auto& [k, v] : x.support) {
    children.push_back(k);
    children.push_back(v);
  }
  return Element({}, std::move(children));
}

inline WreathElement decode(const Element& e) {
  const auto& c = e.children();
  WreathElement x{c.at(0), {}};
  x.support.reserve((c.size() - 1) / 2);
  for (std::size_t i = 1; i + 1 < c.size(); i += 2) x.support.emplace_back(c[i], c[i + 1]);
  return x;
}

/// Value of f at a point (identity outside the support).
inline Element support_value(const Group& A, const Support& f, const Element& key) {
  auto it = std::lower_bound(f.begin(), f.end(), key,
                             [](const auto& entry, const Element& k) { return entry.first < k; });
  if (it != f.end() && it->first == key) return it->second;
  return A.identity();
}

inline WreathElement wreath_multiply(const Group& A, const Group& B, const WreathElement& x,
                                     const WreathElement& y) {
  std::vector<std::pair<Element, Element>> entries;
  entries.reserve(x.support.size() + y.support.size());
  const Element one_b = B.identity();
  for (const auto& [k, v] : x.support)
    entries.emplace_back(y.top == one_b ? k : B.multiply(k, y.top), v);
  for (const auto& entry : y.support) entries.push_back(entry);
  return make_wreath_element(A, B.multiply(x.top, y.top), entries);
}

inline WreathElement wreath_invert(const Group& A, const Group& B, const WreathElement& x) {
  Element inv_top = B.invert(x.top);
  std::vector<std::pair<Element, Element>> entries;
  entries.reserve(x.support.size());
  for (const auto& [k, v] : x.support) entries.emplace_back(B.multiply(k, inv_top), A.invert(v));
  return make_wreath_element(A, std::move(inv_top), entries);
}

/// Normal form of a word whose letters with index < |alphabet(A)| are A-letters
/// and the rest B-letters. Each A-letter sits at the key given by the product of
/// the B-letters to its right; A-letters sharing a key multiply left to right.
inline WreathElement collect(const Group& A, const Group& B, const Word& w) {
  const std::size_t na = A.alphabet().size();
  std::map<Element, Element> acc;
  Element suffix = B.identity();
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (it->generator < na) {
      Element a = A.letter(*it);
      auto [pos, inserted] = acc.try_emplace(suffix, a);
      if (!inserted) pos->second = A.multiply(a, pos->second);
    } else {
      suffix = B.multiply(B.letter({it->generator - na, it->sign}), suffix);
    }
  }
  WreathElement out{std::move(suffix), {}};
  const Element one = A.identity();
  for (auto& [key, value] : acc)
    if (value != one) out.support.emplace_back(key, std::move(value));
  return out;
}

/// The wreath word problem: trivial top and empty support.
inline bool wreath_wp(const Group& B, const WreathElement& x) {
  return x.top == B.identity() && x.support.empty();
}

}  // namespace wreathkit
