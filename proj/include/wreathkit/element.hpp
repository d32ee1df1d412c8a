#pragma once

#include "wreathkit/arith.hpp"

#include <compare>
#include <cstddef>
#include <memory>
#include <utility>
#include <vector>

namespace wreathkit {

/// Canonical group element. Each concrete group chooses a layout of integers
/// and child elements; two elements of one group are equal iff they denote the
/// same group element. Values are immutable and cheap to copy.
class Element {
 public:
  Element() : node_(empty_node()) {}
  explicit Element(std::vector<BigInt> ints, std::vector<Element> children = {})
      : node_(ints.empty() && children.empty()
                  ? empty_node()
                  : std::make_shared<const Node>(Node{std::move(ints), std::move(children)})) {}

  const std::vector<BigInt>& ints() const { return node_->ints; }
  const std::vector<Element>& children() const { return node_->children; }

  friend bool operator==(const Element& a, const Element& b) {
    return a.node_ == b.node_ ||
           (a.node_->ints == b.node_->ints && a.node_->children == b.node_->children);
  }

  friend std::strong_ordering operator<=>(const Element& a, const Element& b) {
    if (a.node_ == b.node_) return std::strong_ordering::equal;
    const auto& x = a.node_->ints;
    const auto& y = b.node_->ints;
    if (x.size() != y.size()) return x.size() <=> y.size();
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] < y[i]) return std::strong_ordering::less;
      if (y[i] < x[i]) return std::strong_ordering::greater;
    }
    const auto& u = a.node_->children;
    const auto& v = b.node_->children;
    if (u.size() != v.size()) return u.size() <=> v.size();
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (auto c = u[i] <=> v[i]; c != 0) return c;
    }
    return std::strong_ordering::equal;
  }

 private:
  struct Node {
    std::vector<BigInt> ints;
    std::vector<Element> children;
  };

  static const std::shared_ptr<const Node>& empty_node() {
    static const std::shared_ptr<const Node> node = std::make_shared<const Node>();
    return node;
  }

  std::shared_ptr<const Node> node_;
};

struct Letter {
  std::size_t generator = 0;
  int sign = 1;  // +1 or -1
  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

inline Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->generator, -it->sign});
  return out;
}

inline Word concat(Word a, const Word& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace wreathkit
