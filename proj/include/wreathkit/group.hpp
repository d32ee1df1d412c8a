#pragma once

// The contract shared by every concrete group: canonical elements, the word
// problem, conjugacy, and the power problem, plus the problems derived from it.

#include "wreathkit/element.hpp"

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace wreathkit {

/// Raised when a group lacks a capability an algorithm needs.
class Unsupported : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// NoSolution (nullopt) or the exponent k with v^k = w. For finite-order v the
/// exponent is the smallest non-negative one.
using PowerAnswer = std::optional<BigInt>;

/// Element order: a positive integer or infinity.
class Order {
 public:
  static Order finite(BigInt n) { return Order(std::move(n)); }
  static Order infinite() { return Order(); }

  bool is_finite() const { return value_.has_value(); }
  const BigInt& value() const { return value_.value(); }
  std::string str() const { return is_finite() ? value_->str() : std::string("infinity"); }

  friend bool operator==(const Order&, const Order&) = default;

 private:
  Order() = default;
  explicit Order(BigInt n) : value_(std::move(n)) {}
  std::optional<BigInt> value_;
};

/// Answer of a conjugacy query. The witness is a conjugator z with z^-1 g z = h,
/// except for wreath products, where it is only the top component d of one,
/// satisfying d*b = c*d in the top group; top_only marks that case.
struct ConjugacyAnswer {
  bool conjugate = false;
  std::optional<Element> witness;
  bool top_only = false;

  static ConjugacyAnswer no() { return {}; }
  static ConjugacyAnswer yes(std::optional<Element> w = std::nullopt) {
    return {true, std::move(w)};
  }
};

struct Capabilities {
  bool is_abelian = false;
  bool is_torsion_free = false;
  /// Largest prime dividing a torsion order; nullopt when there is no torsion.
  std::optional<int> torsion_smoothness_bound;
};

class Group {
 public:
  virtual ~Group() = default;

  /// DSL-style description, e.g. "wr(Z/2, Z)".
  virtual std::string name() const = 0;
  /// Generator names; each generator implicitly comes with its inverse letter.
  virtual const std::vector<std::string>& alphabet() const = 0;
  virtual const Capabilities& capabilities() const = 0;

  virtual Element identity() const = 0;
  virtual Element generator(std::size_t index) const = 0;
  virtual Element multiply(const Element& x, const Element& y) const = 0;
  virtual Element invert(const Element& x) const = 0;

  virtual ConjugacyAnswer conjugacy(const Element& g, const Element& h) const = 0;
  virtual PowerAnswer power_problem(const Element& g, const Element& h) const = 0;

  virtual std::string render(const Element& g) const = 0;
  /// A word representing g. Groups without a normal-form word throw Unsupported.
  virtual Word to_word(const Element&) const {
    throw Unsupported(name() + ": no word normal form");
  }

  virtual Element evaluate(const Word& w) const {
    Element acc = identity();
    for (const auto& l : w) acc = multiply(acc, letter(l));
    return acc;
  }

  Element letter(const Letter& l) const {
    if (l.generator >= alphabet().size()) throw std::out_of_range("generator index out of range");
    Element g = generator(l.generator);
    return l.sign > 0 ? g : invert(g);
  }

  bool wp(const Element& g) const { return g == identity(); }
  bool cp(const Element& g, const Element& h) const { return conjugacy(g, h).conjugate; }
  PowerAnswer pp(const Element& g, const Element& h) const { return power_problem(g, h); }

  /// h in the cyclic subgroup generated by g.
  bool csgmp(const Element& g, const Element& h) const { return pp(g, h).has_value(); }

  /// h in the cyclic submonoid {g^k : k >= 0}.
  bool csmmp(const Element& g, const Element& h) const {
    auto k = pp(g, h);
    if (!k) return false;
    // For finite-order g the answer is already the smallest non-negative one.
    return *k >= 0;
  }

  Order order(const Element& g) const {
    if (capabilities().is_torsion_free)
      return g == identity() ? Order::finite(1) : Order::infinite();
    auto k = pp(g, invert(g));
    if (k && *k >= 0) return Order::finite(*k + 1);
    return Order::infinite();
  }

  Element power(const Element& g, const BigInt& k) const {
    Element base = k < 0 ? invert(g) : g;
    BigInt e = k < 0 ? BigInt(-k) : k;
    Element acc = identity();
    while (e > 0) {
      if ((e & 1) != 0) acc = multiply(acc, base);
      e >>= 1;
      if (e > 0) base = multiply(base, base);
    }
    return acc;
  }

  Element conjugate_by(const Element& g, const Element& z) const {
    return multiply(multiply(invert(z), g), z);
  }
};

using GroupHandle = std::shared_ptr<const Group>;

}  // namespace wreathkit
