#pragma once

#include "wreathkit/group.hpp"

#include <cstdint>

namespace wreathkit {

/// BS(1,q) = <a, t | t a t^-1 = a^q>, realized as Z[1/q] x| Z with
/// (r, m) * (s, n) = (r + q^m s, m + n).
///
/// Elements store [m, numerator, e] where r = numerator / q^e, e >= 0, and the
/// numerator is not divisible by q unless it is zero (then e = 0).
class BaumslagSolitarGroup final : public Group {
 public:
  struct Value {
    BigInt numerator;
    std::uint64_t exponent = 0;  // r = numerator / q^exponent
    BigInt m;
  };

  explicit BaumslagSolitarGroup(std::uint64_t q) : q_(q) {
    if (q < 2) throw std::invalid_argument("BS(1,q) requires q >= 2");
    caps_.is_torsion_free = true;
  }

  std::uint64_t q() const { return q_; }

  std::string name() const override { return "BS(1," + std::to_string(q_) + ")"; }
  const std::vector<std::string>& alphabet() const override { return alphabet_; }
  const Capabilities& capabilities() const override { return caps_; }

  Element identity() const override { return make({0, 0, 0}); }
  Element generator(std::size_t index) const override {
    if (index == 0) return make({1, 0, 0});
    if (index == 1) return make({0, 0, 1});
    throw std::out_of_range("BS(1,q) has two generators");
  }

  Element make(Value v) const {
    if (v.numerator == 0) {
      v.exponent = 0;
    } else {
      while (v.exponent > 0 && v.numerator % q_ == 0) {
        v.numerator /= q_;
        --v.exponent;
      }
    }
    return Element({std::move(v.m), std::move(v.numerator), BigInt(v.exponent)});
  }

  Value value(const Element& x) const {
    return {x.ints()[1], x.ints()[2].convert_to<std::uint64_t>(), x.ints()[0]};
  }

  Element multiply(const Element& x, const Element& y) const override {
    Value a = value(x), b = value(y);
    // q^m * s as numerator / q^e
    const long long m = small(a.m);
    BigInt snum = b.numerator;
    std::uint64_t se = b.exponent;
    if (m >= 0) {
      snum *= pow_int(q_, static_cast<unsigned long long>(m));
    } else {
      se += static_cast<std::uint64_t>(-m);
    }
    return make(add(a.numerator, a.exponent, snum, se, a.m + b.m));
  }

  Element invert(const Element& x) const override {
    // (r, m)^-1 = (-q^-m r, -m)
    Value a = value(x);
    const long long m = small(a.m);
    BigInt num = -a.numerator;
    std::uint64_t e = a.exponent;
    if (m >= 0) {
      e += static_cast<std::uint64_t>(m);
    } else {
      num *= pow_int(q_, static_cast<unsigned long long>(-m));
    }
    return make({std::move(num), e, -a.m});
  }

  /// x^l via the geometric series r * (q^{ml} - 1) / (q^m - 1).
  Element closed_power(const Element& x, const BigInt& l) const {
    if (l == 0) return identity();
    if (l < 0) return closed_power(invert(x), -l);
    Value a = value(x);
    const long long m = small(a.m);
    const auto count = l.convert_to<unsigned long long>();
    if (m == 0) return make({a.numerator * l, a.exponent, 0});
    const auto am = static_cast<unsigned long long>(m > 0 ? m : -m);
    BigInt sum = (pow_int(q_, am * count) - 1) / (pow_int(q_, am) - 1);
    std::uint64_t e = a.exponent;
    if (m < 0) e += am * (count - 1);
    return make({a.numerator * sum, e, a.m * l});
  }

  ConjugacyAnswer conjugacy(const Element&, const Element&) const override {
    throw Unsupported(name() + ": conjugacy problem not provided");
  }

  /// Case analysis on the t-exponents of x = (r, m) and y = (s, n).
  PowerAnswer power_problem(const Element& x, const Element& y) const override {
    Value a = value(x), b = value(y);
    if (b.m != 0) {
      if (a.m == 0 || b.m % a.m != 0) return std::nullopt;
      BigInt l = b.m / a.m;
      if (closed_power(x, l) == y) return l;
      return std::nullopt;
    }
    if (b.numerator == 0) return BigInt(0);
    if (a.m != 0) return std::nullopt;
    if (a.numerator == 0) return std::nullopt;
    // l = s / r
    BigInt num = b.numerator * pow_int(q_, a.exponent);
    BigInt den = a.numerator * pow_int(q_, b.exponent);
    if (num % den != 0) return std::nullopt;
    return BigInt(num / den);
  }

  std::string render(const Element& x) const override {
    Value a = value(x);
    std::string r = a.numerator.str();
    if (a.exponent > 0) r += "/" + std::to_string(q_) + "^" + std::to_string(a.exponent);
    return "(" + r + ", " + a.m.str() + ")";
  }

  /// t^-e a^num t^e t^m.
  Word to_word(const Element& x) const override {
    Value v = value(x);
    Word w;
    for (std::uint64_t i = 0; i < v.exponent; ++i) w.push_back({1, -1});
    const int sign = v.numerator < 0 ? -1 : 1;
    for (BigInt i = 0; i < abs(v.numerator); ++i) w.push_back({0, sign});
    for (std::uint64_t i = 0; i < v.exponent; ++i) w.push_back({1, 1});
    const int tsign = v.m < 0 ? -1 : 1;
    for (BigInt i = 0; i < abs(v.m); ++i) w.push_back({1, tsign});
    return w;
  }

 private:
  static long long small(const BigInt& m) {
    if (abs(m) > BigInt(1) << 20) throw std::overflow_error("BS(1,q): t-exponent too large");
    return m.convert_to<long long>();
  }

  Value add(const BigInt& n1, std::uint64_t e1, const BigInt& n2, std::uint64_t e2,
            BigInt m) const {
    const std::uint64_t e = std::max(e1, e2);
    BigInt num = n1 * pow_int(q_, e - e1) + n2 * pow_int(q_, e - e2);
    return {std::move(num), e, std::move(m)};
  }

  std::uint64_t q_;
  std::vector<std::string> alphabet_{"a", "t"};
  Capabilities caps_;
};

}  // namespace wreathkit
