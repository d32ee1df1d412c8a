#pragma once

// Exact integer helpers, smooth factorization and the congruence-system solver
// used by the finite-order branch of the power problem.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace wreathkit {

/// Arbitrary-precision integer; expression templates off so arithmetic yields plain values.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                            boost::multiprecision::et_off>;

/// Default smoothness bound for torsion orders.
inline constexpr int kDefaultBeta = 64;

/// The distinguished modulus meaning "exact equality".
struct Infinity {
  friend constexpr bool operator==(Infinity, Infinity) { return true; }
};

class NotSmooth : public std::runtime_error {
 public:
  NotSmooth(const BigInt& cofactor, int beta)
      : std::runtime_error("number has prime factor above " + std::to_string(beta) +
                           " (cofactor " + cofactor.str() + ")"),
        cofactor_(cofactor) {}
  const BigInt& cofactor() const { return cofactor_; }

 private:
  BigInt cofactor_;
};

/// Non-negative remainder of a modulo n (n > 0).
inline BigInt mod_floor(const BigInt& a, const BigInt& n) {
  BigInt r = a % n;
  if (r < 0) r += n;
  return r;
}

/// Floor division for n != 0.
inline BigInt div_floor(const BigInt& a, const BigInt& n) {
  BigInt q = a / n;
  if ((a % n != 0) && ((a < 0) != (n < 0))) --q;
  return q;
}

inline BigInt gcd(BigInt a, BigInt b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    BigInt r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

inline BigInt lcm(const BigInt& a, const BigInt& b) {
  if (a == 0 || b == 0) return 0;
  BigInt l = a / gcd(a, b) * b;
  return l < 0 ? BigInt(-l) : l;
}

/// Inverse of a modulo m, for gcd(a, m) = 1 and m >= 1.
inline BigInt mod_inverse(const BigInt& a, const BigInt& m) {
  BigInt old_r = mod_floor(a, m), r = m;
  BigInt old_s = 1, s = 0;
  while (r != 0) {
    BigInt q = old_r / r;
    BigInt tmp = old_r - q * r;
    old_r = std::move(r);
    r = std::move(tmp);
    tmp = old_s - q * s;
    old_s = std::move(s);
    s = std::move(tmp);
  }
  if (old_r != 1) throw std::invalid_argument("mod_inverse: arguments not coprime");
  return mod_floor(old_s, m);
}

inline BigInt pow_int(BigInt base, unsigned long long exponent) {
  BigInt result = 1;
  while (exponent > 0) {
    if (exponent & 1ULL) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

/// A simultaneous-system constraint "x = residue (mod modulus)"; an infinite
/// modulus means x equals residue.
class Congruence {
 public:
  static Congruence modulo(const BigInt& residue, const BigInt& modulus) {
    if (modulus < 1) throw std::invalid_argument("Congruence: modulus must be >= 1");
    return Congruence(mod_floor(residue, modulus), modulus);
  }
  static Congruence exactly(const BigInt& value) { return Congruence(value, Infinity{}); }

  bool is_exact() const { return std::holds_alternative<Infinity>(modulus_); }
  const BigInt& residue() const { return residue_; }
  /// Finite modulus; throws for exact congruences.
  const BigInt& modulus() const { return std::get<BigInt>(modulus_); }

  bool contains(const BigInt& x) const {
    if (is_exact()) return x == residue_;
    return mod_floor(x - residue_, modulus()) == 0;
  }

  /// Smallest non-negative member for finite moduli, the value itself otherwise.
  const BigInt& smallest_non_negative() const { return residue_; }

  std::string str() const {
    return residue_.str() + " mod " + (is_exact() ? std::string("inf") : modulus().str());
  }

  friend bool operator==(const Congruence&, const Congruence&) = default;

 private:
  Congruence(BigInt residue, std::variant<BigInt, Infinity> modulus)
      : residue_(std::move(residue)), modulus_(std::move(modulus)) {}

  BigInt residue_;
  std::variant<BigInt, Infinity> modulus_;
};

struct PrimePower {
  BigInt prime;
  unsigned exponent = 0;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct SmoothFactorization {
  BigInt number;
  std::vector<PrimePower> factors;  // increasing primes

  BigInt product() const {
    BigInt p = 1;
    for (const auto& f : factors) p *= pow_int(f.prime, f.exponent);
    return p;
  }
};

/// Trial division by every prime up to beta; throws NotSmooth if a cofactor > 1 remains.
inline SmoothFactorization factor_smooth(const BigInt& n, int beta) {
  if (n < 1) throw std::invalid_argument("factor_smooth: n must be >= 1");
  if (beta < 2) throw std::invalid_argument("factor_smooth: beta must be >= 2");
  SmoothFactorization out{n, {}};
  BigInt rest = n;
  for (int p = 2; p <= beta && rest > 1; ++p) {
    unsigned e = 0;
    // Composite p never divides here: its prime factors were removed earlier.
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (e > 0) out.factors.push_back({BigInt(p), e});
  }
  if (rest > 1) throw NotSmooth(rest, beta);
  return out;
}

/// Solves a simultaneous system of congruences whose finite moduli are
/// beta-smooth. Returns the full solution set as one congruence, or nullopt.
inline std::optional<Congruence> crt_solve(std::span<const Congruence> system, int beta) {
  if (system.empty()) throw std::invalid_argument("crt_solve: empty system");

  std::optional<BigInt> exact;
  // prime -> (exponent, residue mod prime^exponent)
  std::map<BigInt, std::pair<unsigned, BigInt>> strongest;

  for (const auto& c : system) {
    if (c.is_exact()) {
      if (exact && *exact != c.residue()) return std::nullopt;
      exact = c.residue();
      continue;
    }
    for (const auto& [p, e] : factor_smooth(c.modulus(), beta).factors) {
      BigInt pe = pow_int(p, e);
      BigInt r = mod_floor(c.residue(), pe);
      auto it = strongest.find(p);
      if (it == strongest.end()) {
        strongest.emplace(p, std::make_pair(e, std::move(r)));
        continue;
      }
      auto& [e0, r0] = it->second;
      unsigned lo = std::min(e0, e);
      BigInt plo = pow_int(p, lo);
      if (mod_floor(r0, plo) != mod_floor(r, plo)) return std::nullopt;
      if (e > e0) {
        e0 = e;
        r0 = std::move(r);
      }
    }
  }

  BigInt modulus = 1, residue = 0;
  for (const auto& [p, er] : strongest) {
    BigInt pe = pow_int(p, er.first);
    // residue + modulus * s = er.second (mod pe)
    BigInt s = mod_floor((er.second - residue) * mod_inverse(modulus, pe), pe);
    residue += modulus * s;
    modulus *= pe;
  }

  if (exact) {
    if (mod_floor(*exact - residue, modulus) != 0) return std::nullopt;
    return Congruence::exactly(*exact);
  }
  return Congruence::modulo(residue, modulus);
}

inline std::optional<Congruence> crt_solve(std::initializer_list<Congruence> system, int beta) {
  return crt_solve(std::span<const Congruence>(system.begin(), system.size()), beta);
}

}  // namespace wreathkit
