#pragma once

#include "wreathkit/group.hpp"

#include <cstdint>
#include <sstream>

namespace wreathkit {

class SmoothnessError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Finitely generated abelian group Z/m_1 x ... x Z/m_k, where a modulus of 0
/// denotes an infinite cyclic factor. Elements store one integer per
/// coordinate, torsion coordinates reduced into [0, m_i).
class AbelianGroup final : public Group {
 public:
  explicit AbelianGroup(std::vector<std::uint64_t> moduli, int beta = kDefaultBeta)
      : moduli_(std::move(moduli)), beta_(beta) {
    caps_.is_abelian = true;
    caps_.is_torsion_free = true;
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
      alphabet_.push_back("a" + std::to_string(i + 1));
      const std::uint64_t n = moduli_[i];
      if (n == 0) continue;
      if (n < 2) throw std::invalid_argument("AbelianGroup: torsion modulus must be >= 2");
      caps_.is_torsion_free = false;
      SmoothFactorization fac;
      try {
        fac = factor_smooth(BigInt(n), beta_);
      } catch (const NotSmooth&) {
        throw SmoothnessError("Z/" + std::to_string(n) + " is not " + std::to_string(beta_) +
                              "-smooth");
      }
      int largest = fac.factors.back().prime.convert_to<int>();
      caps_.torsion_smoothness_bound = std::max(caps_.torsion_smoothness_bound.value_or(0), largest);
    }
  }

  /// Z^rank.
  static std::shared_ptr<const AbelianGroup> free(std::size_t rank) {
    return std::make_shared<const AbelianGroup>(std::vector<std::uint64_t>(rank, 0));
  }
  static std::shared_ptr<const AbelianGroup> cyclic(std::uint64_t n, int beta = kDefaultBeta) {
    return std::make_shared<const AbelianGroup>(std::vector<std::uint64_t>{n}, beta);
  }
  static std::shared_ptr<const AbelianGroup> trivial() {
    return std::make_shared<const AbelianGroup>(std::vector<std::uint64_t>{});
  }

  const std::vector<std::uint64_t>& moduli() const { return moduli_; }
  std::size_t rank() const { return moduli_.size(); }
  int beta() const { return beta_; }

  std::string name() const override {
    if (moduli_.empty()) return "1";
    std::vector<std::string> parts;
    for (std::size_t i = 0; i < moduli_.size();) {
      if (moduli_[i] == 0) {
        std::size_t j = i;
        while (j < moduli_.size() && moduli_[j] == 0) ++j;
        parts.push_back(j - i == 1 ? "Z" : "Z^" + std::to_string(j - i));
        i = j;
      } else {
        parts.push_back("Z/" + std::to_string(moduli_[i]));
        ++i;
      }
    }
    std::string out = parts.back();
    for (std::size_t i = parts.size() - 1; i-- > 0;) out = "product(" + parts[i] + ", " + out + ")";
    return out;
  }

  const std::vector<std::string>& alphabet() const override { return alphabet_; }
  const Capabilities& capabilities() const override { return caps_; }

  Element identity() const override { return Element(std::vector<BigInt>(moduli_.size(), 0)); }

  Element generator(std::size_t index) const override {
    std::vector<BigInt> v(moduli_.size(), 0);
    v.at(index) = 1;
    return make(std::move(v));
  }

  Element multiply(const Element& x, const Element& y) const override {
    std::vector<BigInt> v(moduli_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = x.ints()[i] + y.ints()[i];
    return make(std::move(v));
  }

  Element invert(const Element& x) const override {
    std::vector<BigInt> v(moduli_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = -x.ints()[i];
    return make(std::move(v));
  }

  Element from_coordinates(std::vector<BigInt> coords) const {
    if (coords.size() != moduli_.size()) throw std::invalid_argument("AbelianGroup: wrong arity");
    return make(std::move(coords));
  }

  ConjugacyAnswer conjugacy(const Element& g, const Element& h) const override {
    if (g == h) return ConjugacyAnswer::yes(identity());
    return ConjugacyAnswer::no();
  }

  /// Solves k*u = v coordinate-wise. Free coordinates force k exactly; each
  /// torsion coordinate contributes the congruence found by scanning [0, m_i).
  PowerAnswer power_problem(const Element& u, const Element& v) const override {
    std::vector<Congruence> constraints;
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
      const BigInt& ui = u.ints()[i];
      const BigInt& vi = v.ints()[i];
      const std::uint64_t n = moduli_[i];
      if (n == 0) {
        if (ui == 0) {
          if (vi != 0) return std::nullopt;
          continue;
        }
        if (vi % ui != 0) return std::nullopt;
        constraints.push_back(Congruence::exactly(vi / ui));
        continue;
      }
      const auto us = ui.convert_to<std::uint64_t>();
      const auto vs = vi.convert_to<std::uint64_t>();
      std::optional<std::uint64_t> first;
      std::uint64_t period = n;
      std::uint64_t acc = 0;  // k * u mod n
      for (std::uint64_t k = 0; k < n; ++k) {
        if (!first && acc == vs) first = k;
        if (k > 0 && acc == 0) {
          period = k;
          break;
        }
        acc = (acc + us) % n;
      }
      if (!first) return std::nullopt;
      constraints.push_back(Congruence::modulo(BigInt(*first), BigInt(period)));
    }
    if (constraints.empty()) return BigInt(0);
    auto solved = crt_solve(constraints, beta_);
    if (!solved) return std::nullopt;
    return solved->residue();
  }

  std::string render(const Element& g) const override {
    const auto& c = g.ints();
    if (c.empty()) return "1";
    if (c.size() == 1) return c[0].str();
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? ", " : "") << c[i];
    os << ')';
    return os.str();
  }

  Word to_word(const Element& g) const override {
    Word w;
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
      const BigInt& c = g.ints()[i];
      const int sign = c < 0 ? -1 : 1;
      for (BigInt j = 0; j < abs(c); ++j) w.push_back({i, sign});
    }
    return w;
  }

 private:
  Element make(std::vector<BigInt> v) const {
    for (std::size_t i = 0; i < v.size(); ++i)
      if (moduli_[i] != 0) v[i] = mod_floor(v[i], BigInt(moduli_[i]));
    return Element(std::move(v));
  }

  std::vector<std::uint64_t> moduli_;
  int beta_;
  std::vector<std::string> alphabet_;
  Capabilities caps_;
};

}  // namespace wreathkit
