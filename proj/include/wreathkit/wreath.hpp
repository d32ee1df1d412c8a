#pragma once

#include "wreathkit/conjugacy.hpp"
#include "wreathkit/power.hpp"

namespace wreathkit {

struct WreathOptions {
  int beta = kDefaultBeta;
  int witness_radius = 8;
};

/// A wr B over two arbitrary groups. Generators are the A-generators placed at
/// the identity of B, named a1.., followed by the B-generators, named t1.. for a
/// leaf B. When B is itself a wreath product its names move one level down:
/// unqualified names gain the prefix "l2." and "lL." becomes "l(L+1).".
class WreathGroup final : public Group {
 public:
  WreathGroup(GroupHandle a, GroupHandle b, WreathOptions options = {})
      : a_(std::move(a)), b_(std::move(b)), options_(options) {
    const auto& ca = a_->capabilities();
    const auto& cb = b_->capabilities();
    caps_.is_abelian = a_->alphabet().empty() || b_->alphabet().empty()
                           ? ca.is_abelian && cb.is_abelian
                           : false;
    caps_.is_torsion_free = ca.is_torsion_free && cb.is_torsion_free;
    if (ca.torsion_smoothness_bound || cb.torsion_smoothness_bound)
      caps_.torsion_smoothness_bound = std::max(ca.torsion_smoothness_bound.value_or(0),
                                                cb.torsion_smoothness_bound.value_or(0));
    for (std::size_t i = 0; i < a_->alphabet().size(); ++i)
      alphabet_.push_back("a" + std::to_string(i + 1));
    if (dynamic_cast<const WreathGroup*>(b_.get())) {
      for (const auto& n : b_->alphabet()) alphabet_.push_back(demote(n));
    } else {
      for (std::size_t i = 0; i < b_->alphabet().size(); ++i)
        alphabet_.push_back("t" + std::to_string(i + 1));
    }
  }

  const Group& base() const { return *a_; }
  const Group& top() const { return *b_; }
  const GroupHandle& base_handle() const { return a_; }
  const GroupHandle& top_handle() const { return b_; }
  const WreathOptions& options() const { return options_; }

  std::string name() const override { return "wr(" + a_->name() + ", " + b_->name() + ")"; }
  const std::vector<std::string>& alphabet() const override { return alphabet_; }
  const Capabilities& capabilities() const override { return caps_; }

  Element identity() const override { return encode({b_->identity(), {}}); }
  Element generator(std::size_t index) const override {
    const std::size_t na = a_->alphabet().size();
    if (index < na) return encode({b_->identity(), {{b_->identity(), a_->generator(index)}}});
    return encode({b_->generator(index - na), {}});
  }
  Element multiply(const Element& x, const Element& y) const override {
    return encode(wreath_multiply(*a_, *b_, decode(x), decode(y)));
  }
  Element invert(const Element& x) const override {
    return encode(wreath_invert(*a_, *b_, decode(x)));
  }
  Element evaluate(const Word& w) const override { return encode(collect(*a_, *b_, w)); }

  ConjugacyAnswer conjugacy(const Element& g, const Element& h) const override {
    ConjugacyAnswer a =
        conjugacy_test(*a_, *b_, decode(g), decode(h), {options_.witness_radius, false});
    a.top_only = a.witness.has_value();
    return a;
  }
  PowerAnswer power_problem(const Element& g, const Element& h) const override {
    return power_test(*a_, *b_, decode(g), decode(h), options_.beta);
  }

  std::string render(const Element& g) const override {
    const WreathElement x = decode(g);
    std::string out = "(" + b_->render(x.top) + "; {";
    for (std::size_t i = 0; i < x.support.size(); ++i) {
      if (i) out += ", ";
      out += b_->render(x.support[i].first) + ": " + a_->render(x.support[i].second);
    }
    return out + "})";
  }

  /// The top as a B-word, then key^-1 value key for every support entry.
  Word to_word(const Element& g) const override {
    const WreathElement x = decode(g);
    const std::size_t na = a_->alphabet().size();
    auto lift = [na](Word w) {
      for (auto& l : w) l.generator += na;
      return w;
    };
    Word out = lift(b_->to_word(x.top));
    for (const auto& [key, value] : x.support) {
      const Word k = lift(b_->to_word(key));
      out = concat(std::move(out), inverse(k));
      out = concat(std::move(out), a_->to_word(value));
      out = concat(std::move(out), k);
    }
    return out;
  }

  Element from_wreath(const WreathElement& x) const { return encode(x); }
  WreathElement to_wreath(const Element& g) const { return decode(g); }

 private:
  static std::string demote(const std::string& n) {
    if (n.size() > 1 && n[0] == 'l') {
      const auto dot = n.find('.');
      if (dot != std::string::npos)
        return "l" + std::to_string(std::stoi(n.substr(1, dot - 1)) + 1) + n.substr(dot);
    }
    return "l2." + n;
  }

  GroupHandle a_, b_;
  WreathOptions options_;
  std::vector<std::string> alphabet_;
  Capabilities caps_;
};

inline std::shared_ptr<const WreathGroup> make_wreath(GroupHandle a, GroupHandle b,
                                                      WreathOptions options = {}) {
  return std::make_shared<const WreathGroup>(std::move(a), std::move(b), options);
}

}  // namespace wreathkit
