#pragma once

#include "wreathkit/abelian.hpp"

namespace wreathkit {

/// G x H for arbitrary factors. Elements hold the two components as children.
class DirectProduct final : public Group {
 public:
  DirectProduct(GroupHandle left, GroupHandle right, int beta = kDefaultBeta)
      : left_(std::move(left)), right_(std::move(right)), beta_(beta) {
    const auto& l = left_->capabilities();
    const auto& r = right_->capabilities();
    caps_.is_abelian = l.is_abelian && r.is_abelian;
    caps_.is_torsion_free = l.is_torsion_free && r.is_torsion_free;
    if (l.torsion_smoothness_bound || r.torsion_smoothness_bound)
      caps_.torsion_smoothness_bound =
          std::max(l.torsion_smoothness_bound.value_or(0), r.torsion_smoothness_bound.value_or(0));
    const std::size_t n = left_->alphabet().size() + right_->alphabet().size();
    for (std::size_t i = 0; i < n; ++i) alphabet_.push_back("a" + std::to_string(i + 1));
  }

  const GroupHandle& left() const { return left_; }
  const GroupHandle& right() const { return right_; }

  std::string name() const override {
    return "product(" + left_->name() + ", " + right_->name() + ")";
  }
  const std::vector<std::string>& alphabet() const override { return alphabet_; }
  const Capabilities& capabilities() const override { return caps_; }

  Element pair(Element x, Element y) const { return Element({}, {std::move(x), std::move(y)}); }

  Element identity() const override { return pair(left_->identity(), right_->identity()); }
  Element generator(std::size_t index) const override {
    const std::size_t nl = left_->alphabet().size();
    if (index < nl) return pair(left_->generator(index), right_->identity());
    return pair(left_->identity(), right_->generator(index - nl));
  }
  Element multiply(const Element& x, const Element& y) const override {
    return pair(left_->multiply(x.children()[0], y.children()[0]),
                right_->multiply(x.children()[1], y.children()[1]));
  }
  Element invert(const Element& x) const override {
    return pair(left_->invert(x.children()[0]), right_->invert(x.children()[1]));
  }

  ConjugacyAnswer conjugacy(const Element& g, const Element& h) const override {
    auto a = left_->conjugacy(g.children()[0], h.children()[0]);
    if (!a.conjugate) return a;
    auto b = right_->conjugacy(g.children()[1], h.children()[1]);
    if (!b.conjugate) return b;
    if (a.witness && b.witness && !a.top_only && !b.top_only)
      return ConjugacyAnswer::yes(pair(*a.witness, *b.witness));
    return ConjugacyAnswer::yes();
  }

  /// Intersects the componentwise solution sets.
  PowerAnswer power_problem(const Element& g, const Element& h) const override {
    std::vector<Congruence> cs;
    for (std::size_t i = 0; i < 2; ++i) {
      const Group& G = i == 0 ? *left_ : *right_;
      auto k = G.pp(g.children()[i], h.children()[i]);
      if (!k) return std::nullopt;
      Order o = G.order(g.children()[i]);
      cs.push_back(o.is_finite() ? Congruence::modulo(*k, o.value()) : Congruence::exactly(*k));
    }
    auto s = crt_solve(cs, beta_);
    if (!s) return std::nullopt;
    return s->residue();
  }

  std::string render(const Element& g) const override {
    return "<" + left_->render(g.children()[0]) + ", " + right_->render(g.children()[1]) + ">";
  }

  Word to_word(const Element& g) const override {
    Word w = left_->to_word(g.children()[0]);
    const std::size_t nl = left_->alphabet().size();
    for (Letter l : right_->to_word(g.children()[1])) w.push_back({l.generator + nl, l.sign});
    return w;
  }

 private:
  GroupHandle left_, right_;
  int beta_;
  std::vector<std::string> alphabet_;
  Capabilities caps_;
};

/// Direct product; two abelian groups merge into a single abelian group.
inline GroupHandle make_product(const GroupHandle& left, const GroupHandle& right,
                                int beta = kDefaultBeta) {
  auto a = std::dynamic_pointer_cast<const AbelianGroup>(left);
  auto b = std::dynamic_pointer_cast<const AbelianGroup>(right);
  if (a && b) {
    auto moduli = a->moduli();
    moduli.insert(moduli.end(), b->moduli().begin(), b->moduli().end());
    return std::make_shared<const AbelianGroup>(std::move(moduli), beta);
  }
  return std::make_shared<const DirectProduct>(left, right, beta);
}

}  // namespace wreathkit
