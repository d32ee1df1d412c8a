#pragma once

// Free solvable groups S_{d,r} through the Magnus embedding
//   S_{d,r} -> Z^r wr S_{d-1,r},   x_i -> (x_i, {1: e_i}),
// iterated down to S_{1,r} = Z^r. Elements are the embedded images.

#include "wreathkit/abelian.hpp"
#include "wreathkit/wreath.hpp"

namespace wreathkit {

class FreeSolvableGroup final : public Group {
 public:
  FreeSolvableGroup(int degree, int rank, int beta = kDefaultBeta)
      : degree_(degree), rank_(rank) {
    if (degree < 1) throw std::invalid_argument("freesolvable: degree must be >= 1");
    if (rank < 1) throw std::invalid_argument("freesolvable: rank must be >= 1");
    caps_.is_torsion_free = true;
    caps_.is_abelian = degree == 1 || rank == 1;
    for (int i = 0; i < rank; ++i) alphabet_.push_back("x" + std::to_string(i + 1));

    auto lattice = AbelianGroup::free(static_cast<std::size_t>(rank));
    if (degree == 1) {
      inner_ = lattice;
    } else {
      lower_ = std::make_shared<const FreeSolvableGroup>(degree - 1, rank, beta);
      // Witnesses are not reported for free solvable groups, so skip their search.
      inner_ = make_wreath(lattice, lower_, {beta, 0});
    }
    const std::size_t r = static_cast<std::size_t>(rank);
    for (std::size_t i = 0; i < r; ++i) {
      if (degree == 1) {
        generators_.push_back(inner_->generator(i));
      } else {
        generators_.push_back(inner_->multiply(inner_->generator(r + i), inner_->generator(i)));
      }
    }
  }

  int degree() const { return degree_; }
  int rank() const { return rank_; }
  /// Z^r for degree 1, Z^r wr S_{d-1,r} otherwise.
  const Group& inner() const { return *inner_; }
  const GroupHandle& inner_handle() const { return inner_; }
  /// S_{d-1,r}, absent for degree 1.
  const std::shared_ptr<const FreeSolvableGroup>& lower() const { return lower_; }

  std::string name() const override {
    return "freesolvable(" + std::to_string(degree_) + ", " + std::to_string(rank_) + ")";
  }
  const std::vector<std::string>& alphabet() const override { return alphabet_; }
  const Capabilities& capabilities() const override { return caps_; }

  Element identity() const override { return inner_->identity(); }
  Element generator(std::size_t index) const override { return generators_.at(index); }
  Element multiply(const Element& x, const Element& y) const override {
    return inner_->multiply(x, y);
  }
  Element invert(const Element& x) const override { return inner_->invert(x); }

  /// The embedding preserves conjugacy.
  ConjugacyAnswer conjugacy(const Element& g, const Element& h) const override {
    if (inner_->cp(g, h)) return ConjugacyAnswer::yes();
    return ConjugacyAnswer::no();
  }
  PowerAnswer power_problem(const Element& g, const Element& h) const override {
    return inner_->pp(g, h);
  }

  std::string render(const Element& g) const override { return inner_->render(g); }

  /// Image of a word over x1..xr.
  Element magnus_embed(const Word& w) const { return evaluate(w); }

 private:
  int degree_, rank_;
  GroupHandle inner_;
  std::shared_ptr<const FreeSolvableGroup> lower_;
  std::vector<Element> generators_;
  std::vector<std::string> alphabet_;
  Capabilities caps_;
};

}  // namespace wreathkit
