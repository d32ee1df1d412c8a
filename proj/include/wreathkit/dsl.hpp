#pragma once

// Group descriptions and words in text form.
//
//   group := "Z" | "Z^" r | "Z/" n | "1" | "BS(1," q ")" | "product(" group "," group ")"
//          | "wr(" group "," group ")" | "lwr(" group "," d ")"
//          | "rwr(" group "," group "," d ")" | "freesolvable(" d "," r ")"
//   word  := { name [ "^" signed-integer ] }   (whitespace separated; empty = identity)
//
// lwr(A, d) is A wr (A wr (... wr (A wr 1))) with d factors of A, and
// rwr(A, B, d) is (...((A wr B) wr B) ...) wr B with d copies of B.

#include "wreathkit/abelian.hpp"
#include "wreathkit/baumslag_solitar.hpp"
#include "wreathkit/direct_product.hpp"
#include "wreathkit/solvable.hpp"
#include "wreathkit/wreath.hpp"

#include <cctype>
#include <charconv>

namespace wreathkit {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class UnknownGenerator : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GroupOptions {
  int beta = kDefaultBeta;
  int witness_radius = 8;
};

namespace detail {

class GroupParser {
 public:
  GroupParser(std::string_view text, GroupOptions options) : text_(text), options_(options) {}

  GroupHandle parse() {
    GroupHandle g = group();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return g;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }

  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }

  std::uint64_t integer(std::uint64_t min, const char* what) {
    skip_space();
    const std::size_t start = pos_;
    std::uint64_t value = 0;
    auto [end, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec != std::errc() || end == text_.data() + pos_) fail(std::string("expected ") + what);
    pos_ = static_cast<std::size_t>(end - text_.data());
    if (value < min) {
      pos_ = start;
      fail(std::string(what) + " must be >= " + std::to_string(min));
    }
    return value;
  }

  GroupHandle wreath(GroupHandle a, GroupHandle b) const {
    return make_wreath(std::move(a), std::move(b), {options_.beta, options_.witness_radius});
  }

  GroupHandle group() {
    skip_space();
    // Longer keywords first so that prefixes do not shadow them.
    if (accept("freesolvable(")) {
      const auto d = integer(1, "degree");
      expect(",");
      const auto r = integer(1, "rank");
      expect(")");
      return std::make_shared<const FreeSolvableGroup>(static_cast<int>(d), static_cast<int>(r),
                                                       options_.beta);
    }
    if (accept("product(")) {
      GroupHandle l = group();
      expect(",");
      GroupHandle r = group();
      expect(")");
      return make_product(l, r, options_.beta);
    }
    if (accept("lwr(")) {
      GroupHandle a = group();
      expect(",");
      const auto d = integer(1, "depth");
      expect(")");
      GroupHandle g = wreath(a, AbelianGroup::trivial());
      for (std::uint64_t i = 1; i < d; ++i) g = wreath(a, g);
      return g;
    }
    if (accept("rwr(")) {
      GroupHandle a = group();
      expect(",");
      GroupHandle b = group();
      expect(",");
      const auto d = integer(1, "depth");
      expect(")");
      GroupHandle g = wreath(a, b);
      for (std::uint64_t i = 1; i < d; ++i) g = wreath(g, b);
      return g;
    }
    if (accept("wr(")) {
      GroupHandle a = group();
      expect(",");
      GroupHandle b = group();
      expect(")");
      return wreath(a, b);
    }
    if (accept("BS(")) {
      const std::size_t at = pos_;
      if (integer(1, "1") != 1) {
        pos_ = at;
        fail("only BS(1,q) is supported");
      }
      expect(",");
      const auto q = integer(2, "q");
      expect(")");
      return std::make_shared<const BaumslagSolitarGroup>(q);
    }
    if (accept("Z/")) {
      const auto n = integer(2, "modulus");
      return std::make_shared<const AbelianGroup>(std::vector<std::uint64_t>{n}, options_.beta);
    }
    if (accept("Z^")) return AbelianGroup::free(integer(1, "rank"));
    if (accept("Z")) return AbelianGroup::free(1);
    if (accept("1")) return AbelianGroup::trivial();
    fail("expected a group");
  }

  std::string_view text_;
  GroupOptions options_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Throws ParseError on malformed input and SmoothnessError when a torsion
/// order has a prime factor above beta.
inline GroupHandle parse_group(std::string_view text, GroupOptions options = {}) {
  return detail::GroupParser(text, options).parse();
}

/// Words are stored letter by letter, so exponents are bounded.
inline constexpr unsigned long long kMaxWordExponent = 1'000'000;

inline Word parse_word(const Group& g, std::string_view text) {
  const auto& names = g.alphabet();
  Word out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    const std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    std::string_view token = text.substr(start, pos - start);
    long long exponent = 1;
    std::string_view name = token;
    if (auto caret = token.find('^'); caret != std::string_view::npos) {
      name = token.substr(0, caret);
      std::string_view digits = token.substr(caret + 1);
      if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
      auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), exponent);
      if (digits.empty() || ec != std::errc() || end != digits.data() + digits.size())
        throw ParseError("bad exponent in '" + std::string(token) + "'", start + caret + 1);
    }
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end())
      throw UnknownGenerator("unknown generator '" + std::string(name) + "' for " + g.name());
    const Letter letter{static_cast<std::size_t>(it - names.begin()), exponent < 0 ? -1 : 1};
    const unsigned long long count =
        exponent < 0 ? 0ULL - static_cast<unsigned long long>(exponent) : exponent;
    if (count > kMaxWordExponent)
      throw ParseError("exponent too large in '" + std::string(token) + "'", start + name.size() + 1);
    out.insert(out.end(), count, letter);
  }
  return out;
}

/// Inverse of parse_word up to rewriting runs of one letter as a power.
inline std::string format_word(const Group& g, const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j].generator == w[i].generator && w[j].sign == w[i].sign) ++j;
    const long long n = static_cast<long long>(j - i) * w[i].sign;
    if (!out.empty()) out += ' ';
    out += g.alphabet()[w[i].generator];
    if (n != 1) out += "^" + std::to_string(n);
    i = j;
  }
  return out;
}

}  // namespace wreathkit
