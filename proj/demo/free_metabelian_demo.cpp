// The free metabelian group S(2,2) inside Z^2 wr Z^2.

#include "wreathkit/dsl.hpp"

#include <iostream>

int main() {
  using namespace wreathkit;
  const FreeSolvableGroup s(2, 2);
  auto embed = [&](const char* text) { return s.magnus_embed(parse_word(s, text)); };

  const Element c = embed("x1^-1 x2^-1 x1 x2");
  std::cout << "[x1,x2] -> " << s.render(c) << "\n";

  // Commutators of commutators vanish in a metabelian group.
  const Element r = embed("x2^-1 x1^-1 x2 x1 x2^-1 x1 x2 x1^-1 x1^-1 x2^-1 x1 x2 x1 x2^-1 x1^-1 x2");
  std::cout << "[[x1,x2],[x1^-1,x2]] trivial: " << (s.wp(r) ? "yes" : "no") << "\n";

  const Element z = embed("x1 x2^2");
  std::cout << "[x1,x2] ~ its conjugate by x1 x2^2: "
            << (s.cp(c, s.conjugate_by(c, z)) ? "yes" : "no") << "\n";
  std::cout << "x1 ~ x2: " << (s.cp(s.generator(0), s.generator(1)) ? "yes" : "no") << "\n";
}
