// Conjugacy and powers in the lamplighter group Z/2 wr Z.

#include "wreathkit/dsl.hpp"

#include <iostream>

int main() {
  using namespace wreathkit;
  const GroupHandle g = parse_group("wr(Z/2, Z)");
  auto word = [&](const char* text) { return g->evaluate(parse_word(*g, text)); };

  const Element x = word("a1 t1");
  const Element y = word("t1^-5 a1 t1^6");
  std::cout << "x = " << g->render(x) << "\n"
            << "y = " << g->render(y) << "\n";

  const ConjugacyAnswer c = g->conjugacy(x, y);
  std::cout << "x ~ y: " << (c.conjugate ? "yes" : "no") << "\n";

  const Element x3 = g->power(x, 3);
  std::cout << "x^3 = " << g->render(x3) << ", recovered k = " << g->pp(x, x3)->str() << "\n";

  const Element lamps = word("a1 t1 a1 t1^-1");
  std::cout << "order of " << g->render(lamps) << " is " << g->order(lamps).str() << "\n";
}
