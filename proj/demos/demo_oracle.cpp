// Cross-checks the computed centralizer of a reflection in W(A_4) against
// brute-force enumeration of the group as permutations of its root system.
#include <iostream>

#include "coxcent/brute_force.hpp"
#include "coxcent/builtins.hpp"
#include "coxcent/centralizer.hpp"

int main() {
  using namespace coxcent;
  CoxeterDiagram d = builtin_diagram("A:4");
  auto oracle = brute_force_centralizer(d, "a1");
  CentralizerResult res = centralizer_diagram(d, "a1");

  std::vector<Word> words{Word{{"a1"}}};
  for (const auto& [arrow, word] : res.generators.r_words) words.push_back(word);

  std::cout << "group order: " << oracle.group_order() << "\n";
  std::cout << "centralizer order: " << oracle.centralizer_order() << "\n";
  std::cout << "2 x |W(domega)|: " << 2 * res.spherical.order << "\n";
  std::cout << "emitted words generate the centralizer: "
            << (oracle.words_generate_centralizer(words) ? "yes" : "no") << "\n";
  return 0;
}
