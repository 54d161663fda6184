// Computes the centralizer structure for a couple of builtin diagrams and
// prints the resulting data.  Mirrors what `coxcent centralize` does, but
// through the library API.
#include <iostream>

#include "coxcent/builtins.hpp"
#include "coxcent/centralizer.hpp"
#include "coxcent/io.hpp"

int main() {
  using namespace coxcent;
  for (const char* name : {"E:8", "bugaenko8"}) {
    CoxeterDiagram d = builtin_diagram(name);
    std::string s = d.name(0);
    CentralizerResult res = centralizer_diagram(d, s);
    std::cout << "=== " << name << ", reflection " << s << " ===\n";
    std::cout << "free part rank: " << res.gamma_rank << "\n";
    std::cout << "reflection part (" << res.domega.size() << " generators):\n";
    std::cout << write_diagram(res.domega);
    std::cout << "classification: " << res.spherical.str() << "\n\n";
  }
  return 0;
}
