#include <catch2/catch_amalgamated.hpp>

#include "coxcent/brute_force.hpp"
#include "coxcent/builtins.hpp"
#include "coxcent/centralizer.hpp"
#include "coxcent/io.hpp"
#include "coxcent/isomorphism.hpp"
#include "test_support.hpp"

using namespace coxcent;

TEST_CASE("A5 from an end vertex gives A3 with trivial free part") {
  CoxeterDiagram d = builtin_diagram("A:5");
  CentralizerResult res = centralizer_diagram(d, "a1");
  REQUIRE(res.domega_supported);
  CHECK(res.gamma_rank == 0);
  CHECK(res.gamma_words.empty());
  CHECK(diagrams_isomorphic(res.domega, builtin_diagram("A:3")));
  CHECK(res.spherical.str() == "A3");
  // the same holds from any other base point
  for (int s = 1; s < d.size(); ++s)
    CHECK(diagrams_isomorphic(centralizer_diagram(d, d.name(s)).domega,
                              builtin_diagram("A:3")));
}

TEST_CASE("E8 gives E7") {
  CoxeterDiagram d = builtin_diagram("E:8");
  for (int s = 0; s < d.size(); ++s) {
    CentralizerResult res = centralizer_diagram(d, d.name(s));
    REQUIRE(res.domega_supported);
    CHECK(res.gamma_rank == 0);
    CHECK(diagrams_isomorphic(res.domega, builtin_diagram("E:7")));
  }
}

TEST_CASE("B3 depends on the reflection class") {
  CoxeterDiagram d = builtin_diagram("B:3");
  CentralizerResult long_class = centralizer_diagram(d, "b1");
  REQUIRE(long_class.domega_supported);
  CHECK(long_class.domega.size() == 2);
  CHECK(long_class.spherical.str() == "A1 + A1");

  CentralizerResult short_class = centralizer_diagram(d, "b3");
  CHECK(short_class.spherical.str() == "B2");
  CHECK(short_class.spherical.order == 8);
}

TEST_CASE("H3 gives two orthogonal reflections") {
  CentralizerResult res = centralizer_diagram(builtin_diagram("H3"), "h1");
  REQUIRE(res.domega_supported);
  CHECK(res.domega.size() == 2);
  CHECK(res.domega.label(0, 1) == CoxLabel());
  CHECK(res.spherical.order == 4);
}

TEST_CASE("a single vertex centralizes to the trivial reflection part") {
  CoxeterDiagram d = builtin_diagram("A:1");
  CentralizerResult res = centralizer_diagram(d, "a1");
  REQUIRE(res.domega_supported);
  CHECK(res.domega.size() == 0);
  CHECK(res.spherical.order == 1);
}

TEST_CASE("odd dihedral labels leave nothing but the reflection itself") {
  CentralizerResult res = centralizer_diagram(builtin_diagram("I2:7"), "i1");
  REQUIRE(res.domega_supported);
  CHECK(res.domega.size() == 0);  // no arrows at all
  CHECK(res.class_words.empty());
}

TEST_CASE("cycles withhold the diagram but not rank or words") {
  CoxeterDiagram d = builtin_diagram("affA:3");
  CentralizerResult res = centralizer_diagram(d, "a1");
  CHECK_FALSE(res.domega_supported);
  CHECK(res.gamma_rank == 1);
  REQUIRE(res.gamma_words.size() == 1);
  CHECK(res.generators.r_words.size() == 4);
  CHECK(res.classes.empty());
}

TEST_CASE("class words are the r words of the canonical representatives") {
  CoxeterDiagram d = builtin_diagram("A:5");
  CentralizerResult res = centralizer_diagram(d, "a1");
  REQUIRE(res.class_words.size() == 3);
  CHECK(res.class_words[0].first == "a1>a3");
  CHECK(res.class_words[0].second.str() == "a3");
  CHECK(res.class_words[1].first == "a1>a4");
  CHECK(res.class_words[1].second.str() == "a4");
  CHECK(res.class_words[2].first == "a1>a5");
  CHECK(res.class_words[2].second.str() == "a5");
}

TEST_CASE("tilde-D8 splits into tilde-A1 and tilde-D6") {
  CoxeterDiagram d = builtin_diagram("affD:8");
  CentralizerResult res = centralizer_diagram(d, "c1");
  REQUIRE(res.domega_supported);
  CoxeterDiagram expected = coxtest::disjoint_union(builtin_diagram("affA:1"),
                                                    builtin_diagram("affD:6"));
  CHECK(diagrams_isomorphic(res.domega, expected));
}

TEST_CASE("centralizer order doubles the reflection part on finite fixtures") {
  for (const char* name : {"A:4", "B:3", "B:4", "D:4", "F4", "H3", "I2:6"}) {
    CoxeterDiagram d = builtin_diagram(name);
    auto group = BruteForceGroup::enumerate(d);
    for (int s = 0; s < d.size(); ++s) {
      CentralizerResult res = centralizer_diagram(d, d.name(s));
      REQUIRE(res.domega_supported);
      REQUIRE(res.spherical.spherical);
      CHECK(group.centralizer_order(s) == 2 * res.spherical.order);
    }
  }
}

TEST_CASE("emitted generators generate exactly the centralizer") {
  for (const char* name : {"A:4", "B:3", "D:4", "I2:5", "I2:6", "H3"}) {
    CoxeterDiagram d = builtin_diagram(name);
    for (int s = 0; s < d.size(); ++s) {
      auto oracle = brute_force_centralizer(d, d.name(s));
      CentralizerResult res = centralizer_diagram(d, d.name(s));
      std::vector<Word> words{Word{{d.name(s)}}};
      for (const auto& w : res.gamma_words) words.push_back(w);
      for (const auto& [a, w] : res.generators.r_words) words.push_back(w);
      CHECK(oracle.words_generate_centralizer(words));
    }
  }
}
