#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "coxcent/blowup.hpp"
#include "coxcent/builtins.hpp"
#include "coxcent/centralizer.hpp"
#include "coxcent/io.hpp"
#include "coxcent/isomorphism.hpp"
#include "test_support.hpp"

using namespace coxcent;

TEST_CASE("E8 blows up to E7") {
  CoxeterDiagram result = blowup_fast_path(builtin_diagram("E:8"));
  CHECK(diagrams_isomorphic(result, builtin_diagram("E:7")));
}

TEST_CASE("D4 blows up to three unjoined vertices") {
  CoxeterDiagram result = blowup_fast_path(builtin_diagram("D:4"));
  REQUIRE(result.size() == 3);
  CHECK(result.edges().empty());
}

TEST_CASE("paths blow up to shorter paths") {
  for (int n = 3; n <= 9; ++n) {
    CoxeterDiagram result =
        blowup_fast_path(builtin_diagram("A:" + std::to_string(n)));
    CHECK(diagrams_isomorphic(result,
                              builtin_diagram("A:" + std::to_string(n - 2))));
  }
}

TEST_CASE("the degree-4 star carries infinite labels between disjoint pairs") {
  // tilde-D4: hulls of two leaf pairs through the centre
  CoxeterDiagram star = builtin_diagram("affD:4");
  CoxeterDiagram result = blowup_fast_path(star);
  REQUIRE(result.size() == 6);
  int inf_edges = 0, plain = 0;
  for (auto [u, v] : result.edges()) {
    if (result.label(u, v).is_infinity())
      ++inf_edges;
    else
      ++plain;
  }
  CHECK(inf_edges == 3);  // three ways to split four leaves into disjoint pairs
  CHECK(plain == 0);
}

TEST_CASE("non-eligible inputs are rejected") {
  auto code_of = [](const CoxeterDiagram& d) {
    try {
      blowup_fast_path(d);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::BadFormat;
  };
  CHECK(code_of(builtin_diagram("B:3")) == ErrorCode::NotSingleEdgeTree);
  CHECK(code_of(builtin_diagram("affA:3")) == ErrorCode::NotSingleEdgeTree);
  CHECK(code_of(parse_diagram("edge a b 3\nvertex c\n")) ==
        ErrorCode::NotSingleEdgeTree);  // disconnected
}

TEST_CASE("single vertices and edges give the empty diagram") {
  CHECK(blowup_fast_path(builtin_diagram("A:1")).size() == 0);
  CHECK(blowup_fast_path(builtin_diagram("A:2")).size() == 0);
}

TEST_CASE("lorentz18 has exactly one infinite edge, between the fork triples") {
  CoxeterDiagram result = blowup_fast_path(builtin_diagram("lorentz18"));
  CHECK(result.size() == 19);
  std::vector<std::pair<int, int>> inf_edges;
  for (auto [u, v] : result.edges())
    if (result.label(u, v).is_infinity()) inf_edges.emplace_back(u, v);
  REQUIRE(inf_edges.size() == 1);
  auto [u, v] = inf_edges[0];
  CHECK(result.name(u) == "p2-p3-q1");
  CHECK(result.name(v) == "p16-p15-q2");
}

TEST_CASE("blowup agrees with the centralizer computation") {
  std::mt19937 rng(90210);
  for (int trial = 0; trial < 60; ++trial) {
    CoxeterDiagram d = coxtest::random_single_edge_tree(rng, 3 + trial % 10);
    std::uniform_int_distribution<int> pick(0, d.size() - 1);
    CentralizerResult res = centralizer_diagram(d, d.name(pick(rng)));
    REQUIRE(res.domega_supported);
    CHECK(diagrams_isomorphic(blowup_fast_path(d), res.domega));
  }
  // and on the named single-edge trees
  for (const char* name : {"E:6", "E:7", "E:8", "D:7", "A:9", "Y555", "lorentz18"}) {
    CoxeterDiagram d = builtin_diagram(name);
    CentralizerResult res = centralizer_diagram(d, d.name(0));
    CHECK(diagrams_isomorphic(blowup_fast_path(d), res.domega));
  }
}
