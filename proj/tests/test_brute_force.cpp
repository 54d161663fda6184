#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "coxcent/brute_force.hpp"
#include "coxcent/builtins.hpp"
#include "coxcent/io.hpp"
#include "coxcent/odd_components.hpp"
#include "test_support.hpp"

using namespace coxcent;

TEST_CASE("root systems have the classical sizes") {
  CHECK(enumerate_roots(TitsRepresentation(builtin_diagram("A:3"))).size() == 12);
  CHECK(enumerate_roots(TitsRepresentation(builtin_diagram("B:3"))).size() == 18);
  CHECK(enumerate_roots(TitsRepresentation(builtin_diagram("D:4"))).size() == 24);
  CHECK(enumerate_roots(TitsRepresentation(builtin_diagram("H3"))).size() == 30);
  CHECK(enumerate_roots(TitsRepresentation(builtin_diagram("I2:5"))).size() == 10);
  CHECK(enumerate_roots(TitsRepresentation(builtin_diagram("F4"))).size() == 48);
}

TEST_CASE("infinite root systems hit the cap") {
  TitsRepresentation rep(builtin_diagram("affA:2"));
  CHECK_THROWS_AS(enumerate_roots(rep, 500), Error);
}

TEST_CASE("group orders from the Cayley graph") {
  CHECK(BruteForceGroup::enumerate(builtin_diagram("A:3")).order() == 24);
  CHECK(BruteForceGroup::enumerate(builtin_diagram("I2:4")).order() == 8);
  CHECK(BruteForceGroup::enumerate(builtin_diagram("I2:7")).order() == 14);
  CHECK(BruteForceGroup::enumerate(builtin_diagram("B:3")).order() == 48);
  CHECK(BruteForceGroup::enumerate(builtin_diagram("H3")).order() == 120);
  CHECK(BruteForceGroup::enumerate(builtin_diagram("D:4")).order() == 192);
}

TEST_CASE("non-finite diagrams are refused") {
  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::BadFormat;
  };
  CHECK(code_of([] { BruteForceGroup::enumerate(builtin_diagram("affA:2")); }) ==
        ErrorCode::NotFinite);
  CHECK(code_of([] {
          BruteForceGroup::enumerate(builtin_diagram("A:5"), {.max_order = 100});
        }) == ErrorCode::OrderExceeded);
}

TEST_CASE("centralizer orders of reflections") {
  CoxeterDiagram a3 = builtin_diagram("A:3");
  auto oracle = brute_force_centralizer(a3, "a1");
  CHECK(oracle.group_order() == 24);
  CHECK(oracle.centralizer_order() == 4);

  auto i24 = brute_force_centralizer(builtin_diagram("I2:4"), "i1");
  CHECK(i24.group_order() == 8);
  CHECK(i24.centralizer_order() == 4);

  // B3: the two reflection classes have different centralizers
  CoxeterDiagram b3 = builtin_diagram("B:3");
  CHECK(brute_force_centralizer(b3, "b1").centralizer_order() == 8);
  CHECK(brute_force_centralizer(b3, "b3").centralizer_order() == 16);
}

TEST_CASE("centralizer order times class size is the group order") {
  for (const char* name : {"A:4", "B:3", "F4", "H3", "D:4"}) {
    CoxeterDiagram d = builtin_diagram(name);
    auto group = BruteForceGroup::enumerate(d);
    for (int v = 0; v < d.size(); ++v) {
      auto cls = group.conjugacy_class(group.generator_element(v));
      CHECK(group.centralizer_order(v) * cls.size() == group.order());
    }
  }
}

TEST_CASE("generators are conjugate exactly when their odd components agree") {
  for (const char* name : {"A:5", "B:3", "B:4", "F4", "H3", "I2:4", "I2:5", "E:6"}) {
    CoxeterDiagram d = builtin_diagram(name);
    auto group = BruteForceGroup::enumerate(d);
    auto decomp = odd_components(d);
    for (int i = 0; i < d.size(); ++i)
      for (int j = i + 1; j < d.size(); ++j)
        CHECK(group.generators_conjugate(i, j) ==
              (decomp.component_of[i] == decomp.component_of[j]));
  }
}

TEST_CASE("recognized orders agree with enumeration") {
  for (const char* name :
       {"A:1", "A:2", "A:3", "A:4", "B:2", "B:3", "B:4", "D:4", "F4", "H3",
        "H4", "I2:6", "I2:8", "D:5", "A:6", "E:6"}) {
    CoxeterDiagram d = builtin_diagram(name);
    SphericalType t = recognize_spherical(d);
    REQUIRE(t.spherical);
    CHECK(BruteForceGroup::enumerate(d).order() == t.order);
  }
}

TEST_CASE("matrix and permutation models agree element by element") {
  for (const char* name : {"A:3", "B:3", "I2:7", "D:4"}) {
    CoxeterDiagram d = builtin_diagram(name);
    auto group = BruteForceGroup::enumerate(d);
    const auto& rep = group.representation();
    std::set<std::vector<std::int64_t>> distinct;
    for (std::size_t id = 0; id < group.order(); ++id) {
      Word w = group.word_of(id);
      Eigen::MatrixXd m = rep.evaluate(w);
      // the matrix maps back to the same permutation element
      auto back = group.id_of_matrix(m);
      REQUIRE(back.has_value());
      CHECK(*back == id);
      // count distinct matrices on a quantized grid
      std::vector<std::int64_t> key;
      for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
          key.push_back(static_cast<std::int64_t>(std::llround(m(r, c) * 1e9)));
      distinct.insert(key);
    }
    CHECK(distinct.size() == group.order());  // faithfulness proxy
  }
}

TEST_CASE("word ids multiply like group elements") {
  CoxeterDiagram d = builtin_diagram("B:3");
  auto group = BruteForceGroup::enumerate(d);
  Word w1 = Word::parse("b1 b2");
  Word w2 = Word::parse("b2 b3 b2");
  Word cat = w1;
  cat.append(w2);
  CHECK(group.product(group.id_of_word(w1), group.id_of_word(w2)) ==
        group.id_of_word(cat));
  CHECK(group.id_of_word(Word{}) == group.identity());
}

TEST_CASE("closure of the standard generators is the whole group") {
  CoxeterDiagram d = builtin_diagram("A:4");
  auto group = BruteForceGroup::enumerate(d);
  std::vector<Word> gens;
  for (int v = 0; v < d.size(); ++v) gens.push_back(Word{{d.name(v)}});
  CHECK(group.closure(gens).size() == group.order());
  // a single reflection generates only itself and the identity
  std::vector<Word> one{Word{{"a1"}}};
  CHECK(group.closure(one).size() == 2);
}
