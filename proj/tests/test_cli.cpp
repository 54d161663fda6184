#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "coxcent/cli.hpp"
#include "coxcent/isomorphism.hpp"
#include "test_support.hpp"

using namespace coxcent;

namespace {

struct CliRun {
  int exit_code;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("builtin prints the diagram file format") {
  CliRun r = run({"builtin", "A:3"});
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "vertex a1\nvertex a2\nvertex a3\n"
        "edge a1 a2 3\nedge a2 a3 3\n");
}

TEST_CASE("info reports components and classification") {
  CliRun r = run({"info", "--diagram", "B:4"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("odd components: 2") != std::string::npos);
  CHECK(r.out.find("spherical: B4 (order 384)") != std::string::npos);
}

TEST_CASE("centralize output is byte-stable") {
  CliRun a = run({"centralize", "--diagram", "bugaenko8", "--reflection", "r5"});
  CliRun b = run({"centralize", "--diagram", "bugaenko8", "--reflection", "r5"});
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(!a.out.empty());
}

TEST_CASE("centralize reads diagram files") {
  std::string path = (std::filesystem::temp_directory_path() /
                      "coxcent_cli_test_diagram.txt")
                         .string();
  {
    std::ofstream f(path);
    f << "edge x y 3\nedge y z 3\n";
  }
  CliRun r = run({"centralize", "--diagram", path, "--reflection", "x"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("domega: 1 vertices") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("json centralize output round-trips to an isomorphic diagram") {
  CliRun r = run({"centralize", "--diagram", "E:8", "--reflection", "e2", "--json"});
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["domega"]["supported"].get<bool>());
  CoxeterDiagram rebuilt;
  for (const auto& v : j["domega"]["vertices"])
    rebuilt.ensure_vertex(v.get<std::string>());
  for (const auto& e : j["domega"]["edges"]) {
    CoxLabel l = e["label"].is_string() ? CoxLabel::infinity()
                                        : CoxLabel::finite(e["label"].get<int>());
    rebuilt.add_edge(e["u"].get<std::string>(), e["v"].get<std::string>(), l);
  }
  CHECK(diagrams_isomorphic(rebuilt, builtin_diagram("E:7")));
  CHECK(j["gamma_rank"].get<int>() == 0);
  CHECK(j["spherical"]["order"].get<std::uint64_t>() == 2903040);
}

TEST_CASE("infinity serializes as the string token inf") {
  CliRun r = run({"centralize", "--diagram", "bugaenko8", "--reflection", "r1",
                  "--json"});
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  int inf_count = 0;
  for (const auto& e : j["domega"]["edges"])
    if (e["label"].is_string()) {
      CHECK(e["label"].get<std::string>() == "inf");
      ++inf_count;
    }
  CHECK(inf_count == 9);
}

TEST_CASE("all-words flag emits the full family") {
  CliRun without = run({"centralize", "--diagram", "A:4", "--reflection", "a1"});
  CHECK(without.out.find("r-words:") == std::string::npos);
  CliRun with = run({"centralize", "--diagram", "A:4", "--reflection", "a1",
                     "--all-words"});
  CHECK(with.out.find("r-words:") != std::string::npos);
  CHECK(with.out.find("a3>a1:") != std::string::npos);
}

TEST_CASE("dot export writes the result diagram") {
  std::string path =
      (std::filesystem::temp_directory_path() / "coxcent_cli_test.dot").string();
  CliRun r = run({"centralize", "--diagram", "affD:6", "--reflection", "c1",
                  "--dot", path});
  CHECK(r.exit_code == 0);
  std::ifstream f(path);
  std::stringstream content;
  content << f.rdbuf();
  CHECK(content.str().find("style=dashed") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("centralize on a cyclic component reports the rank and words") {
  CliRun r = run({"centralize", "--diagram", "affA:3", "--reflection", "a1"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("UNSUPPORTED-CYCLES") != std::string::npos);
  CHECK(r.out.find("gamma rank: 1") != std::string::npos);
  // but asking for the diagram as DOT is an error
  CliRun dot = run({"centralize", "--diagram", "affA:3", "--reflection", "a1",
                    "--dot", "/tmp/never_written.dot"});
  CHECK(dot.exit_code == 1);
}

TEST_CASE("blowup subcommand") {
  CliRun r = run({"blowup", "--diagram", "D:4"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("blowup: 3 vertices") != std::string::npos);
  CliRun bad = run({"blowup", "--diagram", "B:3"});
  CHECK(bad.exit_code == 1);
  CHECK(bad.err.find("NotSingleEdgeTree") != std::string::npos);
}

TEST_CASE("verify prints a pass line per check") {
  CliRun r = run({"verify", "--diagram", "F4", "--reflection", "f1"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("check commutation: PASS") != std::string::npos);
  CHECK(r.out.find("check involution: PASS") != std::string::npos);
  CHECK(r.out.find("check fusion: PASS") != std::string::npos);
  CHECK(r.out.find("check labels: PASS") != std::string::npos);
  CHECK(r.out.find("verify: PASS") != std::string::npos);
}

TEST_CASE("brute reports orders and the closure verdict") {
  CliRun r = run({"brute", "--diagram", "A:3", "--reflection", "a1"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("group order: 24") != std::string::npos);
  CHECK(r.out.find("centralizer order: 4") != std::string::npos);
  CHECK(r.out.find("generator closure: EQUAL") != std::string::npos);
  CliRun bad = run({"brute", "--diagram", "affA:2", "--reflection", "a1"});
  CHECK(bad.exit_code == 1);
  CHECK(bad.err.find("NotFinite") != std::string::npos);
}

TEST_CASE("input errors exit with code one") {
  CHECK(run({"centralize", "--diagram", "A:3", "--reflection", "zz"}).exit_code == 1);
  CHECK(run({"centralize", "--diagram", "nosuch", "--reflection", "a"}).exit_code == 1);
  CHECK(run({"info"}).exit_code == 1);  // missing --diagram
  CHECK(run({}).exit_code == 1);        // missing subcommand
}
