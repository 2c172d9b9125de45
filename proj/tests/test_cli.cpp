#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "quiverlab/cli.hpp"

using namespace quiverlab;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p);
  return {std::istreambuf_iterator<char>(f), {}};
}

}  // namespace

TEST_CASE("mutate") {
  auto r = run({"mutate", "--quiver", R"({"n":3,"arrows":[[2,1],[3,1]]})", "--at", "1"});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"arrows\":[[1,2],[1,3]],\"n\":3}\n");
  r = run({"mutate", "--matrix", "[[0,1],[-1,0]]", "--at", "1", "--at", "2"});
  CHECK(r.out == "[[0,1],[-1,0]]\n");
  CHECK(run({"mutate", "--quiver", "2->1", "--at", "3"}).code == 1);
  CHECK(run({"mutate", "--matrix", "[[0,1],[1,0]]", "--at", "1"}).code == 1);
  CHECK(run({"mutate", "--quiver", "2->1"}).code == 2);
}

TEST_CASE("seed-walk") {
  const auto r = run({"seed-walk", "--quiver", R"({"n":3,"arrows":[[2,1],[3,1]]})", "--at", "1", "--at", "2", "--at", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "(x2*x3 + 1)/x1\n(x2*x3 + x1 + 1)/(x1*x2)\n(x2*x3 + x1 + 1)/(x1*x3)\n");
  CHECK(run({"seed-walk", "--type", "A1", "--at", "1"}).out == "2/x1\n");
  CHECK(run({"seed-walk", "--type", "A1", "--at", "1", "--flat"}).out == "2*x1^-1\n");
}

TEST_CASE("exchange-graph") {
  const auto dir = std::filesystem::temp_directory_path() / "quiverlab_cli_test";
  std::filesystem::create_directories(dir);
  const auto r = run({"exchange-graph", "--type", "A3", "--dot", (dir / "g.dot").string(), "--json", (dir / "g.json").string()});
  CHECK(r.code == 0);
  CHECK(r.out == "clusters: 14\nvariables: 9\nedges: 21\ncomplete: yes\n");
  CHECK(slurp(dir / "g.dot").starts_with("graph exchange {"));
  CHECK(slurp(dir / "g.json").find("\"edges\"") != std::string::npos);
  CHECK(run({"exchange-graph", "--type", "K2", "--max-nodes", "5"}).out.find("complete: no") != std::string::npos);
  std::filesystem::remove_all(dir);
}

TEST_CASE("char") {
  CHECK(run({"char", "--type", "K2", "--module", "I[1]"}).out == "(x1^4 + 2*x1^2 + x2^2 + 1)/(x1*x2^2)\n");
  CHECK(run({"char", "--type", "A3", "--orientation", "fan", "--module", "S[1]"}).out == "(x2*x3 + 1)/x1\n");
  const auto a = run({"char", "--type", "A4", "--orientation", "alternating", "--module", "P[2]"});
  const auto b = run({"char", "--type", "A4", "--orientation", "alternating", "--module", "P[2]", "--method", "recursion"});
  const auto c = run({"char", "--type", "A4", "--orientation", "alternating", "--module", "P[2]", "--method", "frieze"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
  CHECK(run({"char", "--type", "A2", "--module", "P[1][1]"}).out == "x1\n");
  CHECK(run({"char", "--type", "A2", "--table"}).out.find("\"M[1,2]\"") != std::string::npos);
  CHECK(run({"char", "--type", "K2", "--module", "S[1]"}).code == 1);
  CHECK(run({"char", "--type", "A2"}).code == 2);
  CHECK(run({"char", "--type", "A2", "--module", "X"}).code == 1);
}

TEST_CASE("silting and chambers") {
  CHECK(run({"silting", "--type", "A3", "--count"}).out == "14\n");
  CHECK(run({"silting", "--type", "A3", "--tilting", "--count"}).out == "5\n");
  const auto pairs = run({"silting", "--type", "A2", "--orientation", "1->2"});
  CHECK(pairs.out.find("T=[];P=[1,2]\n") != std::string::npos);
  auto r = run({"chambers", "--type", "A3", "--theta", "1,1,1", "--theta", "1,-1,0", "--sample", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.starts_with("chambers: 14\n1,1,1: T=[M[1,1],M[1,2],M[1,3]];P=[]\n1,-1,0: wall M[3,3]\n"));
  CHECK(r.out.find("overlaps: 0 uncovered: 0") != std::string::npos);
  CHECK(run({"chambers", "--type", "A2", "--theta", "1/2,-1"}).code == 0);
  CHECK(run({"chambers", "--type", "A2", "--theta", "1"}).code == 1);
  CHECK(run({"chambers", "--type", "A2", "--theta", "a,b"}).code == 1);
}

TEST_CASE("stability-svg") {
  auto r = run({"stability-svg", "--type", "A2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("<svg") != std::string::npos);
  r = run({"stability-svg", "--type", "A3", "--no-labels"});
  CHECK(r.out.find("wall-label") == std::string::npos);
  CHECK(run({"stability-svg", "--type", "A4"}).code == 1);
}

TEST_CASE("mgs") {
  auto r = run({"mgs", "--quiver", "1->2"});
  CHECK(r.code == 0);
  CHECK(r.out == "1 2 1\n2 1\n");
  r = run({"mgs", "--quiver", "1->2", "--trace"});
  CHECK(r.out.find("  [[0,-1],[1,0],[-1,1],[0,1]]\n") != std::string::npos);
  r = run({"mgs", "--type", "A3", "--max-states", "4"});
  CHECK(r.code == 0);
  CHECK(r.err.find("budget") != std::string::npos);
  CHECK(run({"mgs", "--matrix", "[[0,1],[-1,0]]"}).out == "1 2 1\n2 1\n");
  CHECK(run({"mgs", "--type", "A2", "--max-depth", "0"}).code == 2);
}

TEST_CASE("barcode") {
  CHECK(run({"barcode", "3,4,2"}).out == "M[2,2] + M[1,2] + 2*M[1,3]\n");
  CHECK(run({"barcode", "0,0"}).out == "0\n");
  CHECK(run({"barcode", "1,-1"}).code == 1);
  CHECK(run({"barcode", "1,x"}).code == 1);
  CHECK(run({"barcode"}).code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"mgs", "--type", "A2", "--bogus"}).code == 2);
  CHECK(run({"mgs", "--type", "A2", "--quiver", "1->2"}).code == 2);
  CHECK(run({"mgs"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("output is deterministic") {
  for (const std::vector<std::string> args :
       {std::vector<std::string>{"silting", "--type", "A4", "--orientation", "alternating"},
        std::vector<std::string>{"mgs", "--type", "A3", "--orientation", "fan"},
        std::vector<std::string>{"stability-svg", "--type", "A3"}})
    CHECK(run(args).out == run(args).out);
}
