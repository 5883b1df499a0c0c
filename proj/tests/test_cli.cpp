#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "catherd/serialize.hpp"
#include "cli.hpp"

using namespace catherd;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

int count(const std::string& text, const std::string& needle) {
  int n = 0;
  for (auto at = text.find(needle); at != std::string::npos; at = text.find(needle, at + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("solve") {
  auto r = run({"solve", "--graph", "path:8"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out == "3\n");

  CHECK(run({"solve", "--graph", "star:4", "--vertex", "1"}).out == "1\n");
  CHECK(run({"solve", "--graph", "star:4", "--all-vertices"}).out == "0: 2\n1: 1\n2: 1\n3: 1\n");
  CHECK(run({"solve", "--graph", "cycle:6", "--no-component-restriction"}).out == "4\n");

  // --vertex and --all-vertices exclude each other.
  CHECK(run({"solve", "--graph", "star:4", "--vertex", "0", "--all-vertices"}).code == cli::kUsage);

  auto json = Json::parse(run({"--json", "solve", "--graph", "path:4", "--all-vertices"}).out);
  CHECK(json["cat_number"] == 2);
  CHECK(json["values"] == Json::parse("[1,2,2,1]"));
  json = Json::parse(run({"--json", "solve", "--graph", "path:4", "--vertex", "0"}).out);
  CHECK(json["value"] == 1);

  CHECK(run({"solve", "--graph", "path:4", "--vertex", "9"}).code == cli::kUsage);
  CHECK(run({"solve", "--graph", "nope:3"}).code == cli::kUsage);
  CHECK(run({"solve", "--graph", "p 2\ne 0 5\n"}).code == cli::kUsage);
}

TEST_CASE("graphs from files") {
  const std::string path = "test_cli_graph.txt";
  {
    std::ofstream f(path);
    f << "# a triangle\np 3\ne 0 1\ne 1 2\ne 0 2\n";
  }
  CHECK(run({"solve", "--graph", path}).out == "2\n");
  CHECK(run({"classify", "--graph", path}).out == "Cut2/C3\n");
  std::remove(path.c_str());
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"frobnicate"}).code == cli::kUsage);
  CHECK(run({"solve"}).code == cli::kUsage);
  CHECK(run({"solve", "--graph", "path:3", "--bogus"}).code == cli::kUsage);
  CHECK(run({"prune", "--graph", "path:3", "--emit", "svg"}).code == cli::kUsage);
  CHECK(run({"play", "--graph", "path:3", "--as", "dog"}).code == cli::kUsage);
  auto help = run({"--help"});
  CHECK(help.code == cli::kOk);
  CHECK(help.out.find("verify") != std::string::npos);
}

TEST_CASE("classify, prune and structure") {
  CHECK(run({"classify", "--graph", "cycle:5"}).out == "Cut3/pentagon\n");
  auto big = run({"classify", "--graph", "cycle:6"});
  CHECK(big.out.rfind("AtLeast4\n", 0) == 0);
  CHECK(big.out.find("witness: ") != std::string::npos);
  auto c = Json::parse(run({"--json", "classify", "--graph", "star:6"}).out);
  CHECK(c["verdict"] == "Cut2");
  CHECK(c["catalog_id"] == "P3");

  auto text = run({"prune", "--graph", "star:6"}).out;
  CHECK(count(text, "duplicate_leaf") == 3);
  CHECK(text.find("p 3\ne 0 1\ne 0 2\n") != std::string::npos);
  CHECK(run({"prune", "--graph", "star:6", "--emit", "dot"}).out.rfind("graph G {", 0) == 0);
  auto report = Json::parse(run({"prune", "--graph", "star:6", "--emit", "json"}).out);
  CHECK(report["result"]["n"] == 3);

  auto s = run({"structure", "--graph", "two_triangles_bridge"}).out;
  CHECK(s.find("longest path: 6 vertices") != std::string::npos);
  CHECK(s.find("cat number: 3") != std::string::npos);
  CHECK(s.find("bridges: 2-3") != std::string::npos);
  auto sj = Json::parse(run({"--json", "structure", "--graph", "cycle:4"}).out);
  CHECK(sj["evadibility"]["max_cycles"] == 1);
  CHECK(sj["blocks"]["bridges"].empty());
}

TEST_CASE("verify") {
  auto r = run({"verify", "--suite", "stars", "--max-n", "9"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.rfind("PASS stars", 0) == 0);

  auto fail = run({"verify", "--suite", "catalog3"});
  CHECK(fail.code == cli::kFailed);
  CHECK(fail.out.rfind("FAIL catalog3", 0) == 0);
  CHECK(fail.out.find("21 failures (seed 1)") != std::string::npos);

  auto j = Json::parse(run({"--json", "verify", "--suite", "paths"}).out);
  CHECK(j["passed"] == true);
  CHECK(j["suites"][0]["checked"] == 8);

  CHECK(run({"verify", "--suite", "bogus"}).code == cli::kUsage);
  CHECK(run({"verify", "--suite", "cut1", "--max-n", "40"}).code == cli::kUsage);
}

TEST_CASE("solver budget") {
  ::setenv("CATHERD_BUDGET", "edges=5", 1);
  auto r = run({"solve", "--graph", "cycle:6"});
  CHECK(r.code == cli::kBudget);
  CHECK(r.err.find("CATHERD_BUDGET") != std::string::npos);
  CHECK(run({"solve", "--graph", "cycle:5"}).code == cli::kOk);
  // Structure still answers, without the exact value.
  CHECK(run({"structure", "--graph", "cycle:6"}).out.find("cat number") == std::string::npos);
  ::setenv("CATHERD_BUDGET", "edges=x", 1);
  CHECK(run({"solve", "--graph", "cycle:5"}).code == cli::kUsage);
  ::unsetenv("CATHERD_BUDGET");
}

TEST_CASE("challenge") {
  auto r = run({"challenge", "--generator", "binary_tree", "--cat", "subtree", "--herder", "random", "--k", "25",
                "--seed", "3"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find("survived_k (24 cuts answered") != std::string::npos);

  // The family's own cat strategy is the default.
  auto j = Json::parse(run({"--json", "challenge", "--generator", "ladder", "--k", "6"}).out);
  CHECK(j["cat"] == "cycle_hub");
  CHECK(j["outcome"] == "survived_k");

  auto cap = run({"challenge", "--generator", "double_ray", "--cat", "median_path", "--herder", "ray_cut_behind",
                  "--k", "5", "--until-capture", "--trace"});
  CHECK(cap.out.find("captured at cut") != std::string::npos);
  CHECK(cap.out.find("  place 0\n") != std::string::npos);

  CHECK(run({"challenge", "--generator", "tree", "--k", "3"}).code == cli::kUsage);
  CHECK(run({"challenge", "--generator", "ray", "--cat", "dog", "--k", "3"}).code == cli::kUsage);
  CHECK(run({"challenge", "--generator", "ray", "--k", "0"}).code == cli::kUsage);

  ::setenv("CATHERD_BUDGET", "vertices=10", 1);
  CHECK(run({"challenge", "--generator", "binary_tree", "--k", "25"}).code == cli::kBudget);
  ::unsetenv("CATHERD_BUDGET");
}

TEST_CASE("terminal play") {
  // The engine places the cat on an inner vertex of P4; cutting every edge
  // ends the game whatever it does.
  auto herder = run({"play", "--graph", "path:4", "--as", "herder", "--hints"}, "move 3\ncut 0 1\ncut 1 2\ncut 2 3\n");
  CHECK(herder.code == cli::kOk);
  CHECK(herder.out.find("engine: cat placed on 1") != std::string::npos);
  CHECK(herder.out.find("rejected: the engine plays the cat") != std::string::npos);
  CHECK(herder.out.find("hint: total cuts after each cut") != std::string::npos);
  CHECK(herder.out.find("cat captured after") != std::string::npos);

  // A leaf cat is isolated by the first cut.
  auto cat = run({"play", "--graph", "path:3", "--as", "cat"}, "place 0\n");
  CHECK(cat.out.find("engine: cut 0-1") != std::string::npos);
  CHECK(cat.out.find("cat captured after 1 cuts") != std::string::npos);

  auto rules = run({"play", "--graph", "cycle:4", "--as", "cat"}, "cut 0 1\nplace 0\nmove 0\nfly\n");
  CHECK(rules.out.find("rejected: the engine plays the herder") != std::string::npos);
  CHECK(rules.out.find("rejected: cat must move to a different vertex in its component") != std::string::npos);
  CHECK(rules.out.find("unknown command") != std::string::npos);
  CHECK(rules.out.find("game abandoned") != std::string::npos);
}

TEST_CASE("enumerate") {
  auto r = run({"enumerate", "--class", "trees", "--max-n", "5"});
  CHECK(r.code == cli::kOk);
  CHECK(count(r.out, "# graph") == 8);
  auto j = Json::parse(run({"--json", "enumerate", "--min-n", "4", "--max-n", "4", "--max-m", "6"}).out);
  CHECK(j.size() == 6);
  CHECK(run({"enumerate", "--max-n", "40"}).code == cli::kUsage);
}
