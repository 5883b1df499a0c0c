#include <doctest.h>

#include <cstdlib>

#include "catherd/budget.hpp"
#include "catherd/generators.hpp"
#include "catherd/serialize.hpp"

using namespace catherd;

TEST_CASE("budget strings") {
  const Budget defaults;
  CHECK(defaults.solver_edges == 18);
  CHECK(defaults.infinite_vertices == 100000);

  CHECK(parse_budget("24").solver_edges == 24);
  CHECK(parse_budget("24").infinite_vertices == 100000);
  auto both = parse_budget("edges=30,vertices=500");
  CHECK(both.solver_edges == 30);
  CHECK(both.infinite_vertices == 500);
  CHECK(parse_budget("vertices=7").solver_edges == 18);
  CHECK(parse_budget("edges=1000").solver_edges == 64);

  for (const char* bad : {"", "0", "-3", "12x", "edges=", "edges=0", "edge=4", "edges=4,", "edges=4;vertices=2"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS((void)parse_budget(bad), BudgetError);
  }
}

TEST_CASE("budget from the environment") {
  ::unsetenv("CATHERD_BUDGET");
  CHECK(budget_from_env().solver_edges == 18);
  ::setenv("CATHERD_BUDGET", "edges=9", 1);
  CHECK(budget_from_env().solver_edges == 9);
  ::setenv("CATHERD_BUDGET", "nonsense", 1);
  CHECK_THROWS_AS((void)budget_from_env(), BudgetError);
  ::unsetenv("CATHERD_BUDGET");
}

TEST_CASE("graphs round-trip through JSON") {
  for (const char* spec : {"path:1", "cycle:5", "spider:2,2,1", "complete:4", "ladder:3"}) {
    const Graph g = from_spec(spec);
    const Json j = to_json(g);
    CHECK(j["n"] == g.vertex_count());
    CHECK(j["edges"].size() == static_cast<std::size_t>(g.edge_count()));
    CHECK(graph_from_json(j) == g);
    CHECK(graph_from_json(Json::parse(j.dump())) == g);
    CHECK(graph_from_json(Json(spec)) == g);
  }
  CHECK(graph_from_json(Json("p 3\ne 0 1\ne 1 2\n")) == from_spec("path:3"));

  CHECK_THROWS_AS((void)graph_from_json(Json(3)), GraphError);
  CHECK_THROWS_AS((void)graph_from_json(Json{{"n", 2}}), GraphError);
  CHECK_THROWS_AS((void)graph_from_json(Json{{"n", "2"}, {"edges", Json::array()}}), GraphError);
  CHECK_THROWS_AS((void)graph_from_json(Json{{"n", 2}, {"edges", {{0, 1, 2}}}}), GraphError);
  CHECK_THROWS_AS((void)graph_from_json(Json{{"n", 2}, {"edges", {{0, 2}}}}), GraphError);
  CHECK_THROWS_AS((void)graph_from_json(Json{{"n", 2}, {"edges", {{0, 0}}}}), GraphError);
  CHECK_THROWS_AS((void)graph_from_json(Json{{"n", 3}, {"edges", {{0, 1}, {1, 0}}}}), GraphError);
}

TEST_CASE("edge masks split into surviving and cut") {
  const Graph g = from_spec("path:4");
  auto mask = delete_edge(EdgeMask::full(g), 1);
  const Json j = to_json(mask, g);
  CHECK(j["surviving"] == Json::parse("[[0,1],[2,3]]"));
  CHECK(j["cut"] == Json::parse("[[1,2]]"));
}

TEST_CASE("classification and prune reports") {
  const auto c = to_json(classify(from_spec("star:6")));
  CHECK(c["verdict"] == "Cut2");
  CHECK(c["value"] == 2);
  CHECK(c["at_least"] == false);
  CHECK(c["catalog_id"] == "P3");
  CHECK(c["witness"].is_null());
  CHECK(c["prune"]["steps"].size() == 3);
  CHECK(c["prune"]["steps"][0]["rule"] == "duplicate_leaf");
  CHECK(c["prune"]["identity"] == false);
  CHECK(c["prune"]["result"]["n"] == 3);
  // Removed vertices map to -1.
  CHECK(c["prune"]["vertex_map"] == Json::parse("[0,1,2,-1,-1,-1]"));

  const auto big = to_json(classify(from_spec("cycle:6")));
  CHECK(big["verdict"] == "AtLeast4");
  CHECK(big["at_least"] == true);
  CHECK(big["catalog_id"].is_null());
  CHECK(big["witness"]["kind"] == "long_cycle");
  CHECK(big["witness"]["vertices"].size() == 6);
}

TEST_CASE("structure reports") {
  const Graph g = from_spec("two_triangles_bridge");
  const auto ev = to_json(evadibility_report(g, true));
  CHECK(ev["longest_path"] == 6);
  CHECK(ev["max_cycles"] == 1);
  CHECK(ev["k"] == 7);
  CHECK(ev["bound"] == herder_bound(7));
  CHECK(ev["cut_value"] == 3);
  CHECK(to_json(evadibility_report(g))["cut_value"].is_null());

  const auto blocks = to_json(two_edge_connected_components(g));
  CHECK(blocks["members"] == Json::parse("[[0,1,2],[3,4,5]]"));
  CHECK(blocks["links"] == Json::parse("[[0,1]]"));
  CHECK(blocks["bridges"].size() == 1);
}

TEST_CASE("move analysis and traces") {
  const Graph g = from_spec("path:4");
  Solver s(g);
  const auto a = to_json(s.analyze(EdgeMask::full(g), 1));
  CHECK(a["cat"] == 1);
  CHECK(a["value"] == 2);
  REQUIRE(a["cuts"].size() == 3);
  CHECK(a["cuts"][2]["endpoints"] == Json::parse("[2,3]"));
  CHECK(a["cuts"][2]["optimal"] == true);
  CHECK(a["cuts"][0]["isolates"] == false);

  OptimalCat cat(g);
  OptimalHerder herder(g);
  const auto trace = play(g, cat, herder, 0);
  const auto t = to_json(trace, g);
  CHECK(t["score"] == trace.score);
  CHECK(t["captured"] == true);
  CHECK(t["events"][0]["kind"] == "place");
  CHECK(t["events"][1]["kind"] == "cut");
  CHECK(t["events"][1]["endpoints"].size() == 2);
}

TEST_CASE("challenge results") {
  auto g = inf::make_infinite("ray");
  auto cat = inf::median_path_strategy(3);
  auto herder = inf::cut_last_edge();
  const auto r = inf::run_challenge(g, *cat, *herder, 3);
  const auto j = inf::to_json(r);
  CHECK(j["outcome"] == "survived_k");
  CHECK(j["k"] == 3);
  CHECK(j["survived"] == 2);
  CHECK(j["captured_at"].is_null());
  CHECK(j["trace"][0]["kind"] == "place");
  CHECK(j["trace"].size() == r.trace.size());
  CHECK(j["family"] == "ray");

  const auto info = inf::to_json(g.info);
  CHECK(info["cat_strategy"] == "median_path");
  CHECK(info["cat_win"].is_boolean());
}

TEST_CASE("suite results") {
  const auto r = run_suite("paths");
  const auto j = to_json(r);
  CHECK(j["suite"] == "paths");
  CHECK(j["passed"] == true);
  CHECK(j["checked"] == 8);
  CHECK(j["failures"] == 0);
  CHECK(j["counterexamples"].empty());
  CHECK(j["seed"] == 1);
}
