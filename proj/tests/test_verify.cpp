#include <doctest.h>

#include <set>

#include "catherd/enumerate.hpp"
#include "catherd/verify.hpp"

using namespace catherd;

TEST_CASE("suite registry") {
  const auto names = suite_names();
  const std::vector<std::string> expected = {"paths",    "cycles",  "stars",        "cut1",     "cut2",
                                             "catalog3", "rigidity", "pruning",     "spiders",  "bound",
                                             "monotonicity", "infinite", "structure", "certificates"};
  CHECK(names == expected);
  CHECK_THROWS_AS((void)run_suite("nope"), VerifyError);
  CHECK_THROWS_AS((void)run_suites("al"), VerifyError);
  CHECK_THROWS_AS((void)run_suite("cut1", {.max_n = 0}), VerifyError);
  CHECK_THROWS_AS((void)run_suite("cut1", {.max_n = 12}), VerifyError);
  CHECK_THROWS_AS((void)run_suite("cut1", {.max_m = -1}), VerifyError);
  CHECK(run_suites("stars").size() == 1);
}

TEST_CASE("small bounds pass") {
  for (const char* name : {"paths", "cycles", "stars", "cut1", "cut2", "rigidity", "pruning", "structure",
                           "certificates"}) {
    const auto r = run_suite(name, {.max_n = 5});
    CAPTURE(name);
    CHECK(r.passed());
    CHECK(r.checked > 0);
    CHECK(r.seconds >= 0);
    CHECK(r.counterexamples.empty());
  }
  const auto stars = run_suite("stars", {.max_n = 9});
  CHECK(stars.passed());
  CHECK(stars.checked == 10);
}

TEST_CASE("catalog3 reports the known counterexamples") {
  // 16 graphs where classify and the solver disagree; 5 of them are already
  // pruned and so also miss the catalog.
  const auto r = run_suite("catalog3");
  CHECK_FALSE(r.passed());
  CHECK(r.failures == 21);
  CHECK(r.counterexamples.size() == 21);
  CHECK(r.counterexamples.front() == "n=7: 0-2 1-5 2-5 3-4 3-6 4-6 5-6: solver 3, classify AtLeast4, pruned n=7: 0-2 "
                                     "1-5 2-5 3-4 3-6 4-6 5-6");
  // Below 7 vertices every graph agrees.
  CHECK(run_suite("catalog3", {.max_n = 6}).passed());
}

TEST_CASE("randomized suites are reproducible") {
  for (std::uint64_t seed : {1, 2}) {
    const auto a = run_suite("monotonicity", {.max_n = 6, .max_m = 8, .seed = seed});
    const auto b = run_suite("monotonicity", {.max_n = 6, .max_m = 8, .seed = seed});
    CHECK(a.passed());
    CHECK(a.checked == 500);
    CHECK(a.seed == seed);
    CHECK(b.checked == a.checked);
  }
}

TEST_CASE("all graphs up to six vertices") {
  // Graphs on n unlabeled vertices: 1, 2, 4, 11, 34, 156.
  const std::vector<int> per_n = {0, 1, 2, 4, 11, 34, 156};
  const auto graphs = all_graphs(6);
  CHECK(graphs.size() == 208);
  std::vector<int> seen(7, 0);
  std::set<std::pair<int, std::uint64_t>> keys;
  for (const auto& g : graphs) {
    ++seen[g.vertex_count()];
    keys.insert({g.vertex_count(), canonical_form(g).key});
  }
  CHECK(seen == per_n);
  CHECK(keys.size() == graphs.size());
  CHECK_THROWS_AS((void)all_graphs(0), VerifyError);
}

TEST_CASE("random connected graphs") {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 200; ++i) {
    const int n = 1 + static_cast<int>(rng() % 9);
    const int cap = static_cast<int>(rng() % 14);
    const Graph g = random_connected_graph(rng, n, cap);
    CHECK(g.vertex_count() == n);
    CHECK(is_connected(g));
    CHECK(g.edge_count() >= n - 1);
    CHECK(g.edge_count() <= std::max(std::min(cap, n * (n - 1) / 2), n - 1));
  }
  std::mt19937_64 a(11), b(11);
  CHECK(random_connected_graph(a, 7, 10) == random_connected_graph(b, 7, 10));
  CHECK_THROWS_AS((void)random_connected_graph(a, 0, 3), VerifyError);
}

TEST_CASE("one-line graph text") {
  CHECK(one_line(Graph(3, {{0, 1}, {1, 2}})) == "n=3: 0-1 1-2");
  CHECK(one_line(Graph(1, {})) == "n=1:");
}
