#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "catherd/graph.hpp"

namespace catherd {

class VerifyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Bounds left unset fall back to each suite's default.
struct VerifyOptions {
  std::optional<int> max_n;
  std::optional<int> max_m;
  std::uint64_t seed = 1;
};

struct SuiteResult {
  std::string name;
  std::string scope;  // the bounds actually used
  std::uint64_t seed = 0;
  long long checked = 0;
  long long failures = 0;
  /// The first few failures, one line each, graphs in one_line() form.
  std::vector<std::string> counterexamples;
  double seconds = 0;

  [[nodiscard]] bool passed() const { return failures == 0; }
};

/// Suites, in the order "all" runs them:
///   paths         cut(P_n) = ceil(log2 n)                        n = 2..9
///   cycles        cut(C_n) = ceil(log2 2floor(n/2)) + 1          n = 3..10
///   stars         cut(K1) = 0, cut(K2) = 1, cut(K_{1,n}) = 2     n = 2..9 leaves
///   cut1          value 1 iff degree 1                           connected, n <= 6
///   cut2          value 2 iff a star-component cut exists, and the pruned
///                 value-2 graphs are exactly {C3, P3, P4}        connected, n <= 6
///   catalog3      classify agrees with the solver capped at 4; pruned value-3
///                 graphs are catalogued; catalog entries solve to 3
///                                                                connected n <= 7, m <= 10; trees n <= 10
///   rigidity      2C3+e is the only graph with two or more cycles and value 3
///                                                                connected, n <= 7
///   pruning       duplicate-leaf prune keeps per-vertex values (connected,
///                 n <= 7); tree prune keeps cut (trees, n <= 9)
///   spiders       pinned values of {2,2,1}, {4,4,1}, {3,3,1} and their
///                 leg-pruned forms
///   bound         cut <= herder_bound(k) on the catalog3 set; the
///                 cycle-severing herder beats the optimal cat within the
///                 bound on 100 random graphs, m <= 10
///   monotonicity  cut(H, v) <= cut(G, v) on 500 random triples,  n <= 8, m <= 12
///   infinite      subtree on the binary tree (k = 25), median path on the
///                 ray and double ray (k <= 12), ray_cut_behind capture
///   structure     cycle packing, bridges, 2-edge-connectivity, edge-disjoint
///                 paths and longest paths against brute force, all graphs n <= 6
///   certificates  certificate soundness, component restriction, optimal
///                 self-play                                      connected, n <= 6
[[nodiscard]] std::vector<std::string> suite_names();

/// Throws VerifyError for an unknown suite or a bound out of range.
[[nodiscard]] SuiteResult run_suite(std::string_view name, const VerifyOptions& opts = {});
/// A single suite, or every suite for "all".
[[nodiscard]] std::vector<SuiteResult> run_suites(std::string_view name, const VerifyOptions& opts = {});

/// "n=4: 0-1 1-2 2-3".
[[nodiscard]] std::string one_line(const Graph& g);

/// One graph per isomorphism class on 1..max_n vertices, connected or not.
[[nodiscard]] std::vector<Graph> all_graphs(int max_n);

/// A connected graph on n vertices with n - 1 <= m <= max_edges edges: a
/// random recursive tree plus random extra edges, randomly relabeled.
[[nodiscard]] Graph random_connected_graph(std::mt19937_64& rng, int n, int max_edges);

}  // namespace catherd
