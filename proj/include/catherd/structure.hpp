#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "catherd/graph.hpp"

namespace catherd {

class StructureError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Bridges in ascending edge index (Tarjan low-link).
[[nodiscard]] std::vector<EdgeId> bridges(const Graph& g);

/// Maximal 2-edge-connected components and the forest of bridges between them.
struct BlockTree {
  std::vector<int> component;                 // per vertex
  std::vector<std::vector<Vertex>> members;   // per component, ascending
  std::vector<EdgeId> bridges;
  std::vector<std::pair<int, int>> links;     // component pair per bridge
};

[[nodiscard]] BlockTree two_edge_connected_components(const Graph& g);

/// Connected, at least two vertices, and no bridges.
[[nodiscard]] bool is_two_edge_connected(const Graph& g);

/// Number of edge-disjoint a-b paths (unit-capacity max flow).
[[nodiscard]] int edge_disjoint_paths(const Graph& g, Vertex a, Vertex b);

inline constexpr int kMaxExactPathVertices = 16;
inline constexpr int kMaxCycleDegree = 16;

/// Vertex count of a longest simple path. Two BFS sweeps on forests; exact
/// subset DP otherwise (at most 16 vertices).
[[nodiscard]] int longest_path_order(const Graph& g);
/// One longest path, as a vertex sequence.
[[nodiscard]] std::vector<Vertex> longest_path(const Graph& g);

/// Maximum number of pairwise edge-disjoint cycles through v.
///
/// Each such cycle spends two of v's edges, so an optimal packing splits v's
/// edges into two sides A and B. For a fixed split, v becomes a source on A
/// and a sink on B, and the max flow counts disjoint closed trails through v,
/// each of which shortcuts to a cycle. The answer is the best split. Bridges
/// at v are dropped first; at most 16 remaining edges.
[[nodiscard]] int max_edge_disjoint_cycles_through(const Graph& g, Vertex v);

struct EvadibilityReport {
  int longest_path = 0;        // L
  int max_cycles = 0;          // C
  Vertex cycle_vertex = -1;    // a vertex attaining C (lowest id)
  int k = 0;                   // max(L + 1, C + 1)
  long long bound = 0;         // herder_bound(k)
  std::optional<int> cut_value;
};

[[nodiscard]] long long herder_bound(int k);
[[nodiscard]] int evadibility_threshold(const Graph& g);
/// Fills cut_value with the exact cat number when `solve` is set.
[[nodiscard]] EvadibilityReport evadibility_report(const Graph& g, bool solve = false);

}  // namespace catherd
