#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "catherd/graph.hpp"

namespace catherd {

enum class GraphClass { Connected, Trees, Unicyclic, Spiders };

struct EnumConfig {
  int min_vertices = 1;
  int max_vertices = 7;
  int max_edges = 10;
  GraphClass graph_class = GraphClass::Connected;
};

class EnumError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr int kMaxCanonicalVertices = 11;

/// Canonical labeling: `graph` is the input relabeled so that isomorphic
/// inputs give identical results. `order[i]` is the input vertex placed at i.
struct CanonicalForm {
  Graph graph;
  std::vector<Vertex> order;
  std::uint64_t key = 0;  // upper-triangle adjacency bits of `graph`

  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
    return a.graph.vertex_count() == b.graph.vertex_count() && a.key == b.key;
  }
};

/// Individualization-refinement over color-refinement partitions, taking the
/// lexicographically smallest adjacency bitstring among the search leaves.
/// Twins are branched on once. n <= 11.
[[nodiscard]] CanonicalForm canonical_form(const Graph& g);

using GraphSink = std::function<void(const Graph&)>;

/// One representative per isomorphism class, ordered by vertex count, then
/// edge count, then canonical key. Emitted graphs are canonical forms.
///
/// Connected: trees grown by leaf attachment, then one edge added at a time;
/// every connected graph with a cycle has a non-bridge edge, so each class is
/// reached. Unicyclic: the connected graphs with |E| = |V|. Spiders: every
/// tree with at most one vertex of degree >= 3.
void enumerate(const EnumConfig& cfg, const GraphSink& sink);
[[nodiscard]] std::vector<Graph> enumerate(const EnumConfig& cfg);

[[nodiscard]] std::vector<Graph> connected_graphs(const EnumConfig& cfg);
/// Trees on exactly n vertices.
[[nodiscard]] std::vector<Graph> trees(int n);
/// Trees on 1..max_n vertices.
[[nodiscard]] std::vector<Graph> trees_up_to(int max_n);
/// One spider per leg multiset, in the given order.
[[nodiscard]] std::vector<Graph> spiders(const std::vector<std::vector<int>>& legs);

/// Edge-list text for each graph, separated by a "# graph i" comment line.
[[nodiscard]] std::string write_edge_lists(const std::vector<Graph>& graphs);

}  // namespace catherd
