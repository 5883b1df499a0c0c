#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace catherd {

using Vertex = int;
using EdgeId = int;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  [[nodiscard]] Vertex other(Vertex x) const { return x == u ? v : u; }
  [[nodiscard]] bool touches(Vertex x) const { return x == u || x == v; }
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Incidence {
  Vertex to;
  EdgeId edge;
};

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parse failure for the edge-list format. `line()` is 1-based; 0 means the
/// problem is not tied to a single line (e.g. a missing header).
class ParseError : public GraphError {
 public:
  enum class Kind { Malformed, MissingHeader, OutOfRange, SelfLoop, Duplicate };

  ParseError(Kind kind, int line, const std::string& what)
      : GraphError(what), kind_(kind), line_(line) {}

  [[nodiscard]] Kind kind() const { return kind_; }
  [[nodiscard]] int line() const { return line_; }

 private:
  Kind kind_;
  int line_;
};

/// Immutable finite simple undirected graph on vertices 0..n-1.
///
/// Edges are stored with u < v, sorted and deduplicated at construction, so
/// an edge's index is a stable identity that masks and reports refer to.
class Graph {
 public:
  Graph() = default;

  /// Throws GraphError on out-of-range endpoints, self-loops, or duplicates.
  Graph(int n, std::vector<Edge> edges);

  [[nodiscard]] int vertex_count() const { return n_; }
  [[nodiscard]] int edge_count() const { return static_cast<int>(edges_.size()); }
  [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }
  [[nodiscard]] const Edge& edge(EdgeId e) const { return edges_.at(static_cast<std::size_t>(e)); }
  [[nodiscard]] std::span<const Incidence> incident(Vertex v) const;
  [[nodiscard]] int degree(Vertex v) const { return static_cast<int>(incident(v).size()); }
  [[nodiscard]] std::optional<EdgeId> find_edge(Vertex a, Vertex b) const;
  [[nodiscard]] bool adjacent(Vertex a, Vertex b) const { return find_edge(a, b).has_value(); }
  [[nodiscard]] bool contains(Vertex v) const { return v >= 0 && v < n_; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
};

/// Surviving-edge set over a particular Graph's edge indices.
class EdgeMask {
 public:
  EdgeMask() = default;
  static EdgeMask full(const Graph& g);
  static EdgeMask empty(const Graph& g);
  static EdgeMask from_bits(int width, std::uint64_t bits);

  [[nodiscard]] int width() const { return width_; }
  [[nodiscard]] bool test(EdgeId e) const;
  void set(EdgeId e, bool value);
  [[nodiscard]] int count() const;
  [[nodiscard]] bool is_subset_of(const EdgeMask& other) const;
  /// Low 64 bits; callers that need this must ensure width() <= 64.
  [[nodiscard]] std::uint64_t bits64() const;

  friend bool operator==(const EdgeMask&, const EdgeMask&) = default;

 private:
  void check(EdgeId e) const;

  int width_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Pure: returns a copy of `mask` with edge `e` cleared.
[[nodiscard]] EdgeMask delete_edge(const EdgeMask& mask, EdgeId e);

[[nodiscard]] int degree(const Graph& g, const EdgeMask& mask, Vertex v);

/// Sorted vertex set of v's component in the masked graph.
[[nodiscard]] std::vector<Vertex> component_of(const Graph& g, const EdgeMask& mask, Vertex v);

/// Component id per vertex (ids assigned in order of lowest vertex).
[[nodiscard]] std::vector<int> component_labels(const Graph& g, const EdgeMask& mask);
[[nodiscard]] int component_count(const Graph& g, const EdgeMask& mask);

[[nodiscard]] bool is_connected(const Graph& g);
[[nodiscard]] bool is_tree(const Graph& g);

/// Shortest path from a to b through surviving edges, inclusive of both ends.
[[nodiscard]] std::optional<std::vector<Vertex>> shortest_path(const Graph& g, const EdgeMask& mask,
                                                               Vertex a, Vertex b);

/// Edge-list text: optional '#' comments, "p <n>", then "e <u> <v>" lines.
[[nodiscard]] Graph parse_graph(std::string_view text);
[[nodiscard]] std::string serialize_graph(const Graph& g);

/// DOT rendering; edges cleared in `mask` are drawn dashed.
[[nodiscard]] std::string to_dot(const Graph& g, const EdgeMask& mask);
[[nodiscard]] std::string to_dot(const Graph& g);

/// Subgraph induced by `keep` (sorted), relabeled 0..k-1 in ascending order.
[[nodiscard]] Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

/// Graph with the masked-out edges removed, same vertex set.
[[nodiscard]] Graph masked_graph(const Graph& g, const EdgeMask& mask);

}  // namespace catherd
