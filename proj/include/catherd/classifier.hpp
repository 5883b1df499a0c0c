#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "catherd/graph.hpp"
#include "catherd/pruning.hpp"

namespace catherd {

enum class Verdict { Cut0, Cut1, Cut2, Cut3, AtLeast4 };

[[nodiscard]] std::string to_string(Verdict v);
/// 0..3, or 4 for AtLeast4.
[[nodiscard]] int verdict_value(Verdict v);
[[nodiscard]] Verdict verdict_from_value(int value);

struct CatalogEntry {
  std::string id;
  std::string family;  // generator spec the entry was built from
  Graph graph;
  int value;
};

/// {C3, P3, P4}.
[[nodiscard]] const std::vector<CatalogEntry>& catalog_cut2();

/// Pruned graphs of cat number 3: paths P5..P8, 2C3+e, and the one-cycle
/// families (triangle with 1-3 leaves on distinct corners, triangle with one
/// pendant path of 2-4 vertices, triangle with pendant paths of 1 and 2
/// vertices on one corner, square with 0-2 leaves on adjacent corners, C5).
/// The one-leaf triangle is listed once.
[[nodiscard]] const std::vector<CatalogEntry>& catalog_cut3();

struct LowerBoundWitness {
  enum class Kind { LongPath, LongCycle, MeetingCycles };
  Kind kind;
  std::vector<Vertex> vertices;  // path / cycle order, or the block's vertex set
  std::string description;
};

struct Classification {
  Verdict verdict = Verdict::AtLeast4;
  std::optional<std::string> catalog_id;
  /// pruned-graph vertex -> catalog vertex, when a catalog entry matched.
  std::vector<Vertex> mapping;
  PruneReport prune;
  std::optional<LowerBoundWitness> witness;
};

class ClassifyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// K1 -> Cut0, K2 -> Cut1; otherwise prune (tree rules for trees) and look
/// the result up in the two catalogs, AtLeast4 if absent. Connected input only.
[[nodiscard]] Classification classify(const Graph& g);

inline constexpr int kMaxIsomorphismVertices = 12;

/// A vertex map g -> h that is an isomorphism, or nullopt.
[[nodiscard]] std::optional<std::vector<Vertex>> is_isomorphic(const Graph& g, const Graph& h);

// --- certificates ------------------------------------------------------

/// deg(v) = 1, which pins cut(G, v) = 1.
[[nodiscard]] bool has_leaf_certificate(const Graph& g, Vertex v);

/// An edge whose removal leaves v the center of a star with at least one
/// leaf; the largest such star, lowest edge index on ties.
[[nodiscard]] std::optional<EdgeId> star_component_certificate(const Graph& g, Vertex v);

/// After every single cut, v is in a triangle or is the end of a 3-vertex
/// path; then cut(G, v) >= 3.
[[nodiscard]] bool geq3_certificate(const Graph& g, Vertex v);

struct CycleWithTail {
  std::vector<Vertex> cycle;  // in cyclic order
  EdgeId tail;
};

[[nodiscard]] std::optional<CycleWithTail> find_cycle_with_tail(const Graph& g);

/// A structure inside g that forces cat number >= 4, if one is found.
[[nodiscard]] std::optional<LowerBoundWitness> find_lower_bound_witness(const Graph& g);

}  // namespace catherd
