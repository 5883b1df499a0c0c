#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "catherd/graph.hpp"

namespace catherd {

enum class PruneRule { DuplicateLeaf, TreeP2System, TreeLeafOfP2 };

[[nodiscard]] std::string to_string(PruneRule rule);

/// One rule application. Vertex ids refer to the input graph of the whole
/// prune call, not to intermediate relabelings.
///
/// anchors per rule:
///   DuplicateLeaf   {x, y, z}           z removed, x the kept leaf
///   TreeP2System    {t, u, v0, w0}      v_i, w_i (i >= 1) removed
///   TreeLeafOfP2    {w, v, u, l, t}     l removed
struct PruneStep {
  PruneRule rule;
  std::vector<Vertex> removed;
  std::vector<Vertex> anchors;
};

struct PruneReport {
  std::vector<PruneStep> steps;
  Graph result;
  /// Input vertex -> result vertex, or -1 when removed. Survivors keep their
  /// relative order.
  std::vector<Vertex> vertex_map;

  [[nodiscard]] bool identity() const { return steps.empty(); }
};

class PruneError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct PruneOptions {
  /// When set, pick uniformly among all applicable rule instances instead of
  /// the first one in ascending vertex order. Only for order-sensitivity tests.
  std::optional<std::uint64_t> random_order;
};

/// Fixpoint of the duplicate-leaf rule: for x ~ y ~ z with deg(x) = deg(z) = 1
/// and deg(y) >= 3, delete z. Stems are scanned in ascending order and the
/// highest-id leaf goes first. Requires a connected graph.
[[nodiscard]] PruneReport prune_duplicate_leaves(const Graph& g, const PruneOptions& opts = {});

/// Pruned tree: duplicate leaves first, then the two P2 rules, to a fixpoint.
///
/// Rule 1: t ~ u with paths u v_i w_i (0 <= i <= k, k >= 1), deg(t) >= 2,
/// deg(u) = k + 2, deg(v_i) = 2, deg(w_i) = 1. Keeps the branch with the
/// lowest v. When every neighbor of u heads such a branch, the highest one
/// plays t.
///
/// Rule 2: leaf l on u with deg(u) = 3, a branch u v w (deg v = 2, w a leaf)
/// and a third neighbor t with deg(t) >= 2. Deletes l. Only cut(T) is
/// preserved by this rule, not individual vertex values.
[[nodiscard]] PruneReport prune_tree(const Graph& t, const PruneOptions& opts = {});

/// G plus a new vertex x = n joined to u, duplicating leaf v.
/// Requires deg(u) >= 2, uv in E and deg(v) = 1.
[[nodiscard]] Graph leaf_duplicate(const Graph& g, Vertex u, Vertex v);

/// T_k: T plus k new paths u v_i w_i with v_i = n + 2(i-1), w_i = v_i + 1.
/// Requires T a tree, T not P4, uvw a path with deg(u) = deg(v) = 2, deg(w) = 1.
/// k = 0 returns T as is.
[[nodiscard]] Graph tree_add_p2(const Graph& t, Vertex u, Vertex v, Vertex w, int k);

[[nodiscard]] bool is_pruned_graph(const Graph& g);
[[nodiscard]] bool is_pruned_tree(const Graph& t);

}  // namespace catherd
