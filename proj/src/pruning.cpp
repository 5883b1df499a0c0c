#include "catherd/pruning.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace catherd {

std::string to_string(PruneRule rule) {
  switch (rule) {
    case PruneRule::DuplicateLeaf:
      return "duplicate_leaf";
    case PruneRule::TreeP2System:
      return "tree_p2_system";
    case PruneRule::TreeLeafOfP2:
      return "tree_leaf_of_p2";
  }
  return "unknown";
}

namespace {

// Mutable working copy keyed by the input's vertex ids.
class Workspace {
 public:
  explicit Workspace(const Graph& g) : alive_(static_cast<std::size_t>(g.vertex_count()), 1) {
    adj_.resize(static_cast<std::size_t>(g.vertex_count()));
    for (const auto& e : g.edges()) {
      adj_[static_cast<std::size_t>(e.u)].insert(e.v);
      adj_[static_cast<std::size_t>(e.v)].insert(e.u);
    }
  }

  [[nodiscard]] int size() const { return static_cast<int>(alive_.size()); }
  [[nodiscard]] bool alive(Vertex v) const { return alive_[static_cast<std::size_t>(v)] != 0; }
  [[nodiscard]] int deg(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
  [[nodiscard]] const std::set<Vertex>& nbrs(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }

  void remove(Vertex v) {
    for (Vertex w : adj_[static_cast<std::size_t>(v)]) adj_[static_cast<std::size_t>(w)].erase(v);
    adj_[static_cast<std::size_t>(v)].clear();
    alive_[static_cast<std::size_t>(v)] = 0;
  }

  // A branch u - v - w with deg(v) = 2 and w a leaf; returns w.
  [[nodiscard]] std::optional<Vertex> p2_leaf(Vertex u, Vertex v) const {
    if (deg(v) != 2) return std::nullopt;
    for (Vertex w : nbrs(v)) {
      if (w != u && deg(w) == 1) return w;
    }
    return std::nullopt;
  }

 private:
  std::vector<char> alive_;
  std::vector<std::set<Vertex>> adj_;
};

using Finder = void (*)(const Workspace&, std::vector<PruneStep>&);

void find_duplicate_leaves(const Workspace& ws, std::vector<PruneStep>& out) {
  for (Vertex y = 0; y < ws.size(); ++y) {
    if (!ws.alive(y) || ws.deg(y) < 3) continue;
    std::vector<Vertex> leaves;
    for (Vertex w : ws.nbrs(y)) {
      if (ws.deg(w) == 1) leaves.push_back(w);
    }
    if (leaves.size() < 2) continue;
    // Every non-kept leaf is an instance; ascending-order mode uses the last.
    for (std::size_t i = leaves.size(); i-- > 1;) {
      out.push_back({PruneRule::DuplicateLeaf, {leaves[i]}, {leaves[0], y, leaves[i]}});
    }
  }
}

void find_p2_systems(const Workspace& ws, std::vector<PruneStep>& out) {
  for (Vertex u = 0; u < ws.size(); ++u) {
    if (!ws.alive(u) || ws.deg(u) < 3) continue;
    std::vector<std::pair<Vertex, Vertex>> branches;
    std::vector<Vertex> others;
    for (Vertex v : ws.nbrs(u)) {
      if (auto w = ws.p2_leaf(u, v)) {
        branches.emplace_back(v, *w);
      } else {
        others.push_back(v);
      }
    }
    Vertex t;
    if (others.empty()) {
      t = branches.back().first;
      branches.pop_back();
    } else if (others.size() == 1 && ws.deg(others[0]) >= 2) {
      t = others[0];
    } else {
      continue;
    }
    if (branches.size() < 2) continue;
    PruneStep step{PruneRule::TreeP2System, {}, {t, u, branches[0].first, branches[0].second}};
    for (std::size_t i = 1; i < branches.size(); ++i) {
      step.removed.push_back(branches[i].first);
      step.removed.push_back(branches[i].second);
    }
    std::sort(step.removed.begin(), step.removed.end());
    out.push_back(std::move(step));
  }
}

std::optional<PruneStep> leaf_of_p2_at(const Workspace& ws, Vertex u) {
  const std::vector<Vertex> n(ws.nbrs(u).begin(), ws.nbrs(u).end());
  // Each assignment of (l, v, t) to the three neighbors, lowest l then v.
  for (Vertex l : n) {
    if (ws.deg(l) != 1) continue;
    for (Vertex v : n) {
      if (v == l) continue;
      auto w = ws.p2_leaf(u, v);
      Vertex t = n[0] + n[1] + n[2] - l - v;
      if (w && ws.deg(t) >= 2) return PruneStep{PruneRule::TreeLeafOfP2, {l}, {*w, v, u, l, t}};
    }
  }
  return std::nullopt;
}

void find_leaves_of_p2(const Workspace& ws, std::vector<PruneStep>& out) {
  for (Vertex u = 0; u < ws.size(); ++u) {
    if (!ws.alive(u) || ws.deg(u) != 3) continue;
    if (auto step = leaf_of_p2_at(ws, u)) out.push_back(std::move(*step));
  }
}

PruneReport run(const Graph& g, const std::vector<Finder>& finders, const PruneOptions& opts) {
  Workspace ws(g);
  PruneReport report;
  std::mt19937_64 rng(opts.random_order.value_or(0));
  while (true) {
    std::vector<PruneStep> candidates;
    for (Finder f : finders) {
      f(ws, candidates);
      if (!candidates.empty() && !opts.random_order) break;
    }
    if (candidates.empty()) break;
    std::size_t pick = 0;
    if (opts.random_order) {
      pick = std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(rng);
    }
    PruneStep step = std::move(candidates[pick]);
    for (Vertex v : step.removed) ws.remove(v);
    report.steps.push_back(std::move(step));
  }

  std::vector<Vertex> keep;
  report.vertex_map.assign(static_cast<std::size_t>(g.vertex_count()), -1);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (ws.alive(v)) {
      report.vertex_map[static_cast<std::size_t>(v)] = static_cast<Vertex>(keep.size());
      keep.push_back(v);
    }
  }
  report.result = induced_subgraph(g, keep);
  return report;
}

}  // namespace

PruneReport prune_duplicate_leaves(const Graph& g, const PruneOptions& opts) {
  if (!is_connected(g)) throw PruneError("duplicate-leaf pruning needs a connected graph");
  return run(g, {&find_duplicate_leaves}, opts);
}

PruneReport prune_tree(const Graph& t, const PruneOptions& opts) {
  if (!is_tree(t)) throw PruneError("tree pruning needs a tree");
  return run(t, {&find_duplicate_leaves, &find_p2_systems, &find_leaves_of_p2}, opts);
}

Graph leaf_duplicate(const Graph& g, Vertex u, Vertex v) {
  if (!g.contains(u) || !g.contains(v)) throw PruneError("leaf_duplicate: vertex out of range");
  if (!g.adjacent(u, v)) throw PruneError("leaf_duplicate: u and v are not adjacent");
  if (g.degree(v) != 1) throw PruneError("leaf_duplicate: v must be a leaf");
  if (g.degree(u) < 2) throw PruneError("leaf_duplicate: u must have degree at least 2");
  auto edges = g.edges();
  edges.push_back({u, g.vertex_count()});
  return Graph(g.vertex_count() + 1, std::move(edges));
}

Graph tree_add_p2(const Graph& t, Vertex u, Vertex v, Vertex w, int k) {
  if (!is_tree(t)) throw PruneError("tree_add_p2: input is not a tree");
  if (k < 0) throw PruneError("tree_add_p2: k must be non-negative");
  if (k == 0) return t;
  for (Vertex x : {u, v, w}) {
    if (!t.contains(x)) throw PruneError("tree_add_p2: vertex out of range");
  }
  if (!t.adjacent(u, v) || !t.adjacent(v, w) || u == w) throw PruneError("tree_add_p2: u v w is not a path");
  if (t.degree(u) != 2 || t.degree(v) != 2 || t.degree(w) != 1) {
    throw PruneError("tree_add_p2: need deg(u) = deg(v) = 2 and deg(w) = 1");
  }
  if (t.vertex_count() == 4) throw PruneError("tree_add_p2: the construction excludes P4");
  auto edges = t.edges();
  int next = t.vertex_count();
  for (int i = 0; i < k; ++i, next += 2) {
    edges.push_back({u, next});
    edges.push_back({next, next + 1});
  }
  return Graph(next, std::move(edges));
}

bool is_pruned_graph(const Graph& g) { return prune_duplicate_leaves(g).identity(); }

bool is_pruned_tree(const Graph& t) { return prune_tree(t).identity(); }

}  // namespace catherd
