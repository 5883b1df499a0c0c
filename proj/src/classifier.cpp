#include "catherd/classifier.hpp"

#include <algorithm>
#include <functional>

#include "catherd/generators.hpp"
#include "catherd/structure.hpp"

namespace catherd {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Cut0:
      return "Cut0";
    case Verdict::Cut1:
      return "Cut1";
    case Verdict::Cut2:
      return "Cut2";
    case Verdict::Cut3:
      return "Cut3";
    case Verdict::AtLeast4:
      return "AtLeast4";
  }
  return "?";
}

int verdict_value(Verdict v) { return static_cast<int>(v); }

Verdict verdict_from_value(int value) { return static_cast<Verdict>(std::clamp(value, 0, 4)); }

namespace {

CatalogEntry entry(std::string id, const std::string& spec, int value) {
  return {std::move(id), spec, from_spec(spec), value};
}

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> d;
  for (Vertex v = 0; v < g.vertex_count(); ++v) d.push_back(g.degree(v));
  std::sort(d.begin(), d.end());
  return d;
}

// Search order for g: repeatedly take the unplaced vertex with most placed
// neighbors, so adjacency constraints bite early.
std::vector<Vertex> match_order(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<Vertex> order;
  std::vector<int> placed_nbrs(static_cast<std::size_t>(n), 0);
  std::vector<char> placed(static_cast<std::size_t>(n), 0);
  for (int step = 0; step < n; ++step) {
    Vertex pick = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (placed[static_cast<std::size_t>(v)]) continue;
      if (pick < 0 || placed_nbrs[static_cast<std::size_t>(v)] > placed_nbrs[static_cast<std::size_t>(pick)] ||
          (placed_nbrs[static_cast<std::size_t>(v)] == placed_nbrs[static_cast<std::size_t>(pick)] &&
           g.degree(v) > g.degree(pick))) {
        pick = v;
      }
    }
    placed[static_cast<std::size_t>(pick)] = 1;
    order.push_back(pick);
    for (const auto& inc : g.incident(pick)) ++placed_nbrs[static_cast<std::size_t>(inc.to)];
  }
  return order;
}

std::optional<std::vector<Vertex>> match(const Graph& g, const Graph& h) {
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return std::nullopt;
  if (degree_sequence(g) != degree_sequence(h)) return std::nullopt;
  const int n = g.vertex_count();
  auto order = match_order(g);
  std::vector<Vertex> map(static_cast<std::size_t>(n), -1);
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  std::function<bool(int)> extend = [&](int i) {
    if (i == n) return true;
    Vertex x = order[static_cast<std::size_t>(i)];
    for (Vertex y = 0; y < n; ++y) {
      if (used[static_cast<std::size_t>(y)] || h.degree(y) != g.degree(x)) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) {
        Vertex px = order[static_cast<std::size_t>(j)];
        ok = g.adjacent(x, px) == h.adjacent(y, map[static_cast<std::size_t>(px)]);
      }
      if (!ok) continue;
      map[static_cast<std::size_t>(x)] = y;
      used[static_cast<std::size_t>(y)] = 1;
      if (extend(i + 1)) return true;
      used[static_cast<std::size_t>(y)] = 0;
    }
    map[static_cast<std::size_t>(x)] = -1;
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return map;
}

// Vertices of a simple cycle with at least `min_len` vertices, if any.
std::optional<std::vector<Vertex>> find_long_cycle(const Graph& g, int min_len) {
  const int n = g.vertex_count();
  std::vector<Vertex> path;
  std::vector<char> on(static_cast<std::size_t>(n), 0);
  std::optional<std::vector<Vertex>> found;
  std::function<void(Vertex, Vertex)> dfs = [&](Vertex start, Vertex x) {
    for (const auto& inc : g.incident(x)) {
      if (found) return;
      if (inc.to == start && static_cast<int>(path.size()) >= min_len) {
        found = path;
        return;
      }
      if (inc.to <= start || on[static_cast<std::size_t>(inc.to)]) continue;
      on[static_cast<std::size_t>(inc.to)] = 1;
      path.push_back(inc.to);
      dfs(start, inc.to);
      path.pop_back();
      on[static_cast<std::size_t>(inc.to)] = 0;
    }
  };
  for (Vertex s = 0; s < n && !found; ++s) {
    path = {s};
    on[static_cast<std::size_t>(s)] = 1;
    dfs(s, s);
    on[static_cast<std::size_t>(s)] = 0;
  }
  return found;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_cut2() {
  static const std::vector<CatalogEntry> entries = {
      entry("C3", "cycle:3", 2),
      entry("P3", "path:3", 2),
      entry("P4", "path:4", 2),
  };
  return entries;
}

const std::vector<CatalogEntry>& catalog_cut3() {
  static const std::vector<CatalogEntry> entries = {
      entry("P5", "path:5", 3),
      entry("P6", "path:6", 3),
      entry("P7", "path:7", 3),
      entry("P8", "path:8", 3),
      entry("2C3+e", "two_triangles_bridge", 3),
      entry("triangle_a1", "triangle_tails:1,0,0", 3),
      entry("triangle_a2", "triangle_tails:1,1,0", 3),
      entry("triangle_a3", "triangle_tails:1,1,1", 3),
      entry("triangle_b2", "triangle_tails:2,0,0", 3),
      entry("triangle_b3", "triangle_tails:3,0,0", 3),
      entry("triangle_b4", "triangle_tails:4,0,0", 3),
      entry("triangle_c", "triangle_fork:1,2", 3),
      entry("square_0", "cycle:4", 3),
      entry("square_1", "square_leaves:1,0,0,0", 3),
      entry("square_2", "square_leaves:1,1,0,0", 3),
      entry("pentagon", "cycle:5", 3),
  };
  return entries;
}

std::optional<std::vector<Vertex>> is_isomorphic(const Graph& g, const Graph& h) {
  if (g.vertex_count() > kMaxIsomorphismVertices || h.vertex_count() > kMaxIsomorphismVertices) {
    throw ClassifyError("isomorphism test is limited to " + std::to_string(kMaxIsomorphismVertices) + " vertices");
  }
  return match(g, h);
}

Classification classify(const Graph& g) {
  if (!is_connected(g)) throw ClassifyError("classify needs a connected graph");
  Classification c;
  if (g.vertex_count() == 1) {
    c.verdict = Verdict::Cut0;
    c.catalog_id = "K1";
    c.mapping = {0};
    c.prune = prune_duplicate_leaves(g);
    return c;
  }
  if (g.vertex_count() == 2) {
    c.verdict = Verdict::Cut1;
    c.catalog_id = "K2";
    c.mapping = {0, 1};
    c.prune = prune_duplicate_leaves(g);
    return c;
  }
  c.prune = is_tree(g) ? prune_tree(g) : prune_duplicate_leaves(g);
  const Graph& pruned = c.prune.result;
  for (const auto* catalog : {&catalog_cut2(), &catalog_cut3()}) {
    for (const auto& e : *catalog) {
      // Size checks inside match() reject before any search.
      if (auto m = match(pruned, e.graph)) {
        c.verdict = verdict_from_value(e.value);
        c.catalog_id = e.id;
        c.mapping = std::move(*m);
        return c;
      }
    }
  }
  c.verdict = Verdict::AtLeast4;
  c.witness = find_lower_bound_witness(g);
  return c;
}

bool has_leaf_certificate(const Graph& g, Vertex v) {
  if (!g.contains(v)) throw ClassifyError("vertex out of range");
  return g.degree(v) == 1;
}

std::optional<EdgeId> star_component_certificate(const Graph& g, Vertex v) {
  if (!g.contains(v)) throw ClassifyError("vertex out of range");
  std::optional<EdgeId> best;
  std::size_t best_size = 0;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    EdgeMask m = delete_edge(EdgeMask::full(g), e);
    auto comp = component_of(g, m, v);
    if (comp.size() < 2 || static_cast<int>(comp.size()) - 1 != degree(g, m, v)) continue;
    bool leaves = std::all_of(comp.begin(), comp.end(), [&](Vertex x) { return x == v || degree(g, m, x) == 1; });
    if (leaves && comp.size() > best_size) {
      best = e;
      best_size = comp.size();
    }
  }
  return best;
}

bool geq3_certificate(const Graph& g, Vertex v) {
  if (!g.contains(v)) throw ClassifyError("vertex out of range");
  if (g.edge_count() == 0) return false;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    EdgeMask m = delete_edge(EdgeMask::full(g), e);
    bool ok = false;
    for (const auto& a : g.incident(v)) {
      if (!m.test(a.edge)) continue;
      for (const auto& b : g.incident(a.to)) {
        if (!m.test(b.edge) || b.to == v) continue;
        // v - a - b is a 3-vertex path with v at an end (a triangle too if vb survives).
        ok = true;
      }
    }
    if (!ok) return false;
  }
  return true;
}

std::optional<CycleWithTail> find_cycle_with_tail(const Graph& g) {
  const EdgeMask full = EdgeMask::full(g);
  std::vector<char> settled(static_cast<std::size_t>(g.vertex_count()), 0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edge(e);
    if (settled[static_cast<std::size_t>(ed.u)]) continue;
    auto path = shortest_path(g, delete_edge(full, e), ed.u, ed.v);
    if (!path) continue;
    // path + e is a cycle; any other edge at one of its vertices is a tail.
    std::vector<EdgeId> cycle_edges{e};
    for (std::size_t i = 1; i < path->size(); ++i) cycle_edges.push_back(*g.find_edge((*path)[i - 1], (*path)[i]));
    std::sort(cycle_edges.begin(), cycle_edges.end());
    std::optional<EdgeId> tail;
    for (Vertex x : *path) {
      for (const auto& inc : g.incident(x)) {
        if (!std::binary_search(cycle_edges.begin(), cycle_edges.end(), inc.edge) && (!tail || inc.edge < *tail)) {
          tail = inc.edge;
        }
      }
    }
    if (tail) return CycleWithTail{*path, *tail};
    // A bare cycle is its whole component; skip the rest of it.
    for (Vertex x : *path) settled[static_cast<std::size_t>(x)] = 1;
  }
  return std::nullopt;
}

std::optional<LowerBoundWitness> find_lower_bound_witness(const Graph& g) {
  using Kind = LowerBoundWitness::Kind;
  auto bt = two_edge_connected_components(g);
  for (std::size_t c = 0; c < bt.members.size(); ++c) {
    const auto& vs = bt.members[c];
    int inner = 0;
    for (const auto& e : g.edges()) {
      if (bt.component[static_cast<std::size_t>(e.u)] == static_cast<int>(c) &&
          bt.component[static_cast<std::size_t>(e.v)] == static_cast<int>(c)) {
        ++inner;
      }
    }
    if (inner > static_cast<int>(vs.size())) {
      return LowerBoundWitness{Kind::MeetingCycles, vs,
                               "2-edge-connected block with " + std::to_string(inner) + " edges on " +
                                   std::to_string(vs.size()) + " vertices contains two cycles sharing a vertex"};
    }
  }
  if (g.vertex_count() <= kMaxExactPathVertices) {
    if (auto cyc = find_long_cycle(g, 6)) {
      return LowerBoundWitness{Kind::LongCycle, *cyc,
                               "cycle on " + std::to_string(cyc->size()) + " vertices (C6 or longer has cat number >= 4)"};
    }
  }
  try {
    auto path = longest_path(g);
    if (path.size() >= 9) {
      return LowerBoundWitness{Kind::LongPath, path,
                               "path on " + std::to_string(path.size()) + " vertices (P9 or longer has cat number >= 4)"};
    }
  } catch (const StructureError&) {
    // Too large for the exact search; no witness.
  }
  return std::nullopt;
}

}  // namespace catherd
