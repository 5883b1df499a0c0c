#pragma once

// Independent reference implementations used only by the tests. Nothing here
// shares code with the library beyond the Graph type itself.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "catherd/graph.hpp"

namespace oracle {

using catherd::Edge;
using catherd::Graph;

inline int ceil_log2(int n) {
  int k = 0;
  while ((1 << k) < n) ++k;
  return k;
}

// Plain adjacency-matrix minimax. Every surviving edge is a candidate cut and
// the cat may go to any vertex reachable from its position.
class Minimax {
 public:
  explicit Minimax(const Graph& g) : g_(g) {}

  int value(std::uint64_t mask, int v) {
    auto key = std::make_pair(mask, v);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    int result;
    if (deg(mask, v) == 0) {
      result = 0;
    } else {
      result = 1 << 20;
      for (int e = 0; e < g_.edge_count(); ++e) {
        if (!(mask >> e & 1)) continue;
        std::uint64_t after = mask & ~(std::uint64_t{1} << e);
        int here;
        if (deg(after, v) == 0) {
          here = 1;
        } else {
          int best = 0;
          for (int u : reach(after, v)) {
            if (u != v) best = std::max(best, value(after, u));
          }
          here = 1 + best;
        }
        result = std::min(result, here);
      }
    }
    memo_[key] = result;
    return result;
  }

  int value(int v) { return value(full(), v); }

  int cat_number() {
    int best = 0;
    for (int v = 0; v < g_.vertex_count(); ++v) best = std::max(best, value(v));
    return best;
  }

  [[nodiscard]] std::uint64_t full() const {
    return g_.edge_count() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g_.edge_count()) - 1;
  }

 private:
  int deg(std::uint64_t mask, int v) const {
    int d = 0;
    for (int e = 0; e < g_.edge_count(); ++e) {
      if ((mask >> e & 1) && (g_.edge(e).u == v || g_.edge(e).v == v)) ++d;
    }
    return d;
  }

  std::vector<int> reach(std::uint64_t mask, int v) const {
    std::vector<char> seen(static_cast<std::size_t>(g_.vertex_count()), 0);
    seen[static_cast<std::size_t>(v)] = 1;
    bool grew = true;
    while (grew) {
      grew = false;
      for (int e = 0; e < g_.edge_count(); ++e) {
        if (!(mask >> e & 1)) continue;
        auto a = static_cast<std::size_t>(g_.edge(e).u), b = static_cast<std::size_t>(g_.edge(e).v);
        if (seen[a] != seen[b]) {
          seen[a] = seen[b] = 1;
          grew = true;
        }
      }
    }
    std::vector<int> out;
    for (int x = 0; x < g_.vertex_count(); ++x) {
      if (seen[static_cast<std::size_t>(x)]) out.push_back(x);
    }
    return out;
  }

  const Graph& g_;
  std::map<std::pair<std::uint64_t, int>, int> memo_;
};

inline bool connected_edges(int n, const std::vector<Edge>& edges) {
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return parent[static_cast<std::size_t>(x)] == x ? x
                                                    : parent[static_cast<std::size_t>(x)] = find(parent[static_cast<std::size_t>(x)]);
  };
  int comps = n;
  for (auto e : edges) {
    int a = find(e.u), b = find(e.v);
    if (a != b) {
      parent[static_cast<std::size_t>(a)] = b;
      --comps;
    }
  }
  return comps == 1;
}

// Minimal sorted edge list over all n! relabelings.
inline std::vector<Edge> brute_canonical(int n, const std::vector<Edge>& edges) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Edge> best;
  bool first = true;
  do {
    std::vector<Edge> mapped;
    for (auto e : edges) {
      int a = perm[static_cast<std::size_t>(e.u)], b = perm[static_cast<std::size_t>(e.v)];
      mapped.push_back({std::min(a, b), std::max(a, b)});
    }
    std::sort(mapped.begin(), mapped.end());
    if (first || mapped < best) {
      best = mapped;
      first = false;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Every connected graph on exactly n vertices up to isomorphism, by scanning
// all edge subsets of K_n.
inline std::vector<Graph> brute_connected_graphs(int n, int max_edges = 1 << 20) {
  std::vector<Edge> all;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) all.push_back({i, j});
  }
  std::set<std::vector<Edge>> seen;
  const std::uint64_t total = std::uint64_t{1} << all.size();
  for (std::uint64_t s = 0; s < total; ++s) {
    if (std::popcount(s) > max_edges || std::popcount(s) < n - 1) continue;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (s >> i & 1) edges.push_back(all[i]);
    }
    if (!connected_edges(n, edges)) continue;
    seen.insert(brute_canonical(n, edges));
  }
  std::vector<Graph> out;
  for (const auto& e : seen) out.emplace_back(n, e);
  return out;
}

inline std::vector<Graph> brute_connected_graphs_up_to(int max_n, int max_edges = 1 << 20) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n) {
    auto part = brute_connected_graphs(n, max_edges);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

// AHU encoding of a rooted tree.
inline std::string ahu(const std::vector<std::vector<int>>& adj, int v, int parent) {
  std::vector<std::string> kids;
  for (int w : adj[static_cast<std::size_t>(v)]) {
    if (w != parent) kids.push_back(ahu(adj, w, v));
  }
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (auto& k : kids) s += k;
  return s + ")";
}

// Canonical string of an unrooted tree: min AHU over its centers.
inline std::string tree_code(int n, const std::vector<Edge>& edges) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (auto e : edges) {
    adj[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::vector<int> layer;
  for (int v = 0; v < n; ++v) {
    deg[static_cast<std::size_t>(v)] = static_cast<int>(adj[static_cast<std::size_t>(v)].size());
    if (deg[static_cast<std::size_t>(v)] <= 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<int> next;
    for (int v : layer) {
      for (int w : adj[static_cast<std::size_t>(v)]) {
        if (--deg[static_cast<std::size_t>(w)] == 1) next.push_back(w);
      }
    }
    layer = next;
  }
  std::string best;
  for (int c : layer) {
    auto s = ahu(adj, c, -1);
    if (best.empty() || s < best) best = s;
  }
  return best;
}

// Non-isomorphic trees on exactly n vertices via Pruefer sequences.
inline std::vector<Graph> prufer_trees(int n) {
  if (n == 1) return {Graph(1, {})};
  if (n == 2) return {Graph(2, {{0, 1}})};
  std::map<std::string, Graph> reps;
  std::vector<int> seq(static_cast<std::size_t>(n - 2), 0);
  while (true) {
    std::vector<int> deg(static_cast<std::size_t>(n), 1);
    for (int x : seq) ++deg[static_cast<std::size_t>(x)];
    std::vector<Edge> edges;
    auto d = deg;
    for (int x : seq) {
      int leaf = 0;
      while (d[static_cast<std::size_t>(leaf)] != 1) ++leaf;
      edges.push_back({std::min(leaf, x), std::max(leaf, x)});
      --d[static_cast<std::size_t>(leaf)];
      --d[static_cast<std::size_t>(x)];
    }
    int a = -1;
    for (int v = 0; v < n; ++v) {
      if (d[static_cast<std::size_t>(v)] == 1) {
        if (a < 0) {
          a = v;
        } else {
          edges.push_back({a, v});
          break;
        }
      }
    }
    auto code = tree_code(n, edges);
    if (!reps.count(code)) reps.emplace(code, Graph(n, edges));
    std::size_t i = 0;
    while (i < seq.size() && ++seq[i] == n) seq[i++] = 0;
    if (i == seq.size()) break;
  }
  std::vector<Graph> out;
  for (auto& [k, g] : reps) out.push_back(g);
  return out;
}

// Maximum number of pairwise edge-disjoint cycles through v, by listing every
// cycle through v as an edge set and searching all packings.
inline int brute_cycle_packing(const Graph& g, int v) {
  std::set<std::uint64_t> cycles;
  std::vector<char> on_path(static_cast<std::size_t>(g.vertex_count()), 0);
  std::function<void(int, std::uint64_t, int)> dfs = [&](int x, std::uint64_t used, int len) {
    for (const auto& inc : g.incident(x)) {
      if (used >> inc.edge & 1) continue;
      std::uint64_t next = used | (std::uint64_t{1} << inc.edge);
      if (inc.to == v && len >= 2) {
        cycles.insert(next);
      } else if (!on_path[static_cast<std::size_t>(inc.to)] && inc.to != v) {
        on_path[static_cast<std::size_t>(inc.to)] = 1;
        dfs(inc.to, next, len + 1);
        on_path[static_cast<std::size_t>(inc.to)] = 0;
      }
    }
  };
  on_path[static_cast<std::size_t>(v)] = 1;
  dfs(v, 0, 0);
  std::vector<std::uint64_t> list(cycles.begin(), cycles.end());
  int best = 0;
  std::function<void(std::size_t, std::uint64_t, int)> pack = [&](std::size_t i, std::uint64_t used, int count) {
    best = std::max(best, count);
    for (std::size_t j = i; j < list.size(); ++j) {
      if ((list[j] & used) == 0) pack(j + 1, used | list[j], count + 1);
    }
  };
  pack(0, 0, 0);
  return best;
}

// Number of edge-disjoint a-b paths by repeated augmenting-path search on the
// undirected unit-capacity network.
inline int edge_disjoint_paths(const Graph& g, int a, int b) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> cap(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (auto e : g.edges()) {
    cap[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] = 1;
    cap[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] = 1;
  }
  int flow = 0;
  while (true) {
    std::vector<int> prev(static_cast<std::size_t>(n), -1);
    prev[static_cast<std::size_t>(a)] = a;
    std::vector<int> queue{a};
    for (std::size_t i = 0; i < queue.size() && prev[static_cast<std::size_t>(b)] < 0; ++i) {
      int x = queue[i];
      for (int y = 0; y < n; ++y) {
        if (cap[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] > 0 && prev[static_cast<std::size_t>(y)] < 0) {
          prev[static_cast<std::size_t>(y)] = x;
          queue.push_back(y);
        }
      }
    }
    if (prev[static_cast<std::size_t>(b)] < 0) return flow;
    for (int y = b; y != a; y = prev[static_cast<std::size_t>(y)]) {
      int x = prev[static_cast<std::size_t>(y)];
      --cap[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
      ++cap[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)];
    }
    ++flow;
  }
}

inline bool menger_two_edge_connected(const Graph& g) {
  if (g.vertex_count() < 2) return false;
  for (int a = 0; a < g.vertex_count(); ++a) {
    for (int b = a + 1; b < g.vertex_count(); ++b) {
      if (oracle::edge_disjoint_paths(g, a, b) < 2) return false;
    }
  }
  return true;
}

// Random connected graph: a random spanning tree plus extra random edges.
inline Graph random_connected(std::mt19937_64& rng, int n, int max_edges) {
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) {
    int p = std::uniform_int_distribution<int>(0, v - 1)(rng);
    edges.push_back({p, v});
  }
  std::vector<Edge> rest;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (std::find(edges.begin(), edges.end(), Edge{i, j}) == edges.end()) rest.push_back({i, j});
    }
  }
  std::shuffle(rest.begin(), rest.end(), rng);
  int extra = std::uniform_int_distribution<int>(0, std::max(0, max_edges - (n - 1)))(rng);
  for (int i = 0; i < extra && i < static_cast<int>(rest.size()); ++i) edges.push_back(rest[static_cast<std::size_t>(i)]);
  return Graph(n, edges);
}

}  // namespace oracle
