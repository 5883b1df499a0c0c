#include "catherd/enumerate.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "catherd/generators.hpp"

namespace catherd {

namespace {

using Adj = std::vector<std::uint16_t>;

Adj adjacency(const Graph& g) {
  Adj a(static_cast<std::size_t>(g.vertex_count()), 0);
  for (const auto& e : g.edges()) {
    a[static_cast<std::size_t>(e.u)] |= static_cast<std::uint16_t>(1u << e.v);
    a[static_cast<std::size_t>(e.v)] |= static_cast<std::uint16_t>(1u << e.u);
  }
  return a;
}

// Ordered partition as a color per vertex; colors 0..k-1 are cell positions.
using Coloring = std::vector<int>;

Coloring refine(const Adj& adj, Coloring colors) {
  const int n = static_cast<int>(colors.size());
  while (true) {
    std::vector<std::pair<std::vector<int>, int>> sig(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      auto& s = sig[static_cast<std::size_t>(v)].first;
      s.push_back(colors[static_cast<std::size_t>(v)]);
      for (int w = 0; w < n; ++w) {
        if (adj[static_cast<std::size_t>(v)] >> w & 1) s.push_back(colors[static_cast<std::size_t>(w)]);
      }
      std::sort(s.begin() + 1, s.end());
      sig[static_cast<std::size_t>(v)].second = v;
    }
    std::vector<std::vector<int>> distinct;
    for (const auto& [s, v] : sig) distinct.push_back(s);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    Coloring next(static_cast<std::size_t>(n));
    for (const auto& [s, v] : sig) {
      next[static_cast<std::size_t>(v)] =
          static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), s) - distinct.begin());
    }
    int before = *std::max_element(colors.begin(), colors.end());
    int after = *std::max_element(next.begin(), next.end());
    colors = std::move(next);
    if (after == before) return colors;
  }
}

std::uint64_t key_for(const Adj& adj, const std::vector<int>& order) {
  const int n = static_cast<int>(order.size());
  std::uint64_t key = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      key = (key << 1) | (adj[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] >> order[static_cast<std::size_t>(j)] & 1);
    }
  }
  return key;
}

struct Search {
  const Adj& adj;
  int n;
  bool found = false;
  std::uint64_t best_key = 0;
  std::vector<int> best_order{};

  void run(const Coloring& colors) {
    int cells = *std::max_element(colors.begin(), colors.end()) + 1;
    if (cells == n) {
      std::vector<int> order(static_cast<std::size_t>(n));
      for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(colors[static_cast<std::size_t>(v)])] = v;
      std::uint64_t key = key_for(adj, order);
      if (!found || key < best_key) {
        found = true;
        best_key = key;
        best_order = std::move(order);
      }
      return;
    }
    // First non-singleton cell in partition order.
    std::vector<int> size(static_cast<std::size_t>(cells), 0);
    for (int c : colors) ++size[static_cast<std::size_t>(c)];
    int target = 0;
    while (size[static_cast<std::size_t>(target)] == 1) ++target;
    std::vector<int> members;
    for (int v = 0; v < n; ++v) {
      if (colors[static_cast<std::size_t>(v)] == target) members.push_back(v);
    }
    std::vector<int> tried;
    for (int v : members) {
      bool twin = std::any_of(tried.begin(), tried.end(), [&](int u) {
        auto bu = static_cast<std::uint16_t>(adj[static_cast<std::size_t>(u)] & ~(1u << v));
        auto bv = static_cast<std::uint16_t>(adj[static_cast<std::size_t>(v)] & ~(1u << u));
        return bu == bv;
      });
      if (twin) continue;
      tried.push_back(v);
      Coloring next = colors;
      for (auto& c : next) {
        if (c > target) ++c;
      }
      for (int u : members) {
        if (u != v) next[static_cast<std::size_t>(u)] = target + 1;
      }
      run(refine(adj, std::move(next)));
    }
  }
};

Graph from_order(const Graph& g, const std::vector<int>& order) {
  std::vector<Vertex> pos(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) pos[static_cast<std::size_t>(order[i])] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    Vertex a = pos[static_cast<std::size_t>(e.u)], b = pos[static_cast<std::size_t>(e.v)];
    edges.push_back({std::min(a, b), std::max(a, b)});
  }
  return Graph(g.vertex_count(), std::move(edges));
}

void check_config(const EnumConfig& cfg) {
  if (cfg.min_vertices < 1 || cfg.max_vertices < cfg.min_vertices) throw EnumError("bad vertex range");
  if (cfg.max_vertices > 10) throw EnumError("enumeration is limited to 10 vertices");
  if (cfg.max_edges < 0) throw EnumError("max_edges must be non-negative");
  if (cfg.graph_class == GraphClass::Connected && cfg.max_vertices > 8 && cfg.max_edges > cfg.max_vertices + 3) {
    throw EnumError("connected enumeration above 8 vertices is limited to |E| <= |V| + 3");
  }
}

// Canonical set for one layer, sorted by key.
using Layer = std::map<std::uint64_t, Graph>;

std::vector<Layer> tree_layers(int max_n) {
  std::vector<Layer> by_n(static_cast<std::size_t>(max_n + 1));
  by_n[1].emplace(0, Graph(1, {}));
  for (int n = 2; n <= max_n; ++n) {
    for (const auto& [key, t] : by_n[static_cast<std::size_t>(n - 1)]) {
      for (Vertex v = 0; v < n - 1; ++v) {
        auto edges = t.edges();
        edges.push_back({v, n - 1});
        auto cf = canonical_form(Graph(n, std::move(edges)));
        by_n[static_cast<std::size_t>(n)].emplace(cf.key, std::move(cf.graph));
      }
    }
  }
  return by_n;
}

bool is_spider(const Graph& t) {
  int branch = 0;
  for (Vertex v = 0; v < t.vertex_count(); ++v) branch += t.degree(v) >= 3 ? 1 : 0;
  return branch <= 1;
}

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  const int n = g.vertex_count();
  if (n > kMaxCanonicalVertices) {
    throw EnumError("canonical form supports at most " + std::to_string(kMaxCanonicalVertices) + " vertices");
  }
  if (n == 0) return {g, {}, 0};
  Adj adj = adjacency(g);
  Search search{adj, n};
  search.run(refine(adj, Coloring(static_cast<std::size_t>(n), 0)));
  CanonicalForm cf{from_order(g, search.best_order), search.best_order, search.best_key};
  return cf;
}

void enumerate(const EnumConfig& cfg, const GraphSink& sink) {
  check_config(cfg);
  auto forest = tree_layers(cfg.max_vertices);
  for (int n = cfg.min_vertices; n <= cfg.max_vertices; ++n) {
    const Layer& trees_n = forest[static_cast<std::size_t>(n)];
    switch (cfg.graph_class) {
      case GraphClass::Trees:
        if (n - 1 <= cfg.max_edges) {
          for (const auto& [k, t] : trees_n) sink(t);
        }
        break;
      case GraphClass::Spiders:
        if (n - 1 <= cfg.max_edges) {
          for (const auto& [k, t] : trees_n) {
            if (is_spider(t)) sink(t);
          }
        }
        break;
      case GraphClass::Connected:
      case GraphClass::Unicyclic: {
        const int top = cfg.graph_class == GraphClass::Unicyclic ? std::min(cfg.max_edges, n) : cfg.max_edges;
        if (n - 1 > top) break;
        Layer layer = trees_n;
        for (int m = n - 1; m <= top; ++m) {
          if (cfg.graph_class == GraphClass::Connected || m == n) {
            for (const auto& [k, g] : layer) sink(g);
          }
          if (m == top) break;
          Layer next;
          for (const auto& [k, g] : layer) {
            for (Vertex a = 0; a < n; ++a) {
              for (Vertex b = a + 1; b < n; ++b) {
                if (g.adjacent(a, b)) continue;
                auto edges = g.edges();
                edges.push_back({a, b});
                auto cf = canonical_form(Graph(n, std::move(edges)));
                next.emplace(cf.key, std::move(cf.graph));
              }
            }
          }
          layer = std::move(next);
        }
        break;
      }
    }
  }
}

std::vector<Graph> enumerate(const EnumConfig& cfg) {
  std::vector<Graph> out;
  enumerate(cfg, [&](const Graph& g) { out.push_back(g); });
  return out;
}

std::vector<Graph> connected_graphs(const EnumConfig& cfg) {
  EnumConfig c = cfg;
  c.graph_class = GraphClass::Connected;
  return enumerate(c);
}

std::vector<Graph> trees(int n) {
  EnumConfig c{n, n, std::max(0, n - 1), GraphClass::Trees};
  return enumerate(c);
}

std::vector<Graph> trees_up_to(int max_n) {
  EnumConfig c{1, max_n, std::max(0, max_n - 1), GraphClass::Trees};
  return enumerate(c);
}

std::vector<Graph> spiders(const std::vector<std::vector<int>>& legs) {
  std::vector<Graph> out;
  for (const auto& l : legs) out.push_back(spider(l));
  return out;
}

std::string write_edge_lists(const std::vector<Graph>& graphs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < graphs.size(); ++i) out << "# graph " << i << '\n' << serialize_graph(graphs[i]);
  return out.str();
}

}  // namespace catherd
