#include "catherd/structure.hpp"

#include <algorithm>
#include <bit>
#include <deque>

#include "catherd/solver.hpp"

namespace catherd {

namespace {

// Unit-capacity undirected network; each undirected edge is a pair of arcs
// that serve as each other's reverse.
class FlowNetwork {
 public:
  explicit FlowNetwork(int nodes) : head_(static_cast<std::size_t>(nodes)) {}

  void add_undirected(int a, int b) {
    int id = static_cast<int>(to_.size());
    to_.push_back(b);
    cap_.push_back(1);
    head_[static_cast<std::size_t>(a)].push_back(id);
    to_.push_back(a);
    cap_.push_back(1);
    head_[static_cast<std::size_t>(b)].push_back(id + 1);
  }

  int max_flow(int s, int t, int limit) {
    int flow = 0;
    while (flow < limit && augment(s, t)) ++flow;
    return flow;
  }

 private:
  bool augment(int s, int t) {
    std::vector<int> via(head_.size(), -1);
    std::vector<char> seen(head_.size(), 0);
    std::deque<int> queue{s};
    seen[static_cast<std::size_t>(s)] = 1;
    while (!queue.empty() && !seen[static_cast<std::size_t>(t)]) {
      int x = queue.front();
      queue.pop_front();
      for (int arc : head_[static_cast<std::size_t>(x)]) {
        int y = to_[static_cast<std::size_t>(arc)];
        if (cap_[static_cast<std::size_t>(arc)] == 0 || seen[static_cast<std::size_t>(y)]) continue;
        seen[static_cast<std::size_t>(y)] = 1;
        via[static_cast<std::size_t>(y)] = arc;
        queue.push_back(y);
      }
    }
    if (!seen[static_cast<std::size_t>(t)]) return false;
    for (int y = t; y != s;) {
      int arc = via[static_cast<std::size_t>(y)];
      --cap_[static_cast<std::size_t>(arc)];
      ++cap_[static_cast<std::size_t>(arc ^ 1)];
      y = to_[static_cast<std::size_t>(arc ^ 1)];
    }
    return true;
  }

  std::vector<std::vector<int>> head_;
  std::vector<int> to_;
  std::vector<int> cap_;
};

bool is_forest(const Graph& g) {
  return g.edge_count() == g.vertex_count() - component_count(g, EdgeMask::full(g));
}

// Farthest vertex from `from` within its component, with the BFS parents.
std::pair<Vertex, std::vector<Vertex>> farthest(const Graph& g, Vertex from) {
  std::vector<Vertex> parent(static_cast<std::size_t>(g.vertex_count()), -2);
  parent[static_cast<std::size_t>(from)] = -1;
  std::deque<Vertex> queue{from};
  Vertex last = from;
  while (!queue.empty()) {
    last = queue.front();
    queue.pop_front();
    for (const auto& inc : g.incident(last)) {
      if (parent[static_cast<std::size_t>(inc.to)] != -2) continue;
      parent[static_cast<std::size_t>(inc.to)] = last;
      queue.push_back(inc.to);
    }
  }
  return {last, parent};
}

std::vector<Vertex> forest_longest_path(const Graph& g) {
  std::vector<Vertex> best;
  std::vector<char> done(static_cast<std::size_t>(g.vertex_count()), 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (done[static_cast<std::size_t>(v)]) continue;
    for (Vertex x : component_of(g, EdgeMask::full(g), v)) done[static_cast<std::size_t>(x)] = 1;
    auto [a, p0] = farthest(g, v);
    auto [b, parent] = farthest(g, a);
    std::vector<Vertex> path;
    for (Vertex x = b; x != -1; x = parent[static_cast<std::size_t>(x)]) path.push_back(x);
    if (path.size() > best.size()) best = std::move(path);
  }
  return best;
}

std::vector<Vertex> exact_longest_path(const Graph& g) {
  const int n = g.vertex_count();
  if (n > kMaxExactPathVertices) {
    throw StructureError("exact longest path is limited to " + std::to_string(kMaxExactPathVertices) +
                         " vertices for graphs with cycles");
  }
  std::vector<std::uint32_t> nbr(static_cast<std::size_t>(n), 0);
  for (const auto& e : g.edges()) {
    nbr[static_cast<std::size_t>(e.u)] |= 1u << e.v;
    nbr[static_cast<std::size_t>(e.v)] |= 1u << e.u;
  }
  // ends[S]: vertices at which some simple path covering exactly S can end.
  const std::uint32_t total = 1u << n;
  std::vector<std::uint32_t> ends(total, 0);
  std::uint32_t best_set = 1;
  for (Vertex v = 0; v < n; ++v) ends[1u << v] = 1u << v;
  for (std::uint32_t s = 1; s < total; ++s) {
    std::uint32_t e = ends[s];
    if (e == 0) continue;
    if (std::popcount(s) > std::popcount(best_set)) best_set = s;
    for (std::uint32_t x = e; x != 0; x &= x - 1) {
      int v = std::countr_zero(x);
      for (std::uint32_t y = nbr[static_cast<std::size_t>(v)] & ~s; y != 0; y &= y - 1) {
        int w = std::countr_zero(y);
        ends[s | (1u << w)] |= 1u << w;
      }
    }
  }
  // Walk back from any end of the best set.
  std::vector<Vertex> path;
  std::uint32_t s = best_set;
  int v = std::countr_zero(ends[s]);
  while (true) {
    path.push_back(v);
    std::uint32_t rest = s & ~(1u << v);
    if (rest == 0) break;
    int prev = -1;
    for (std::uint32_t y = nbr[static_cast<std::size_t>(v)] & rest; y != 0; y &= y - 1) {
      int w = std::countr_zero(y);
      if (ends[rest] >> w & 1) {
        prev = w;
        break;
      }
    }
    s = rest;
    v = prev;
  }
  return path;
}

}  // namespace

std::vector<EdgeId> bridges(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
  std::vector<EdgeId> out;
  int clock = 0;
  // Iterative DFS: (vertex, parent edge, next incidence index).
  struct Frame {
    Vertex v;
    EdgeId via;
    std::size_t next;
  };
  for (Vertex root = 0; root < n; ++root) {
    if (disc[static_cast<std::size_t>(root)] >= 0) continue;
    std::vector<Frame> stack{{root, -1, 0}};
    disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = clock++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      auto inc = g.incident(f.v);
      if (f.next < inc.size()) {
        const auto& i = inc[f.next++];
        if (i.edge == f.via) continue;
        if (disc[static_cast<std::size_t>(i.to)] < 0) {
          disc[static_cast<std::size_t>(i.to)] = low[static_cast<std::size_t>(i.to)] = clock++;
          stack.push_back({i.to, i.edge, 0});
        } else {
          low[static_cast<std::size_t>(f.v)] = std::min(low[static_cast<std::size_t>(f.v)], disc[static_cast<std::size_t>(i.to)]);
        }
      } else {
        Frame done = f;
        stack.pop_back();
        if (!stack.empty()) {
          Vertex p = stack.back().v;
          low[static_cast<std::size_t>(p)] = std::min(low[static_cast<std::size_t>(p)], low[static_cast<std::size_t>(done.v)]);
          if (low[static_cast<std::size_t>(done.v)] > disc[static_cast<std::size_t>(p)]) out.push_back(done.via);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

BlockTree two_edge_connected_components(const Graph& g) {
  BlockTree bt;
  bt.bridges = bridges(g);
  EdgeMask mask = EdgeMask::full(g);
  for (EdgeId e : bt.bridges) mask.set(e, false);
  bt.component = component_labels(g, mask);
  int count = bt.component.empty() ? 0 : *std::max_element(bt.component.begin(), bt.component.end()) + 1;
  bt.members.resize(static_cast<std::size_t>(count));
  for (Vertex v = 0; v < g.vertex_count(); ++v) bt.members[static_cast<std::size_t>(bt.component[static_cast<std::size_t>(v)])].push_back(v);
  for (EdgeId e : bt.bridges) {
    bt.links.emplace_back(bt.component[static_cast<std::size_t>(g.edge(e).u)], bt.component[static_cast<std::size_t>(g.edge(e).v)]);
  }
  return bt;
}

bool is_two_edge_connected(const Graph& g) {
  return g.vertex_count() >= 2 && is_connected(g) && bridges(g).empty();
}

int edge_disjoint_paths(const Graph& g, Vertex a, Vertex b) {
  if (!g.contains(a) || !g.contains(b)) throw StructureError("vertex out of range");
  if (a == b) throw StructureError("edge_disjoint_paths needs distinct endpoints");
  FlowNetwork net(g.vertex_count());
  for (const auto& e : g.edges()) net.add_undirected(e.u, e.v);
  return net.max_flow(a, b, g.degree(a));
}

std::vector<Vertex> longest_path(const Graph& g) {
  if (g.vertex_count() == 0) return {};
  return is_forest(g) ? forest_longest_path(g) : exact_longest_path(g);
}

int longest_path_order(const Graph& g) { return static_cast<int>(longest_path(g).size()); }

int max_edge_disjoint_cycles_through(const Graph& g, Vertex v) {
  if (!g.contains(v)) throw StructureError("vertex out of range");
  auto br = bridges(g);
  std::vector<Incidence> usable;
  for (const auto& inc : g.incident(v)) {
    if (!std::binary_search(br.begin(), br.end(), inc.edge)) usable.push_back(inc);
  }
  const int d = static_cast<int>(usable.size());
  if (d > kMaxCycleDegree) {
    throw StructureError("cycle packing is limited to " + std::to_string(kMaxCycleDegree) + " non-bridge edges at a vertex");
  }
  if (d < 2) return 0;
  const int ceiling = d / 2;
  const int sink = g.vertex_count();
  int best = 0;
  // Edge 0 always sits on the sink side; the complement split is symmetric.
  for (std::uint32_t side = 1; side < (1u << (d - 1)); ++side) {
    std::uint32_t a_side = side << 1;
    int a_count = std::popcount(a_side);
    if (std::min(a_count, d - a_count) <= best) continue;
    FlowNetwork net(g.vertex_count() + 1);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const auto& ed = g.edge(e);
      if (!ed.touches(v)) {
        net.add_undirected(ed.u, ed.v);
        continue;
      }
      auto at = std::find_if(usable.begin(), usable.end(), [&](const Incidence& i) { return i.edge == e; });
      if (at == usable.end()) continue;  // bridge
      int idx = static_cast<int>(at - usable.begin());
      net.add_undirected((a_side >> idx & 1) ? v : sink, ed.other(v));
    }
    best = std::max(best, net.max_flow(v, sink, std::min(a_count, d - a_count)));
    if (best == ceiling) break;
  }
  return best;
}

long long herder_bound(int k) {
  const long long x = k;
  return x * x * x - 2 * x * x + 3 * x - 2;
}

EvadibilityReport evadibility_report(const Graph& g, bool solve) {
  EvadibilityReport r;
  r.longest_path = longest_path_order(g);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    int c = max_edge_disjoint_cycles_through(g, v);
    if (r.cycle_vertex < 0 || c > r.max_cycles) {
      r.cycle_vertex = v;
      r.max_cycles = c;
    }
  }
  r.k = std::max(r.longest_path + 1, r.max_cycles + 1);
  r.bound = herder_bound(r.k);
  if (solve) r.cut_value = cat_number(g);
  return r;
}

int evadibility_threshold(const Graph& g) { return evadibility_report(g).k; }

}  // namespace catherd
