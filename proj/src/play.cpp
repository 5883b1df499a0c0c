#include "catherd/play.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace catherd {

namespace {

// Vertices reachable from `from` over surviving edges without entering `blocked`.
std::vector<char> reach_avoiding(const Graph& g, const EdgeMask& mask, Vertex from, Vertex blocked) {
  std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  std::vector<Vertex> stack{from};
  seen[static_cast<std::size_t>(from)] = 1;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (const auto& inc : g.incident(x)) {
      if (!mask.test(inc.edge) || inc.to == blocked || seen[static_cast<std::size_t>(inc.to)]) continue;
      seen[static_cast<std::size_t>(inc.to)] = 1;
      stack.push_back(inc.to);
    }
  }
  return seen;
}

CatMove path_to(const GameView& view, Vertex target) {
  auto path = shortest_path(view.graph, view.mask, view.cat, target);
  if (!path) throw IllegalMove("internal: no path from " + std::to_string(view.cat) + " to " + std::to_string(target));
  return CatMove{std::move(*path)};
}

std::vector<Vertex> other_vertices_in_component(const GameView& view) {
  auto comp = component_of(view.graph, view.mask, view.cat);
  std::erase(comp, view.cat);
  return comp;
}

std::vector<EdgeId> surviving_edges(const EdgeMask& mask) {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < mask.width(); ++e) {
    if (mask.test(e)) out.push_back(e);
  }
  return out;
}

std::string describe_event(const TraceEvent& ev) {
  switch (ev.kind) {
    case TraceEvent::Kind::Place:
      return "place at " + std::to_string(ev.vertex);
    case TraceEvent::Kind::Cut:
      return "cut edge #" + std::to_string(ev.edge);
    case TraceEvent::Kind::Move:
      return "move to " + std::to_string(ev.vertex);
  }
  return "?";
}

}  // namespace

std::optional<std::string> check_cat_move(const Graph& g, const EdgeMask& mask, Vertex cat, const CatMove& move) {
  const auto& p = move.path;
  if (p.size() < 2) return "cat must move along a non-trivial path";
  if (p.front() != cat) return "witness path must start at the cat's vertex " + std::to_string(cat);
  std::set<Vertex> seen;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!g.contains(p[i])) return "vertex " + std::to_string(p[i]) + " out of range";
    if (!seen.insert(p[i]).second) return "witness path repeats vertex " + std::to_string(p[i]);
    if (i == 0) continue;
    auto e = g.find_edge(p[i - 1], p[i]);
    if (!e) return "no edge " + std::to_string(p[i - 1]) + "-" + std::to_string(p[i]);
    if (!mask.test(*e)) return "edge " + std::to_string(p[i - 1]) + "-" + std::to_string(p[i]) + " was cut";
  }
  return std::nullopt;
}

ScoreTrace play(const Graph& g, CatStrategy& cat, HerderStrategy& herder, std::uint64_t seed,
                std::optional<Vertex> start) {
  cat.reset(seed);
  herder.reset(seed ^ 0x5DEECE66DULL);
  ScoreTrace trace;
  EdgeMask mask = EdgeMask::full(g);
  Vertex pos = start ? *start : cat.place(g);
  if (!g.contains(pos)) throw IllegalMove("cat placement " + std::to_string(pos) + " is out of range");
  trace.start = pos;
  trace.events.push_back({TraceEvent::Kind::Place, pos, -1, {}});
  if (degree(g, mask, pos) == 0) {
    trace.captured = true;
    return trace;
  }
  while (true) {
    GameView herder_view{g, mask, pos, trace.events};
    EdgeId e = herder.cut(herder_view);
    if (e < 0 || e >= g.edge_count() || !mask.test(e)) {
      throw IllegalMove("herder '" + herder.name() + "' cut invalid edge #" + std::to_string(e) + " after " +
                        describe_event(trace.events.back()));
    }
    mask.set(e, false);
    ++trace.score;
    trace.events.push_back({TraceEvent::Kind::Cut, -1, e, {}});
    if (degree(g, mask, pos) == 0) {
      trace.captured = true;
      return trace;
    }
    GameView cat_view{g, mask, pos, trace.events};
    CatMove move = cat.move(cat_view);
    if (auto why = check_cat_move(g, mask, pos, move)) {
      throw IllegalMove("cat '" + cat.name() + "' made an illegal move from " + std::to_string(pos) + ": " + *why);
    }
    pos = move.destination();
    trace.events.push_back({TraceEvent::Kind::Move, pos, -1, move.path});
  }
}

// --- engine strategies -------------------------------------------------------

Vertex OptimalCat::place(const Graph&) { return solver_.best_start(); }

CatMove OptimalCat::move(const GameView& view) {
  auto target = solver_.best_reply(view.mask, view.cat);
  if (!target) throw IllegalMove("optimal cat has no move");
  return path_to(view, *target);
}

EdgeId OptimalHerder::cut(const GameView& view) { return solver_.best_cut(view.mask, view.cat); }

// --- greedy -------------------------------------------------------------------

Vertex GreedyCat::place(const Graph& g) {
  Vertex best = 0;
  for (Vertex v = 1; v < g.vertex_count(); ++v) {
    if (g.degree(v) > g.degree(best)) best = v;
  }
  return best;
}

CatMove GreedyCat::move(const GameView& view) {
  auto options = other_vertices_in_component(view);
  if (options.empty()) throw IllegalMove("greedy cat has no move");
  Vertex best = options.front();
  for (Vertex v : options) {
    if (degree(view.graph, view.mask, v) > degree(view.graph, view.mask, best)) best = v;
  }
  return path_to(view, best);
}

EdgeId GreedyHerder::cut(const GameView& view) {
  const Graph& g = view.graph;
  auto comp = component_of(g, view.mask, view.cat);
  std::vector<EdgeId> inside;
  for (EdgeId e : surviving_edges(view.mask)) {
    if (std::binary_search(comp.begin(), comp.end(), g.edge(e).u)) inside.push_back(e);
  }
  // Leaf cat: cut its only edge.
  if (degree(g, view.mask, view.cat) == 1) {
    for (const auto& inc : g.incident(view.cat)) {
      if (view.mask.test(inc.edge)) return inc.edge;
    }
  }
  // A cut leaving the cat at the center of a star ends the game next turn.
  std::optional<EdgeId> star_cut;
  std::size_t star_size = 0;
  for (EdgeId e : inside) {
    EdgeMask after = delete_edge(view.mask, e);
    auto c = component_of(g, after, view.cat);
    if (c.size() < 2) continue;
    bool star = std::all_of(c.begin(), c.end(), [&](Vertex x) {
      return x == view.cat || (degree(g, after, x) == 1 && g.find_edge(x, view.cat) &&
                               after.test(*g.find_edge(x, view.cat)));
    });
    if (star && c.size() > star_size) {
      star_cut = e;
      star_size = c.size();
    }
  }
  if (star_cut) return *star_cut;
  EdgeId best = inside.front();
  std::size_t best_size = comp.size() + 1;
  for (EdgeId e : inside) {
    auto size = component_of(g, delete_edge(view.mask, e), view.cat).size();
    if (size < best_size) {
      best_size = size;
      best = e;
    }
  }
  return best;
}

// --- random -------------------------------------------------------------------

Vertex RandomCat::place(const Graph& g) {
  std::uniform_int_distribution<int> pick(0, g.vertex_count() - 1);
  return pick(rng_);
}

CatMove RandomCat::move(const GameView& view) {
  auto options = other_vertices_in_component(view);
  if (options.empty()) throw IllegalMove("random cat has no move");
  std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
  return path_to(view, options[pick(rng_)]);
}

EdgeId RandomHerder::cut(const GameView& view) {
  auto edges = surviving_edges(view.mask);
  std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
  return edges[pick(rng_)];
}

// --- cycle severing -------------------------------------------------------------

EdgeId CycleSeveringHerder::cut(const GameView& view) {
  const Graph& g = view.graph;
  const EdgeMask& mask = view.mask;
  auto comp = component_of(g, mask, view.cat);
  if (!anchor_ || !std::binary_search(comp.begin(), comp.end(), *anchor_)) {
    anchor_ = view.cat;
    anchors_.push_back(view.cat);
  }
  const Vertex anchor = *anchor_;

  // Sever cycles through the anchor: an anchor edge lies on a cycle iff its
  // far end still reaches the anchor without it.
  for (const auto& inc : g.incident(anchor)) {
    if (!mask.test(inc.edge)) continue;
    auto reach = reach_avoiding(g, delete_edge(mask, inc.edge), inc.to, -1);
    if (reach[static_cast<std::size_t>(anchor)]) return inc.edge;
  }

  if (view.cat == anchor) {
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (mask.test(e) && !std::binary_search(comp.begin(), comp.end(), g.edge(e).u)) return e;
    }
    // No passing move exists: cut the in-component edge farthest from the anchor.
    std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
    std::deque<Vertex> queue{anchor};
    dist[static_cast<std::size_t>(anchor)] = 0;
    while (!queue.empty()) {
      Vertex x = queue.front();
      queue.pop_front();
      for (const auto& inc : g.incident(x)) {
        if (!mask.test(inc.edge) || dist[static_cast<std::size_t>(inc.to)] >= 0) continue;
        dist[static_cast<std::size_t>(inc.to)] = dist[static_cast<std::size_t>(x)] + 1;
        queue.push_back(inc.to);
      }
    }
    EdgeId best = -1;
    int best_dist = -1;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (!mask.test(e)) continue;
      const auto& ed = g.edge(e);
      int d = std::min(dist[static_cast<std::size_t>(ed.u)], dist[static_cast<std::size_t>(ed.v)]);
      if (d > best_dist) {
        best_dist = d;
        best = e;
      }
    }
    return best;
  }

  // The cat is in the branch behind exactly one anchor edge.
  for (const auto& inc : g.incident(anchor)) {
    if (!mask.test(inc.edge)) continue;
    auto reach = reach_avoiding(g, mask, inc.to, anchor);
    if (reach[static_cast<std::size_t>(view.cat)]) {
      anchor_ = inc.to;
      anchors_.push_back(inc.to);
      return inc.edge;
    }
  }
  throw IllegalMove("internal: cycle-severing herder lost track of the cat");
}

std::unique_ptr<HerderStrategy> cycle_severing_herder(const Graph&) {
  return std::make_unique<CycleSeveringHerder>();
}

}  // namespace catherd
