#include "catherd/solver.hpp"

#include <algorithm>
#include <bit>
#include <climits>

namespace catherd {

namespace {

constexpr std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

}  // namespace

Solver::Solver(const Graph& g, SolverConfig cfg) : g_(&g), cfg_(cfg) {
  if (g.edge_count() > std::min(cfg.max_edges, 64)) {
    throw SolverError("graph has " + std::to_string(g.edge_count()) + " edges; solver budget is " +
                      std::to_string(std::min(cfg.max_edges, 64)));
  }
  if (g.vertex_count() > 64) throw SolverError("solver supports at most 64 vertices");
  all_edges_ = g.edge_count() == 64 ? ~std::uint64_t{0} : bit(g.edge_count()) - 1;
  incident_mask_.assign(static_cast<std::size_t>(g.vertex_count()), 0);
  endpoints_ = g.edges();
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    incident_mask_[static_cast<std::size_t>(endpoints_[static_cast<std::size_t>(e)].u)] |= bit(e);
    incident_mask_[static_cast<std::size_t>(endpoints_[static_cast<std::size_t>(e)].v)] |= bit(e);
  }
  if (cfg.memo_capacity_hint > 0) memo_.reserve(cfg.memo_capacity_hint);
}

Solver::Component Solver::component(std::uint64_t mask, Vertex v) const {
  Component c{bit(v), 0};
  std::uint64_t frontier = bit(v);
  while (frontier != 0) {
    int x = std::countr_zero(frontier);
    frontier &= frontier - 1;
    std::uint64_t inc = incident_mask_[static_cast<std::size_t>(x)] & mask & ~c.edges;
    c.edges |= inc;
    while (inc != 0) {
      int e = std::countr_zero(inc);
      inc &= inc - 1;
      Vertex w = endpoints_[static_cast<std::size_t>(e)].other(x);
      if ((c.vertices & bit(w)) == 0) {
        c.vertices |= bit(w);
        frontier |= bit(w);
      }
    }
  }
  return c;
}

int Solver::reply_value(std::uint64_t after_cut, Vertex cat, int cutoff) {
  Component c = component(after_cut, cat);
  std::uint64_t others = c.vertices & ~bit(cat);
  int best = 0;
  while (others != 0) {
    int u = std::countr_zero(others);
    others &= others - 1;
    best = std::max(best, solve(after_cut, u));
    if (best >= cutoff) break;
  }
  return best;
}

int Solver::solve(std::uint64_t mask, Vertex v) {
  Component c = component(mask, v);
  if (c.edges == 0) return 0;
  const StateKey key{cfg_.restrict_to_component ? c.edges : mask, v};
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  // A cat with two or more edges survives any single cut.
  const int lower = std::popcount(incident_mask_[static_cast<std::size_t>(v)] & mask) == 1 ? 1 : 2;
  std::uint64_t candidates = cfg_.restrict_to_component ? c.edges : mask;
  int best = INT_MAX;
  while (candidates != 0 && best > lower) {
    int e = std::countr_zero(candidates);
    candidates &= candidates - 1;
    int value = 1 + reply_value(mask & ~bit(e), v, best - 1);
    best = std::min(best, value);
  }
  memo_.emplace(key, static_cast<std::uint8_t>(best));
  return best;
}

std::uint64_t Solver::check_mask(const EdgeMask& mask) const {
  if (mask.width() != g_->edge_count()) throw SolverError("mask does not belong to this graph");
  return mask.bits64();
}

void Solver::check_vertex(Vertex v) const {
  if (!g_->contains(v)) throw SolverError("vertex out of range: " + std::to_string(v));
}

int Solver::value(const EdgeMask& mask, Vertex v) {
  check_vertex(v);
  return solve(check_mask(mask), v);
}

int Solver::value_bits(std::uint64_t mask, Vertex v) {
  check_vertex(v);
  return solve(mask & all_edges_, v);
}

std::vector<int> Solver::values(const EdgeMask& mask) {
  std::uint64_t bits = check_mask(mask);
  std::vector<int> out(static_cast<std::size_t>(g_->vertex_count()));
  for (Vertex v = 0; v < g_->vertex_count(); ++v) out[static_cast<std::size_t>(v)] = solve(bits, v);
  return out;
}

int Solver::cat_number() {
  int best = 0;
  for (Vertex v = 0; v < g_->vertex_count(); ++v) best = std::max(best, solve(all_edges_, v));
  return best;
}

Vertex Solver::best_start() {
  Vertex arg = 0;
  int best = -1;
  for (Vertex v = 0; v < g_->vertex_count(); ++v) {
    int value = solve(all_edges_, v);
    if (value > best) {
      best = value;
      arg = v;
    }
  }
  return arg;
}

MoveAnalysis Solver::analyze(const EdgeMask& mask, Vertex cat) {
  check_vertex(cat);
  const std::uint64_t bits = check_mask(mask);
  const Component here = component(bits, cat);
  if (here.edges == 0) throw SolverError("cat is already captured; no moves to analyze");

  MoveAnalysis out{cat, solve(bits, cat), {}};
  for (EdgeId e = 0; e < g_->edge_count(); ++e) {
    if ((bits & bit(e)) == 0) continue;
    const std::uint64_t after = bits & ~bit(e);
    CutOption opt{e, endpoints_[static_cast<std::size_t>(e)], 0, (here.edges & bit(e)) == 0, false, false, {}};
    Component there = component(after, cat);
    opt.isolates = there.edges == 0;
    int best_reply = 0;
    std::uint64_t others = there.vertices & ~bit(cat);
    while (others != 0) {
      int u = std::countr_zero(others);
      others &= others - 1;
      int value = solve(after, u);
      best_reply = std::max(best_reply, value);
      opt.replies.push_back({u, value, false});
    }
    for (auto& r : opt.replies) r.optimal = r.value == best_reply;
    opt.value = 1 + best_reply;
    out.cuts.push_back(std::move(opt));
  }
  for (auto& c : out.cuts) c.optimal = c.value == out.value;
  return out;
}

EdgeId Solver::best_cut(const EdgeMask& mask, Vertex cat) {
  check_vertex(cat);
  const std::uint64_t bits = check_mask(mask);
  const Component here = component(bits, cat);
  if (here.edges == 0) throw SolverError("cat is already captured");
  const int target = solve(bits, cat);
  std::uint64_t candidates = cfg_.restrict_to_component ? here.edges : bits;
  while (candidates != 0) {
    int e = std::countr_zero(candidates);
    candidates &= candidates - 1;
    if (1 + reply_value(bits & ~bit(e), cat, INT_MAX) == target) return e;
  }
  throw SolverError("internal: no cut attains the solved value");
}

std::optional<Vertex> Solver::best_reply(const EdgeMask& mask, Vertex cat) {
  check_vertex(cat);
  const std::uint64_t bits = check_mask(mask);
  Component c = component(bits, cat);
  std::uint64_t others = c.vertices & ~bit(cat);
  std::optional<Vertex> arg;
  int best = -1;
  while (others != 0) {
    int u = std::countr_zero(others);
    others &= others - 1;
    int value = solve(bits, u);
    if (value > best) {
      best = value;
      arg = u;
    }
  }
  return arg;
}

int cat_number_from(const Graph& g, const EdgeMask& mask, Vertex v, SolverConfig cfg) {
  Solver solver(g, cfg);
  return solver.value(mask, v);
}

int cat_number(const Graph& g, SolverConfig cfg) {
  Solver solver(g, cfg);
  return solver.cat_number();
}

}  // namespace catherd
