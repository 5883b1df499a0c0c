#include "catherd/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "catherd/classifier.hpp"
#include "catherd/enumerate.hpp"
#include "catherd/generators.hpp"
#include "catherd/infinite.hpp"
#include "catherd/play.hpp"
#include "catherd/pruning.hpp"
#include "catherd/solver.hpp"
#include "catherd/structure.hpp"

namespace catherd {

namespace {

constexpr std::size_t kMaxDumps = 32;

class Recorder {
 public:
  explicit Recorder(SuiteResult& r) : r_(r) {}

  void expect(bool ok, const std::function<std::string()>& what) {
    ++r_.checked;
    if (ok) return;
    ++r_.failures;
    if (r_.counterexamples.size() < kMaxDumps) r_.counterexamples.push_back(what());
  }

 private:
  SuiteResult& r_;
};

struct Bounds {
  int n;
  int m;
};

Bounds bounds(const VerifyOptions& opts, int n, int m) {
  Bounds b{opts.max_n.value_or(n), opts.max_m.value_or(m)};
  if (b.n < 1 || b.n > kMaxCanonicalVertices) {
    throw VerifyError("--max-n must be between 1 and " + std::to_string(kMaxCanonicalVertices));
  }
  if (b.m < 0 || b.m > 64) throw VerifyError("--max-m must be between 0 and 64");
  return b;
}

int ceil_log2(int n) {
  int c = 0;
  while ((1 << c) < n) ++c;
  return c;
}

std::vector<Graph> connected_up_to(int max_n, int max_m) {
  return connected_graphs({1, max_n, max_m, GraphClass::Connected});
}

int max_edges(int n) { return n * (n - 1) / 2; }

std::string join(const std::vector<int>& xs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? "," : "") << xs[i];
  return out.str();
}

bool is_pruned(const Graph& g) { return is_tree(g) ? is_pruned_tree(g) : is_pruned_graph(g); }

PruneReport prune(const Graph& g) { return is_tree(g) ? prune_tree(g) : prune_duplicate_leaves(g); }

std::optional<std::string> catalog_match(const Graph& g, const std::vector<CatalogEntry>& catalog) {
  for (const auto& e : catalog) {
    if (is_isomorphic(g, e.graph)) return e.id;
  }
  return std::nullopt;
}

// --- brute-force references --------------------------------------------------

// v is the centre of a star component of the masked graph: at least one other
// vertex, and every surviving edge in the component touches v.
bool star_centred(const Graph& g, const EdgeMask& mask, Vertex v) {
  auto comp = component_of(g, mask, v);
  if (comp.size() < 2) return false;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!mask.test(e)) continue;
    const auto& ed = g.edge(e);
    if (std::binary_search(comp.begin(), comp.end(), ed.u) && !ed.touches(v)) return false;
  }
  return true;
}

// Edmonds-Karp on the adjacency matrix, unit capacity each way.
int brute_flow(const Graph& g, Vertex s, Vertex t) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> cap(n, std::vector<int>(n, 0));
  for (const auto& e : g.edges()) cap[e.u][e.v] = cap[e.v][e.u] = 1;
  int flow = 0;
  for (;;) {
    std::vector<int> prev(n, -1);
    prev[s] = s;
    std::queue<int> q;
    q.push(s);
    while (!q.empty() && prev[t] < 0) {
      int x = q.front();
      q.pop();
      for (int y = 0; y < n; ++y) {
        if (prev[y] < 0 && cap[x][y] > 0) {
          prev[y] = x;
          q.push(y);
        }
      }
    }
    if (prev[t] < 0) return flow;
    for (int y = t; y != s; y = prev[y]) {
      --cap[prev[y]][y];
      ++cap[y][prev[y]];
    }
    ++flow;
  }
}

// Edge sets of all simple cycles through v.
std::vector<std::uint64_t> cycles_through(const Graph& g, Vertex v) {
  std::set<std::uint64_t> found;
  std::vector<bool> on(g.vertex_count(), false);
  std::function<void(Vertex, std::uint64_t, int)> walk = [&](Vertex x, std::uint64_t used, int len) {
    for (const auto& inc : g.incident(x)) {
      if (used >> inc.edge & 1) continue;
      if (inc.to == v) {
        if (len >= 2) found.insert(used | std::uint64_t{1} << inc.edge);
        continue;
      }
      if (on[inc.to]) continue;
      on[inc.to] = true;
      walk(inc.to, used | std::uint64_t{1} << inc.edge, len + 1);
      on[inc.to] = false;
    }
  };
  on[v] = true;
  walk(v, 0, 0);
  return {found.begin(), found.end()};
}

int brute_packing(const std::vector<std::uint64_t>& cycles, std::size_t from, std::uint64_t used) {
  int best = 0;
  for (std::size_t i = from; i < cycles.size(); ++i) {
    if (cycles[i] & used) continue;
    best = std::max(best, 1 + brute_packing(cycles, i + 1, used | cycles[i]));
  }
  return best;
}

int brute_longest_path(const Graph& g) {
  int best = g.vertex_count() > 0 ? 1 : 0;
  std::vector<bool> on(g.vertex_count(), false);
  std::function<void(Vertex, int)> walk = [&](Vertex x, int len) {
    best = std::max(best, len);
    for (const auto& inc : g.incident(x)) {
      if (on[inc.to]) continue;
      on[inc.to] = true;
      walk(inc.to, len + 1);
      on[inc.to] = false;
    }
  };
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    on[v] = true;
    walk(v, 1);
    on[v] = false;
  }
  return best;
}

bool joined(const Graph& g, const EdgeMask& mask, Vertex a, Vertex b) {
  auto comp = component_of(g, mask, a);
  return std::binary_search(comp.begin(), comp.end(), b);
}

// --- suites ------------------------------------------------------------------

void paths(const VerifyOptions& opts, SuiteResult& r) {
  const int top = bounds(opts, 9, 64).n;
  r.scope = "n = 2.." + std::to_string(top);
  Recorder rec(r);
  for (int n = 2; n <= top; ++n) {
    const int got = cat_number(from_spec("path:" + std::to_string(n)));
    rec.expect(got == ceil_log2(n), [&] {
      return "path:" + std::to_string(n) + ": solver " + std::to_string(got) + ", expected " +
             std::to_string(ceil_log2(n));
    });
  }
}

void cycles(const VerifyOptions& opts, SuiteResult& r) {
  const int top = bounds(opts, 10, 64).n;
  r.scope = "n = 3.." + std::to_string(top);
  Recorder rec(r);
  for (int n = 3; n <= top; ++n) {
    const int want = ceil_log2(2 * (n / 2)) + 1;
    const int got = cat_number(from_spec("cycle:" + std::to_string(n)));
    rec.expect(got == want, [&] {
      return "cycle:" + std::to_string(n) + ": solver " + std::to_string(got) + ", expected " + std::to_string(want);
    });
  }
}

void stars(const VerifyOptions& opts, SuiteResult& r) {
  const int top = bounds(opts, 9, 64).n;
  r.scope = "K1, K2, K_{1,n} for n = 2.." + std::to_string(top) + " leaves";
  Recorder rec(r);
  const int k1 = cat_number(Graph(1, {}));
  const int k2 = cat_number(Graph(2, {{0, 1}}));
  rec.expect(k1 == 0, [&] { return "K1: solver " + std::to_string(k1) + ", expected 0"; });
  rec.expect(k2 == 1, [&] { return "K2: solver " + std::to_string(k2) + ", expected 1"; });
  for (int leaves = 2; leaves <= top; ++leaves) {
    // star:n is a centre with n - 1 leaves.
    const Graph g = from_spec("star:" + std::to_string(leaves + 1));
    const int got = cat_number(g);
    rec.expect(got == 2 && g.degree(0) == leaves, [&] {
      return "K_{1," + std::to_string(leaves) + "}: solver " + std::to_string(got) + ", expected 2";
    });
  }
}

void cut1(const VerifyOptions& opts, SuiteResult& r) {
  const auto b = bounds(opts, 6, 64);
  r.scope = "connected graphs, n <= " + std::to_string(b.n) + ", m <= " + std::to_string(b.m);
  Recorder rec(r);
  for (const auto& g : connected_up_to(b.n, b.m)) {
    Solver s(g);
    const auto values = s.values(EdgeMask::full(g));
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      rec.expect((values[v] == 1) == (g.degree(v) == 1), [&] {
        return one_line(g) + ": vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)) +
               " and value " + std::to_string(values[v]);
      });
    }
    const int top = *std::max_element(values.begin(), values.end());
    rec.expect((top == 1) == (g.vertex_count() == 2),
               [&] { return one_line(g) + ": cat number " + std::to_string(top); });
  }
}

void cut2(const VerifyOptions& opts, SuiteResult& r) {
  const auto b = bounds(opts, 6, 64);
  r.scope = "connected graphs, n <= " + std::to_string(b.n) + ", m <= " + std::to_string(b.m);
  Recorder rec(r);
  std::vector<Graph> pruned_two;
  for (const auto& g : connected_up_to(b.n, b.m)) {
    Solver s(g);
    const auto full = EdgeMask::full(g);
    const auto values = s.values(full);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (values[v] < 2) continue;
      bool star = false;
      for (EdgeId e = 0; e < g.edge_count() && !star; ++e) star = star_centred(g, delete_edge(full, e), v);
      rec.expect((values[v] == 2) == star, [&] {
        return one_line(g) + ": vertex " + std::to_string(v) + " has value " + std::to_string(values[v]) +
               (star ? " but is" : " and is not") + " a star centre after one cut";
      });
      rec.expect(star == star_component_certificate(g, v).has_value(), [&] {
        return one_line(g) + ": star certificate disagrees with brute force at vertex " + std::to_string(v);
      });
    }
    const int top = *std::max_element(values.begin(), values.end());
    if (top != 2) continue;
    const Graph pruned = prune(g).result;
    const auto id = catalog_match(pruned, catalog_cut2());
    rec.expect(id.has_value(), [&] { return one_line(g) + ": value 2 but prunes to " + one_line(pruned); });
    if (is_pruned(g) && std::none_of(pruned_two.begin(), pruned_two.end(),
                                     [&](const Graph& h) { return is_isomorphic(g, h).has_value(); })) {
      pruned_two.push_back(g);
    }
  }
  // The pruned value-2 graphs found are exactly the catalog.
  const auto& catalog = catalog_cut2();
  for (const auto& e : catalog) {
    const int got = cat_number(e.graph);
    rec.expect(got == 2, [&] { return "catalog " + e.id + " solves to " + std::to_string(got); });
    if (e.graph.vertex_count() > b.n || e.graph.edge_count() > b.m) continue;
    rec.expect(std::any_of(pruned_two.begin(), pruned_two.end(),
                           [&](const Graph& h) { return is_isomorphic(e.graph, h).has_value(); }),
               [&] { return "catalog " + e.id + " is not among the pruned value-2 graphs"; });
  }
  for (const auto& g : pruned_two) {
    rec.expect(catalog_match(g, catalog).has_value(),
               [&] { return one_line(g) + ": pruned with value 2 but not catalogued"; });
  }
}

struct Catalog3Set {
  std::vector<Graph> graphs;
  std::string scope;
};

Catalog3Set catalog3_graphs(const VerifyOptions& opts) {
  const auto b = bounds(opts, 7, 10);
  const int tree_n = opts.max_n.value_or(10);
  if (tree_n < 1 || tree_n > kMaxCanonicalVertices) throw VerifyError("--max-n out of range");
  Catalog3Set set;
  set.graphs = connected_up_to(b.n, b.m);
  for (auto& t : trees_up_to(tree_n)) {
    if (t.vertex_count() > b.n || t.edge_count() > b.m) set.graphs.push_back(std::move(t));
  }
  set.scope = "connected n <= " + std::to_string(b.n) + ", m <= " + std::to_string(b.m) + " plus trees n <= " +
              std::to_string(tree_n) + " (" + std::to_string(set.graphs.size()) + " graphs)";
  return set;
}

void catalog3(const VerifyOptions& opts, SuiteResult& r) {
  const auto set = catalog3_graphs(opts);
  r.scope = set.scope;
  Recorder rec(r);
  for (const auto& g : set.graphs) {
    const int cut = cat_number(g);
    const auto c = classify(g);
    const int verdict = verdict_value(c.verdict);
    rec.expect(verdict == std::min(cut, 4), [&] {
      return one_line(g) + ": solver " + std::to_string(cut) + ", classify " + to_string(c.verdict) +
             (c.catalog_id ? " (" + *c.catalog_id + ")" : "") + ", pruned " + one_line(c.prune.result);
    });
    if (cut == 3 && is_pruned(g)) {
      rec.expect(catalog_match(g, catalog_cut3()).has_value(),
                 [&] { return one_line(g) + ": pruned with value 3 but not catalogued"; });
    }
  }
  for (const auto& e : catalog_cut3()) {
    const int got = cat_number(e.graph);
    rec.expect(got == 3, [&] { return "catalog " + e.id + " solves to " + std::to_string(got); });
  }
}

// Monotonicity under edge deletion lets a graph inherit a >= 4 value from any
// connected spanning subgraph with one edge fewer; only graphs whose every
// such subgraph is <= 3 go to the solver.
void rigidity(const VerifyOptions& opts, SuiteResult& r) {
  const int top = bounds(opts, 7, 64).n;
  r.scope = "connected graphs, n <= " + std::to_string(top);
  Recorder rec(r);
  const Graph two_c3 = from_spec("two_triangles_bridge");
  int hits = 0;
  for (int n = 1; n <= top; ++n) {
    std::map<std::uint64_t, bool> big;  // canonical key -> cut >= 4
    for (const auto& g : connected_graphs({n, n, max_edges(n), GraphClass::Connected})) {
      bool inherits = false;
      const auto br = bridges(g);
      for (EdgeId e = 0; e < g.edge_count() && !inherits; ++e) {
        if (std::binary_search(br.begin(), br.end(), e)) continue;
        auto edges = g.edges();
        edges.erase(edges.begin() + e);
        auto it = big.find(canonical_form(Graph(n, std::move(edges))).key);
        if (it == big.end()) throw std::logic_error("enumeration skipped a spanning subgraph");
        inherits = it->second;
      }
      const int cut = inherits ? 4 : cat_number(g);
      big[canonical_form(g).key] = cut >= 4;
      if (g.edge_count() - g.vertex_count() + 1 < 2) continue;
      if (cut <= 3) ++hits;
      rec.expect(cut >= 4 || is_isomorphic(g, two_c3).has_value(),
                 [&] { return one_line(g) + ": two or more cycles and value " + std::to_string(cut); });
    }
  }
  if (top >= 6) rec.expect(hits == 1, [&] { return std::to_string(hits) + " graphs with two cycles and value 3"; });
}

void pruning(const VerifyOptions& opts, SuiteResult& r) {
  const auto b = bounds(opts, 7, 64);
  const int tree_n = opts.max_n.value_or(9);
  r.scope = "duplicate leaves on connected n <= " + std::to_string(b.n) + ", m <= " + std::to_string(b.m) +
            "; tree rules on trees n <= " + std::to_string(tree_n);
  Recorder rec(r);
  for (const auto& g : connected_up_to(b.n, b.m)) {
    const auto report = prune_duplicate_leaves(g);
    if (report.identity()) continue;
    Solver before(g);
    Solver after(report.result);
    const auto vb = before.values(EdgeMask::full(g));
    const auto va = after.values(EdgeMask::full(report.result));
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      const Vertex w = report.vertex_map[v];
      if (w < 0) continue;
      rec.expect(vb[v] == va[w], [&] {
        return one_line(g) + ": vertex " + std::to_string(v) + " has value " + std::to_string(vb[v]) +
               ", its image " + std::to_string(w) + " in " + one_line(report.result) + " has " + std::to_string(va[w]);
      });
    }
  }
  for (const auto& t : trees_up_to(tree_n)) {
    const auto report = prune_tree(t);
    const int a = cat_number(t);
    const int p = cat_number(report.result);
    rec.expect(a == p, [&] {
      return one_line(t) + ": cut " + std::to_string(a) + ", pruned " + one_line(report.result) + " has cut " +
             std::to_string(p);
    });
  }
}

void spiders(const VerifyOptions&, SuiteResult& r) {
  r.scope = "{2,2,1}, {4,4,1}, {3,3,1} against the spiders without the leaf leg";
  Recorder rec(r);
  struct Sentinel {
    std::vector<int> legs;
    int with_leaf;
    int without;
  };
  // Pinned from the solver.
  const std::vector<Sentinel> pins = {{{2, 2}, 3, 3}, {{4, 4}, 4, 4}, {{3, 3}, 4, 3}};
  for (const auto& pin : pins) {
    auto legs = pin.legs;
    legs.push_back(1);
    const int a = cat_number(spider(legs));
    const int b = cat_number(spider(pin.legs));
    rec.expect(a == pin.with_leaf && b == pin.without, [&] {
      return "spider {" + join(legs) + "}: " + std::to_string(a) + ", {" + join(pin.legs) + "}: " + std::to_string(b) +
             "; pinned " + std::to_string(pin.with_leaf) + " and " + std::to_string(pin.without);
    });
  }
}

void bound(const VerifyOptions& opts, SuiteResult& r) {
  const auto set = catalog3_graphs(opts);
  const int random_m = opts.max_m.value_or(10);
  r.scope = set.scope + "; 100 random graphs, m <= " + std::to_string(random_m);
  Recorder rec(r);
  for (const auto& g : set.graphs) {
    const int cut = cat_number(g);
    const int k = evadibility_threshold(g);
    rec.expect(cut <= herder_bound(k), [&] {
      return one_line(g) + ": cut " + std::to_string(cut) + " above herder_bound(" + std::to_string(k) + ")";
    });
  }
  std::mt19937_64 rng(opts.seed);
  for (int i = 0; i < 100; ++i) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const Graph g = random_connected_graph(rng, n, std::max(random_m, n - 1));
    OptimalCat cat(g);
    auto herder = cycle_severing_herder(g);
    const auto trace = play(g, cat, *herder, opts.seed + i);
    const long long limit = herder_bound(evadibility_threshold(g));
    rec.expect(trace.captured && trace.score <= limit, [&] {
      return one_line(g) + ": cycle_severing took " + std::to_string(trace.score) + " cuts, bound " +
             std::to_string(limit);
    });
  }
}

void monotonicity(const VerifyOptions& opts, SuiteResult& r) {
  const auto b = bounds(opts, 8, 12);
  r.scope = "500 triples, n <= " + std::to_string(b.n) + ", m <= " + std::to_string(b.m);
  Recorder rec(r);
  std::mt19937_64 rng(opts.seed);
  for (int i = 0; i < 500; ++i) {
    const int n = 2 + static_cast<int>(rng() % static_cast<unsigned>(std::max(1, b.n - 1)));
    const Graph g = random_connected_graph(rng, std::min(n, b.n), std::max(b.m, n - 1));
    EdgeMask keep = EdgeMask::full(g);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (rng() % 2) keep.set(e, false);
    }
    const Graph h = masked_graph(g, keep);
    const Vertex v = static_cast<Vertex>(rng() % static_cast<unsigned>(g.vertex_count()));
    const int sub = cat_number_from(h, EdgeMask::full(h), v);
    const int whole = cat_number_from(g, EdgeMask::full(g), v);
    rec.expect(sub <= whole, [&] {
      return one_line(g) + ", subgraph " + one_line(h) + ", vertex " + std::to_string(v) + ": " +
             std::to_string(sub) + " > " + std::to_string(whole);
    });
  }
}

void infinite(const VerifyOptions& opts, SuiteResult& r) {
  r.scope = "binary_tree k = 25; ray, double_ray k = 1..12";
  Recorder rec(r);
  auto herders = [&] {
    std::vector<std::unique_ptr<inf::InfiniteHerder>> out;
    out.push_back(inf::cut_last_edge());
    out.push_back(inf::ray_cut_behind());
    for (std::uint64_t s = 0; s < 3; ++s) out.push_back(inf::random_herder(opts.seed + s));
    out.push_back(inf::random_herder(opts.seed + 3, 12));
    return out;
  };
  auto describe = [](const inf::ChallengeResult& res) {
    return res.family + ", " + res.cat + " vs " + res.herder + ", k = " + std::to_string(res.k) + ": " +
           inf::to_string(res.outcome) + " after " + std::to_string(res.survived) + " answered cuts";
  };
  const auto tree = inf::make_infinite("binary_tree");
  for (auto& herder : herders()) {
    auto cat = inf::subtree_strategy();
    const auto res = inf::run_challenge(tree, *cat, *herder, 25);
    rec.expect(res.outcome == inf::ChallengeResult::Outcome::SurvivedK, [&] { return describe(res); });
  }
  for (const char* spec : {"ray", "double_ray"}) {
    const auto g = inf::make_infinite(spec);
    for (int k = 1; k <= 12; ++k) {
      for (auto& herder : herders()) {
        auto cat = inf::median_path_strategy(k);
        const auto res = inf::run_challenge(g, *cat, *herder, k);
        rec.expect(res.outcome == inf::ChallengeResult::Outcome::SurvivedK, [&] { return describe(res); });
      }
    }
  }
  // The herder does win on the double ray, but only after k cuts.
  const auto line = inf::make_infinite("double_ray");
  for (int k = 1; k <= 12; ++k) {
    auto cat = inf::median_path_strategy(k);
    auto herder = inf::ray_cut_behind();
    const auto res = inf::play_until_capture(line, *cat, *herder, 10000);
    rec.expect(res.outcome == inf::ChallengeResult::Outcome::Captured && res.captured_at && *res.captured_at >= k,
               [&] { return describe(res); });
  }
}

void structure(const VerifyOptions& opts, SuiteResult& r) {
  const int top = bounds(opts, 6, 64).n;
  const auto graphs = all_graphs(top);
  r.scope = "all graphs, n <= " + std::to_string(top) + " (" + std::to_string(graphs.size()) + " graphs)";
  Recorder rec(r);
  for (const auto& g : graphs) {
    const int n = g.vertex_count();
    for (Vertex v = 0; v < n; ++v) {
      const int flow = max_edge_disjoint_cycles_through(g, v);
      const int brute = brute_packing(cycles_through(g, v), 0, 0);
      rec.expect(flow == brute, [&] {
        return one_line(g) + ": vertex " + std::to_string(v) + " flow count " + std::to_string(flow) +
               ", brute force " + std::to_string(brute);
      });
    }
    // Pairwise Menger: a and b share a 2-edge-connected component iff two
    // edge-disjoint a-b paths exist.
    const auto blocks = two_edge_connected_components(g);
    bool all_pairs = n >= 2;
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = a + 1; b < n; ++b) {
        const int lambda = brute_flow(g, a, b);
        all_pairs = all_pairs && lambda >= 2;
        rec.expect(edge_disjoint_paths(g, a, b) == lambda, [&] {
          return one_line(g) + ": edge-disjoint paths " + std::to_string(a) + "-" + std::to_string(b);
        });
        rec.expect((blocks.component[a] == blocks.component[b]) == (lambda >= 2), [&] {
          return one_line(g) + ": block of " + std::to_string(a) + " and " + std::to_string(b) + " vs " +
                 std::to_string(lambda) + " edge-disjoint paths";
        });
      }
    }
    rec.expect(is_two_edge_connected(g) == all_pairs,
               [&] { return one_line(g) + ": 2-edge-connectivity disagrees with the pairwise check"; });
    const auto br = bridges(g);
    const auto full = EdgeMask::full(g);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const bool cut_edge = !joined(g, delete_edge(full, e), g.edge(e).u, g.edge(e).v);
      rec.expect(cut_edge == std::binary_search(br.begin(), br.end(), e),
                 [&] { return one_line(g) + ": bridge status of edge " + std::to_string(e); });
    }
    const int lp = longest_path_order(g);
    const int brute_lp = brute_longest_path(g);
    rec.expect(lp == brute_lp, [&] {
      return one_line(g) + ": longest path " + std::to_string(lp) + ", brute force " + std::to_string(brute_lp);
    });
  }
}

void certificates(const VerifyOptions& opts, SuiteResult& r) {
  const auto b = bounds(opts, 6, 64);
  r.scope = "connected graphs, n <= " + std::to_string(b.n) + ", m <= " + std::to_string(b.m) +
            "; component restriction off for m <= 10";
  Recorder rec(r);
  for (const auto& g : connected_up_to(b.n, b.m)) {
    Solver s(g);
    const auto full = EdgeMask::full(g);
    const auto values = s.values(full);
    const int top = *std::max_element(values.begin(), values.end());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (geq3_certificate(g, v)) {
        rec.expect(values[v] >= 3, [&] {
          return one_line(g) + ": geq3 certificate at " + std::to_string(v) + " but value " + std::to_string(values[v]);
        });
      }
    }
    if (find_cycle_with_tail(g)) {
      const auto attaining = std::count(values.begin(), values.end(), top);
      rec.expect(top >= 3 && attaining >= 2, [&] {
        return one_line(g) + ": cycle with a tail, cat number " + std::to_string(top) + " attained " +
               std::to_string(attaining) + " times";
      });
    }
    if (auto w = find_lower_bound_witness(g)) {
      rec.expect(top >= 4, [&] { return one_line(g) + ": witness '" + w->description + "' but cat number " + std::to_string(top); });
    }
    rec.expect(top <= g.edge_count(), [&] { return one_line(g) + ": cat number above the edge count"; });
    if (g.edge_count() <= 10) {
      Solver open(g, {.restrict_to_component = false});
      const auto unrestricted = open.values(full);
      rec.expect(unrestricted == values,
                 [&] { return one_line(g) + ": values change without the component restriction"; });
    }
    if (g.vertex_count() >= 2) {
      OptimalCat cat(g);
      OptimalHerder herder(g);
      const auto trace = play(g, cat, herder, 0);
      rec.expect(trace.captured && trace.score == values[trace.start], [&] {
        return one_line(g) + ": optimal self-play scored " + std::to_string(trace.score) + " from " +
               std::to_string(trace.start) + ", value " + std::to_string(values[trace.start]);
      });
    }
  }
}

using SuiteFn = void (*)(const VerifyOptions&, SuiteResult&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r = {
      {"paths", paths},           {"cycles", cycles},       {"stars", stars},
      {"cut1", cut1},             {"cut2", cut2},           {"catalog3", catalog3},
      {"rigidity", rigidity},     {"pruning", pruning},     {"spiders", spiders},
      {"bound", bound},           {"monotonicity", monotonicity}, {"infinite", infinite},
      {"structure", structure},   {"certificates", certificates},
  };
  return r;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : registry()) out.push_back(name);
  return out;
}

SuiteResult run_suite(std::string_view name, const VerifyOptions& opts) {
  for (const auto& [n, fn] : registry()) {
    if (n != name) continue;
    SuiteResult r;
    r.name = n;
    r.seed = opts.seed;
    const auto t0 = std::chrono::steady_clock::now();
    fn(opts, r);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
  }
  throw VerifyError("unknown suite '" + std::string(name) + "'");
}

std::vector<SuiteResult> run_suites(std::string_view name, const VerifyOptions& opts) {
  if (name != "all") return {run_suite(name, opts)};
  std::vector<SuiteResult> out;
  for (const auto& n : suite_names()) out.push_back(run_suite(n, opts));
  return out;
}

std::string one_line(const Graph& g) {
  std::string out = "n=" + std::to_string(g.vertex_count()) + ":";
  for (const auto& e : g.edges()) out += " " + std::to_string(e.u) + "-" + std::to_string(e.v);
  return out;
}

std::vector<Graph> all_graphs(int max_n) {
  if (max_n < 1 || max_n > kMaxCanonicalVertices) throw VerifyError("all_graphs: bad vertex bound");
  // Disjoint unions of nondecreasing sequences of connected classes.
  const auto parts = connected_graphs({1, max_n, max_edges(max_n), GraphClass::Connected});
  std::vector<Graph> out;
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t, int)> grow = [&](std::size_t from, int used) {
    if (!chosen.empty()) {
      std::vector<Edge> edges;
      int offset = 0;
      for (std::size_t i : chosen) {
        for (const auto& e : parts[i].edges()) edges.push_back({e.u + offset, e.v + offset});
        offset += parts[i].vertex_count();
      }
      out.emplace_back(offset, std::move(edges));
    }
    for (std::size_t i = from; i < parts.size(); ++i) {
      if (used + parts[i].vertex_count() > max_n) continue;
      chosen.push_back(i);
      grow(i, used + parts[i].vertex_count());
      chosen.pop_back();
    }
  };
  grow(0, 0);
  std::stable_sort(out.begin(), out.end(), [](const Graph& a, const Graph& b) {
    return std::pair(a.vertex_count(), a.edge_count()) < std::pair(b.vertex_count(), b.edge_count());
  });
  return out;
}

Graph random_connected_graph(std::mt19937_64& rng, int n, int max_edges_wanted) {
  if (n < 1) throw VerifyError("random_connected_graph: n must be positive");
  const int cap = std::min(max_edges(n), std::max(max_edges_wanted, n - 1));
  std::vector<Vertex> label(n);
  std::iota(label.begin(), label.end(), 0);
  std::shuffle(label.begin(), label.end(), rng);
  std::set<Edge> edges;
  auto add = [&](Vertex a, Vertex b) {
    a = label[a];
    b = label[b];
    edges.insert({std::min(a, b), std::max(a, b)});
  };
  for (Vertex v = 1; v < n; ++v) add(v, static_cast<Vertex>(rng() % static_cast<unsigned>(v)));
  const int target = n - 1 + static_cast<int>(rng() % static_cast<unsigned>(cap - (n - 1) + 1));
  while (static_cast<int>(edges.size()) < target) {
    const auto a = static_cast<Vertex>(rng() % static_cast<unsigned>(n));
    const auto b = static_cast<Vertex>(rng() % static_cast<unsigned>(n));
    if (a != b) add(a, b);
  }
  return Graph(n, {edges.begin(), edges.end()});
}

}  // namespace catherd
