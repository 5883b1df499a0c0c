#include "catherd/infinite.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <map>
#include <random>
#include <unordered_set>

namespace catherd::inf {

LabelEdge::LabelEdge(Label x, Label y) : a(std::move(x)), b(std::move(y)) {
  if (b < a) std::swap(a, b);
}

namespace {

std::optional<long long> parse_int(std::string_view s) {
  if (s.empty()) return std::nullopt;
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  // No leading zeros or "-0", so every vertex has exactly one name.
  std::string_view digits = s[0] == '-' ? s.substr(1) : s;
  if (digits.empty() || (digits.size() > 1 && digits[0] == '0') || s == "-0") return std::nullopt;
  return v;
}

[[noreturn]] void unknown(const std::string& family, const Label& x) {
  throw InfiniteError("'" + x + "' is not a vertex of " + family);
}

bool is_tree_word(std::string_view s) {
  return !s.empty() && s[0] == 'b' && std::all_of(s.begin() + 1, s.end(), [](char c) { return c == 'L' || c == 'R'; });
}

// binary_tree and subdivided_binary_tree share one builder; f(d) is the number
// of subdivision vertices on the edge into a tree vertex of depth d.
InfiniteGraph binary_family(std::string family, std::vector<int> params, std::function<long long(long long)> f,
                            FamilyInfo info) {
  InfiniteGraph g;
  g.family = std::move(family);
  g.params = std::move(params);
  g.root = "b";
  g.info = std::move(info);
  const std::string name = g.spec();
  // Splits "bLR.2" into ("bLR", 2); tree vertices get 0.
  auto split = [f](const Label& x) -> std::optional<std::pair<std::string, long long>> {
    auto dot = x.find('.');
    std::string word = x.substr(0, dot);
    if (!is_tree_word(word)) return std::nullopt;
    if (dot == std::string::npos) return std::pair{word, 0LL};
    auto i = parse_int(std::string_view(x).substr(dot + 1));
    const long long d = static_cast<long long>(word.size()) - 1;
    if (!i || d < 1 || *i < 1 || *i > f(d)) return std::nullopt;
    return std::pair{word, *i};
  };
  g.contains = [split](const Label& x) { return split(x).has_value(); };
  auto tree_depth = [f](long long d) {
    long long total = 0;
    for (long long i = 1; i <= d; ++i) total += f(i) + 1;
    return total;
  };
  g.depth = [split, tree_depth, name](const Label& x) {
    auto s = split(x);
    if (!s) unknown(name, x);
    const long long d = static_cast<long long>(s->first.size()) - 1;
    if (s->second == 0) return tree_depth(d);
    return tree_depth(d - 1) + s->second;
  };
  // First vertex on the way down into tree vertex `word`.
  auto entry = [f](const std::string& word) {
    const long long d = static_cast<long long>(word.size()) - 1;
    return f(d) > 0 ? word + ".1" : word;
  };
  g.neighbors = [split, f, entry, name](const Label& x) {
    auto s = split(x);
    if (!s) unknown(name, x);
    const auto& [word, i] = *s;
    const long long d = static_cast<long long>(word.size()) - 1;
    std::vector<Label> out;
    if (i == 0) {
      if (d > 0) out.push_back(f(d) > 0 ? word + "." + std::to_string(f(d)) : word.substr(0, word.size() - 1));
      out.push_back(entry(word + "L"));
      out.push_back(entry(word + "R"));
    } else {
      out.push_back(i == 1 ? word.substr(0, word.size() - 1) : word + "." + std::to_string(i - 1));
      out.push_back(i == f(d) ? word : word + "." + std::to_string(i + 1));
    }
    return out;
  };
  return g;
}

// Integer-labelled line families.
InfiniteGraph line_family(std::string family, bool two_way, FamilyInfo info) {
  InfiniteGraph g;
  g.family = std::move(family);
  g.root = "0";
  g.info = std::move(info);
  auto name = g.family;
  auto parse = [two_way](const Label& x) -> std::optional<long long> {
    auto v = parse_int(x);
    if (!v || (!two_way && *v < 0)) return std::nullopt;
    return v;
  };
  g.contains = [parse](const Label& x) { return parse(x).has_value(); };
  g.neighbors = [parse, name](const Label& x) {
    auto v = parse(x);
    if (!v) unknown(name, x);
    std::vector<Label> out;
    if (parse(std::to_string(*v - 1))) out.push_back(std::to_string(*v - 1));
    out.push_back(std::to_string(*v + 1));
    return out;
  };
  g.depth = [parse, name](const Label& x) {
    auto v = parse(x);
    if (!v) unknown(name, x);
    return *v < 0 ? -*v : *v;
  };
  LineView line;
  line.at = [](long long c) { return std::to_string(c); };
  line.coord = parse;
  if (!two_way) line.min_coord = 0;
  g.line = std::move(line);
  return g;
}

std::optional<std::pair<char, long long>> ladder_parse(const Label& x) {
  if (x.size() < 2 || (x[0] != 'a' && x[0] != 'b')) return std::nullopt;
  auto i = parse_int(std::string_view(x).substr(1));
  if (!i || *i < 0) return std::nullopt;
  return std::pair{x[0], *i};
}

InfiniteGraph ladder() {
  InfiniteGraph g;
  g.family = "ladder";
  g.root = "a0";
  g.info = {true, true, "infinite and 2-edge-connected: after any cut an infinite 2-edge-connected part remains", "cycle_hub"};
  g.contains = [](const Label& x) { return ladder_parse(x).has_value(); };
  g.neighbors = [](const Label& x) {
    auto p = ladder_parse(x);
    if (!p) unknown("ladder", x);
    auto [side, i] = *p;
    const std::string s(1, side), other(1, side == 'a' ? 'b' : 'a');
    std::vector<Label> out;
    if (i > 0) out.push_back(s + std::to_string(i - 1));
    out.push_back(s + std::to_string(i + 1));
    out.push_back(other + std::to_string(i));
    return out;
  };
  g.depth = [](const Label& x) {
    auto p = ladder_parse(x);
    if (!p) unknown("ladder", x);
    return p->second + (p->first == 'b' ? 1 : 0);
  };
  return g;
}

std::optional<std::pair<long long, long long>> star_parse(const Label& x, int m) {
  if (x == "r") return std::pair{-1LL, 0LL};
  auto dot = x.find('.');
  if (dot == std::string::npos) return std::nullopt;
  auto leg = parse_int(std::string_view(x).substr(0, dot));
  auto pos = parse_int(std::string_view(x).substr(dot + 1));
  if (!leg || !pos || *leg < 0 || *leg >= m || *pos < 1) return std::nullopt;
  return std::pair{*leg, *pos};
}

InfiniteGraph star_of_rays(int m) {
  InfiniteGraph g;
  g.family = "star_of_rays";
  g.params = {m};
  g.root = "r";
  g.info = {false, true,
            "finitely many rays: no infinite binary tree minor and no infinite 2-edge-connected part, but "
            "arbitrarily long paths",
            "median_path"};
  g.contains = [m](const Label& x) { return star_parse(x, m).has_value(); };
  auto leg_label = [](long long leg, long long pos) { return pos == 0 ? std::string("r") : std::to_string(leg) + "." + std::to_string(pos); };
  g.neighbors = [m, leg_label](const Label& x) {
    auto p = star_parse(x, m);
    if (!p) unknown("star_of_rays:" + std::to_string(m), x);
    std::vector<Label> out;
    if (p->first < 0) {
      for (int leg = 0; leg < m; ++leg) out.push_back(leg_label(leg, 1));
    } else {
      out.push_back(leg_label(p->first, p->second - 1));
      out.push_back(leg_label(p->first, p->second + 1));
    }
    return out;
  };
  g.depth = [m](const Label& x) {
    auto p = star_parse(x, m);
    if (!p) unknown("star_of_rays:" + std::to_string(m), x);
    return p->second;
  };
  LineView line;
  if (m == 1) {
    line.at = [leg_label](long long c) { return leg_label(0, c); };
    line.coord = [m](const Label& x) -> std::optional<long long> {
      auto p = star_parse(x, m);
      if (!p) return std::nullopt;
      return p->second;
    };
    line.min_coord = 0;
  } else {
    // Legs 0 and 1 through the root, leg 0 on the negative side.
    line.at = [leg_label](long long c) { return c < 0 ? leg_label(0, -c) : leg_label(1, c); };
    line.coord = [m](const Label& x) -> std::optional<long long> {
      auto p = star_parse(x, m);
      if (!p || p->first > 1) return std::nullopt;
      if (p->first < 0) return 0;
      return p->first == 0 ? -p->second : p->second;
    };
  }
  g.line = std::move(line);
  return g;
}

std::vector<int> parse_params(std::string_view text, const std::string& spec) {
  std::vector<int> out;
  while (!text.empty()) {
    auto comma = text.find(',');
    auto tok = text.substr(0, comma);
    auto v = parse_int(tok);
    if (!v || *v < 0 || *v > 1000000) throw InfiniteError("bad parameter in '" + spec + "'");
    out.push_back(static_cast<int>(*v));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

std::string InfiniteGraph::spec() const {
  std::string out = family;
  for (std::size_t i = 0; i < params.size(); ++i) out += (i == 0 ? ":" : ",") + std::to_string(params[i]);
  return out;
}

InfiniteGraph make_infinite(std::string_view spec) {
  const std::string text(spec);
  auto colon = spec.find(':');
  const std::string family(spec.substr(0, colon));
  const auto params = colon == std::string_view::npos ? std::vector<int>{} : parse_params(spec.substr(colon + 1), text);
  auto expect = [&](std::size_t n) {
    if (params.size() != n) throw InfiniteError(family + " takes " + std::to_string(n) + " parameter(s)");
  };
  if (family == "binary_tree") {
    expect(0);
    return binary_family(family, {}, [](long long) { return 0LL; },
                         {true, true, "the infinite complete binary tree: the cat always has an untouched subtree", "subtree"});
  }
  if (family == "subdivided_binary_tree") {
    expect(2);
    const long long a = params[0], b = params[1];
    if (a > 8 || b > 8) throw InfiniteError("subdivided_binary_tree parameters are limited to 8");
    return binary_family(family, params, [a, b](long long d) { return a * d + b; },
                         {true, true, "subdividing edges keeps an infinite complete binary tree minor", "subtree"});
  }
  if (family == "ray") {
    expect(0);
    return line_family(family, false,
                       {false, true, "a tree with no infinite binary tree minor, yet with arbitrarily long paths", "median_path"});
  }
  if (family == "double_ray") {
    expect(0);
    return line_family(family, true,
                       {false, true, "the herder cuts behind the cat and captures it, but the score is unbounded", "median_path"});
  }
  if (family == "ladder") {
    expect(0);
    return ladder();
  }
  if (family == "star_of_rays") {
    expect(1);
    if (params[0] < 1 || params[0] > 64) throw InfiniteError("star_of_rays needs 1..64 rays");
    return star_of_rays(params[0]);
  }
  throw InfiniteError("unknown infinite family '" + family + "'");
}

std::vector<std::string> builtin_generators() {
  return {"binary_tree", "subdivided_binary_tree:1,0", "ray", "double_ray", "ladder", "star_of_rays:3"};
}

bool CutLedger::is_cut(const Label& a, const Label& b) const { return cuts_.count(LabelEdge(a, b)) > 0; }

void CutLedger::cut(const LabelEdge& e) {
  if (!cuts_.insert(e).second) throw IllegalInfiniteMove("edge " + e.a + "-" + e.b + " was already cut");
  order_.push_back(e);
}

std::vector<Label> open_neighbors(const GameView& view, const Label& x) {
  std::vector<Label> out;
  for (auto& y : view.graph.neighbors(x)) {
    if (!view.ledger.is_cut(x, y)) out.push_back(std::move(y));
  }
  return out;
}

// --- cat strategies ------------------------------------------------------

namespace {

class SubtreeCat : public InfiniteCat {
 public:
  std::string name() const override { return "subtree"; }

  Label start(const InfiniteGraph& g) override {
    if (g.family != "binary_tree" && g.family != "subdivided_binary_tree") {
      throw InfiniteError("subtree strategy needs a binary tree family, not " + g.family);
    }
    root_ = g.root;
    return root_;
  }

  std::vector<Label> move(const GameView& view) override {
    const auto& e = view.ledger.order().back();
    const Label& lower = view.graph.depth(e.a) > view.graph.depth(e.b) ? e.a : e.b;
    const std::string word = lower.substr(0, lower.find('.'));
    char side = 'L';
    if (word.size() > root_.size() && word.compare(0, root_.size(), root_) == 0) {
      side = word[root_.size()] == 'L' ? 'R' : 'L';
    }
    const Label target = root_ + side;
    std::vector<Label> path{view.cat};
    while (path.back() != target) {
      const long long d = view.graph.depth(path.back());
      Label next;
      for (const auto& y : view.graph.neighbors(path.back())) {
        if (view.graph.depth(y) > d && y.substr(0, y.find('.')) == target) next = y;
      }
      if (next.empty()) throw InfiniteError("subtree strategy lost its way");
      path.push_back(next);
    }
    root_ = target;
    return path;
  }

 private:
  Label root_;
};

class MedianPathCat : public InfiniteCat {
 public:
  MedianPathCat(int k, int max_k) : k_(k) {
    if (k < 1 || k > max_k) {
      throw InfiniteError("median_path needs 1 <= k <= " + std::to_string(max_k));
    }
  }

  std::string name() const override { return "median_path(" + std::to_string(k_) + ")"; }

  Label start(const InfiniteGraph& g) override {
    if (!g.line) throw InfiniteError("median_path strategy needs a line family, not " + g.family);
    const long long half = 1LL << (k_ - 1);
    lo_ = g.line->min_coord ? *g.line->min_coord : -half;
    hi_ = lo_ + 2 * half - 1;
    return g.line->at(lo_ + half);
  }

  std::vector<Label> move(const GameView& view) override {
    const auto& line = *view.graph.line;
    const long long c = *line.coord(view.cat);
    auto open = [&](long long x) { return !view.ledger.is_cut(line.at(x), line.at(x + 1)); };
    long long lo = c, hi = c;
    while (lo > lo_ && open(lo - 1)) --lo;
    while (hi < hi_ && open(hi)) ++hi;
    if (hi == lo) {
      // Squeezed out of the window: any surviving edge will do.
      auto nbrs = open_neighbors(view, view.cat);
      return {view.cat, nbrs.front()};
    }
    // The herder's next cut leaves min(p - lo + 1, hi - p + 1) vertices.
    long long best = -1, best_score = -1;
    for (long long p = lo; p <= hi; ++p) {
      if (p == c) continue;
      long long score = std::min(p - lo + 1, hi - p + 1);
      if (score > best_score) {
        best = p;
        best_score = score;
      }
    }
    std::vector<Label> path;
    const long long step = best > c ? 1 : -1;
    for (long long x = c;; x += step) {
      path.push_back(line.at(x));
      if (x == best) break;
    }
    return path;
  }

 private:
  int k_;
  long long lo_ = 0, hi_ = 0;
};

class CycleHubCat : public InfiniteCat {
 public:
  std::string name() const override { return "cycle_hub"; }

  Label start(const InfiniteGraph& g) override {
    if (g.family != "ladder") throw InfiniteError("cycle_hub strategy needs the ladder, not " + g.family);
    return g.root;
  }

  std::vector<Label> move(const GameView& view) override {
    // Columns at or beyond `hub` hold no cut edge, so the ladder there is whole.
    long long hub = 0;
    for (const auto& e : view.ledger.order()) {
      hub = std::max(hub, std::min(ladder_parse(e.a)->second, ladder_parse(e.b)->second) + 1);
    }
    const Label target = view.cat == "a" + std::to_string(hub) ? "b" + std::to_string(hub) : "a" + std::to_string(hub);
    const long long limit = std::max(ladder_parse(view.cat)->second, hub) + 2;
    std::map<Label, Label> parent{{view.cat, view.cat}};
    std::deque<Label> queue{view.cat};
    while (!queue.empty() && !parent.count(target)) {
      Label x = queue.front();
      queue.pop_front();
      for (auto& y : open_neighbors(view, x)) {
        if (ladder_parse(y)->second > limit || parent.count(y)) continue;
        parent[y] = x;
        queue.push_back(y);
      }
    }
    if (!parent.count(target)) throw InfiniteError("cycle_hub strategy cannot reach the hub");
    std::vector<Label> path;
    for (Label x = target; x != view.cat; x = parent[x]) path.push_back(x);
    path.push_back(view.cat);
    std::reverse(path.begin(), path.end());
    return path;
  }
};

// --- herder strategies ---------------------------------------------------

LabelEdge first_open_edge(const GameView& view) {
  auto nbrs = open_neighbors(view, view.cat);
  if (nbrs.empty()) throw InfiniteError("the cat is already isolated");
  return {view.cat, nbrs.front()};
}

class CutLastEdge : public InfiniteHerder {
 public:
  std::string name() const override { return "cut_last_edge"; }
  LabelEdge cut(const GameView& view) override {
    const auto& p = view.last_path;
    if (p.size() >= 2 && !view.ledger.is_cut(p[p.size() - 2], p.back())) return {p[p.size() - 2], p.back()};
    return first_open_edge(view);
  }
};

class RayCutBehind : public InfiniteHerder {
 public:
  std::string name() const override { return "ray_cut_behind"; }
  LabelEdge cut(const GameView& view) override {
    const long long d = view.graph.depth(view.cat);
    for (const auto& y : open_neighbors(view, view.cat)) {
      if (view.graph.depth(y) > d) return {view.cat, y};
    }
    return first_open_edge(view);
  }
};

class RandomHerder : public InfiniteHerder {
 public:
  RandomHerder(std::uint64_t seed, int radius) : seed_(seed), radius_(std::max(1, radius)), rng_(seed) {}
  std::string name() const override { return "random(" + std::to_string(seed_) + ")"; }
  LabelEdge cut(const GameView& view) override {
    std::set<LabelEdge> edges;
    std::map<Label, int> dist{{view.cat, 0}};
    std::deque<Label> queue{view.cat};
    while (!queue.empty()) {
      Label x = queue.front();
      queue.pop_front();
      const int dx = dist[x];
      for (auto& y : open_neighbors(view, x)) {
        edges.insert(LabelEdge(x, y));
        if (dx + 1 < radius_ && !dist.count(y)) {
          dist[y] = dx + 1;
          queue.push_back(y);
        }
      }
    }
    if (edges.empty()) throw InfiniteError("the cat is already isolated");
    auto it = edges.begin();
    std::advance(it, static_cast<long>(rng_() % edges.size()));
    return *it;
  }

 private:
  std::uint64_t seed_;
  int radius_;
  std::mt19937_64 rng_;
};

class ScriptedHerder : public InfiniteHerder {
 public:
  explicit ScriptedHerder(std::vector<LabelEdge> script) : script_(std::move(script)) {}
  std::string name() const override { return "scripted"; }
  LabelEdge cut(const GameView& view) override {
    if (next_ < script_.size()) return script_[next_++];
    return fallback_.cut(view);
  }

 private:
  std::vector<LabelEdge> script_;
  std::size_t next_ = 0;
  CutLastEdge fallback_;
};

class InteractiveHerder : public InfiniteHerder {
 public:
  explicit InteractiveHerder(std::function<LabelEdge(const GameView&)> hook) : hook_(std::move(hook)) {}
  std::string name() const override { return "interactive"; }
  LabelEdge cut(const GameView& view) override { return hook_(view); }

 private:
  std::function<LabelEdge(const GameView&)> hook_;
};

// Vertices the harness has touched, with the budget check.
class Region {
 public:
  explicit Region(std::size_t budget) : budget_(budget) {}
  void touch(const Label& x) {
    seen_.insert(x);
    if (seen_.size() > budget_) {
      throw BudgetExceeded("materialized more than " + std::to_string(budget_) + " vertices");
    }
  }
  [[nodiscard]] std::size_t size() const { return seen_.size(); }

 private:
  std::size_t budget_;
  std::unordered_set<Label> seen_;
};

void check_path(const GameView& view, const std::vector<Label>& path, const std::string& who, Region& region) {
  auto fail = [&](const std::string& why) { throw IllegalInfiniteMove(who + ": " + why); };
  if (path.size() < 2) fail("cat must move along a non-trivial path");
  if (path.front() != view.cat) fail("witness path must start at the cat's vertex");
  std::unordered_set<Label> seen;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (!view.graph.contains(path[i])) fail("'" + path[i] + "' is not a vertex");
    if (!seen.insert(path[i]).second) fail("witness path repeats vertex " + path[i]);
    region.touch(path[i]);
    if (i == 0) continue;
    auto nbrs = view.graph.neighbors(path[i - 1]);
    if (std::find(nbrs.begin(), nbrs.end(), path[i]) == nbrs.end()) fail("no edge " + path[i - 1] + "-" + path[i]);
    if (view.ledger.is_cut(path[i - 1], path[i])) fail("edge " + path[i - 1] + "-" + path[i] + " was cut");
  }
}

ChallengeResult play(const InfiniteGraph& g, InfiniteCat& cat, InfiniteHerder& herder, int limit, bool to_capture,
                     const ChallengeConfig& cfg) {
  ChallengeResult r;
  r.k = limit;
  r.family = g.spec();
  r.cat = cat.name();
  r.herder = herder.name();
  Region region(cfg.vertex_budget);
  CutLedger ledger;
  Label pos = cat.start(g);
  if (!g.contains(pos)) throw IllegalInfiniteMove(cat.name() + ": '" + pos + "' is not a vertex");
  region.touch(pos);
  r.trace.push_back({InfiniteEvent::Kind::Place, pos, {}, {}});
  std::vector<Label> last_path;
  // A challenge asks for answers to the first k - 1 cuts.
  const int cuts = to_capture ? limit : limit - 1;
  for (int j = 1; j <= cuts; ++j) {
    GameView view{g, ledger, pos, last_path};
    LabelEdge e = herder.cut(view);
    if (!g.contains(e.a) || !g.contains(e.b)) throw IllegalInfiniteMove(herder.name() + ": unknown vertex in cut");
    auto nbrs = g.neighbors(e.a);
    if (std::find(nbrs.begin(), nbrs.end(), e.b) == nbrs.end()) {
      throw IllegalInfiniteMove(herder.name() + ": no edge " + e.a + "-" + e.b);
    }
    if (ledger.is_cut(e.a, e.b)) throw IllegalInfiniteMove(herder.name() + ": edge " + e.a + "-" + e.b + " was cut");
    ledger.cut(e);
    region.touch(e.a);
    region.touch(e.b);
    r.trace.push_back({InfiniteEvent::Kind::Cut, {}, e, {}});
    GameView after{g, ledger, pos, last_path};
    auto open = open_neighbors(after, pos);
    for (const auto& y : open) region.touch(y);
    if (open.empty()) {
      r.outcome = ChallengeResult::Outcome::Captured;
      r.captured_at = j;
      r.materialized = region.size();
      return r;
    }
    auto path = cat.move(after);
    check_path(after, path, cat.name(), region);
    pos = path.back();
    last_path = path;
    r.trace.push_back({InfiniteEvent::Kind::Move, {}, {}, std::move(path)});
    ++r.survived;
  }
  r.outcome = to_capture ? ChallengeResult::Outcome::HorizonReached : ChallengeResult::Outcome::SurvivedK;
  r.materialized = region.size();
  return r;
}

}  // namespace

std::unique_ptr<InfiniteCat> subtree_strategy() { return std::make_unique<SubtreeCat>(); }
std::unique_ptr<InfiniteCat> median_path_strategy(int k, int max_k) { return std::make_unique<MedianPathCat>(k, max_k); }
std::unique_ptr<InfiniteCat> cycle_hub_strategy() { return std::make_unique<CycleHubCat>(); }

std::unique_ptr<InfiniteHerder> cut_last_edge() { return std::make_unique<CutLastEdge>(); }
std::unique_ptr<InfiniteHerder> ray_cut_behind() { return std::make_unique<RayCutBehind>(); }
std::unique_ptr<InfiniteHerder> random_herder(std::uint64_t seed, int radius) {
  return std::make_unique<RandomHerder>(seed, radius);
}
std::unique_ptr<InfiniteHerder> scripted_herder(std::vector<LabelEdge> script) {
  return std::make_unique<ScriptedHerder>(std::move(script));
}
std::unique_ptr<InfiniteHerder> interactive_herder(std::function<LabelEdge(const GameView&)> hook) {
  return std::make_unique<InteractiveHerder>(std::move(hook));
}

std::vector<std::string> cat_strategy_names() { return {"subtree", "median_path", "cycle_hub"}; }
std::vector<std::string> herder_strategy_names() { return {"cut_last_edge", "ray_cut_behind", "random"}; }

std::unique_ptr<InfiniteCat> make_cat(std::string_view name, int k) {
  if (name == "subtree") return subtree_strategy();
  if (name == "median_path") return median_path_strategy(k);
  if (name == "cycle_hub") return cycle_hub_strategy();
  throw InfiniteError("unknown cat strategy '" + std::string(name) + "'");
}

std::unique_ptr<InfiniteHerder> make_herder(std::string_view name, std::uint64_t seed) {
  if (name == "cut_last_edge") return cut_last_edge();
  if (name == "ray_cut_behind") return ray_cut_behind();
  if (name == "random") return random_herder(seed);
  throw InfiniteError("unknown herder strategy '" + std::string(name) + "'");
}

std::string to_string(ChallengeResult::Outcome o) {
  switch (o) {
    case ChallengeResult::Outcome::SurvivedK:
      return "survived_k";
    case ChallengeResult::Outcome::Captured:
      return "captured";
    case ChallengeResult::Outcome::HorizonReached:
      return "horizon_reached";
  }
  return "?";
}

ChallengeResult run_challenge(const InfiniteGraph& g, InfiniteCat& cat, InfiniteHerder& herder, int k,
                              const ChallengeConfig& cfg) {
  if (k < 1) throw InfiniteError("k must be at least 1");
  return play(g, cat, herder, k, false, cfg);
}

ChallengeResult play_until_capture(const InfiniteGraph& g, InfiniteCat& cat, InfiniteHerder& herder, int max_cuts,
                                   const ChallengeConfig& cfg) {
  if (max_cuts < 1) throw InfiniteError("max_cuts must be at least 1");
  return play(g, cat, herder, max_cuts, true, cfg);
}

}  // namespace catherd::inf
