#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace catherd::inf {

/// Vertex names of the lazily generated graphs:
///   binary_tree              b, bL, bR, bLR, ...
///   subdivided_binary_tree   tree vertices as above; bLR.2 is the second
///                            subdivision vertex on the edge into bLR
///   ray                      0, 1, 2, ...
///   double_ray               ..., -1, 0, 1, ...
///   ladder                   a0, a1, ... and b0, b1, ... with rungs ai-bi
///   star_of_rays:m           root r; leg i position j >= 1 is i.j
using Label = std::string;

class InfiniteError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BudgetExceeded : public InfiniteError {
 public:
  using InfiniteError::InfiniteError;
};

class IllegalInfiniteMove : public InfiniteError {
 public:
  using InfiniteError::InfiniteError;
};

/// Unordered edge, stored with a < b.
struct LabelEdge {
  Label a;
  Label b;

  LabelEdge() = default;
  LabelEdge(Label x, Label y);
  friend bool operator==(const LabelEdge&, const LabelEdge&) = default;
  friend auto operator<=>(const LabelEdge&, const LabelEdge&) = default;
};

struct FamilyInfo {
  bool cat_win = false;
  bool omega_evadible = false;
  std::string rationale;
  /// Built-in cat strategy meant for this family.
  std::string cat_strategy;
};

/// Coordinates along a two-way (or one-way) infinite line inside the graph.
struct LineView {
  std::function<Label(long long)> at;
  std::function<std::optional<long long>(const Label&)> coord;
  std::optional<long long> min_coord;  // set for one-way lines
};

struct InfiniteGraph {
  std::string family;
  std::vector<int> params;
  Label root;
  FamilyInfo info;
  std::function<bool(const Label&)> contains;
  /// Neighbors in a fixed order. Throws InfiniteError for unknown labels.
  std::function<std::vector<Label>(const Label&)> neighbors;
  /// Distance from the root.
  std::function<long long(const Label&)> depth;
  std::optional<LineView> line;

  [[nodiscard]] std::string spec() const;
};

/// family[:params], e.g. "subdivided_binary_tree:1,0" (edge into depth d is
/// subdivided a*d + b times) or "star_of_rays:3".
[[nodiscard]] InfiniteGraph make_infinite(std::string_view spec);
/// Default spec of every built-in family.
[[nodiscard]] std::vector<std::string> builtin_generators();

class CutLedger {
 public:
  [[nodiscard]] bool is_cut(const Label& a, const Label& b) const;
  void cut(const LabelEdge& e);
  [[nodiscard]] const std::vector<LabelEdge>& order() const { return order_; }
  [[nodiscard]] std::size_t size() const { return order_.size(); }

 private:
  std::set<LabelEdge> cuts_;
  std::vector<LabelEdge> order_;
};

struct GameView {
  const InfiniteGraph& graph;
  const CutLedger& ledger;
  Label cat;
  /// The cat's most recent witness path, empty before its first move.
  std::vector<Label> last_path;
};

/// Surviving neighbors of x.
[[nodiscard]] std::vector<Label> open_neighbors(const GameView& view, const Label& x);

class InfiniteCat {
 public:
  virtual ~InfiniteCat() = default;
  [[nodiscard]] virtual std::string name() const = 0;
  /// Starting vertex; throws InfiniteError on a family the strategy does not
  /// support.
  virtual Label start(const InfiniteGraph& g) = 0;
  /// Witness path beginning at the cat's vertex, at least one edge long.
  virtual std::vector<Label> move(const GameView& view) = 0;
};

class InfiniteHerder {
 public:
  virtual ~InfiniteHerder() = default;
  [[nodiscard]] virtual std::string name() const = 0;
  virtual LabelEdge cut(const GameView& view) = 0;
};

/// Binary trees (plain or subdivided): sits on the root of an untouched
/// subtree and, after every cut, walks to the child whose subtree is clean.
[[nodiscard]] std::unique_ptr<InfiniteCat> subtree_strategy();
/// Line families: opens in the middle of a 2^k window and keeps to the vertex
/// whose worst-case surviving segment is largest. 1 <= k <= max_k.
[[nodiscard]] std::unique_ptr<InfiniteCat> median_path_strategy(int k, int max_k = 16);
/// Ladder: keeps to a hub column beyond every cut, where the ladder is still
/// whole, and steps around an intact square when already on the hub.
[[nodiscard]] std::unique_ptr<InfiniteCat> cycle_hub_strategy();

/// Cuts the last edge of the cat's previous path; before the first move, the
/// cat's first surviving edge.
[[nodiscard]] std::unique_ptr<InfiniteHerder> cut_last_edge();
/// Cuts the cat's first surviving edge that leads away from the root, or its
/// first surviving edge if none does.
[[nodiscard]] std::unique_ptr<InfiniteHerder> ray_cut_behind();
/// Uniform over surviving edges within `radius` steps of the cat.
[[nodiscard]] std::unique_ptr<InfiniteHerder> random_herder(std::uint64_t seed, int radius = 3);
/// Plays the listed cuts in order, then behaves like cut_last_edge.
[[nodiscard]] std::unique_ptr<InfiniteHerder> scripted_herder(std::vector<LabelEdge> script);
[[nodiscard]] std::unique_ptr<InfiniteHerder> interactive_herder(std::function<LabelEdge(const GameView&)> hook);

[[nodiscard]] std::vector<std::string> cat_strategy_names();
[[nodiscard]] std::vector<std::string> herder_strategy_names();
/// "subtree", "median_path" (uses k), "cycle_hub".
[[nodiscard]] std::unique_ptr<InfiniteCat> make_cat(std::string_view name, int k);
/// "cut_last_edge", "ray_cut_behind", "random" (uses seed).
[[nodiscard]] std::unique_ptr<InfiniteHerder> make_herder(std::string_view name, std::uint64_t seed);

struct InfiniteEvent {
  enum class Kind { Place, Cut, Move };
  Kind kind;
  Label vertex;             // Place
  LabelEdge edge;           // Cut
  std::vector<Label> path;  // Move
};

struct ChallengeResult {
  enum class Outcome { SurvivedK, Captured, HorizonReached };
  int k = 0;                      // cuts requested; the horizon when playing to capture
  int survived = 0;               // cuts the cat answered
  Outcome outcome = Outcome::SurvivedK;
  std::optional<int> captured_at;  // index of the isolating cut, i.e. the score
  std::vector<InfiniteEvent> trace;
  std::size_t materialized = 0;
  std::string family;
  std::string cat;
  std::string herder;
};

[[nodiscard]] std::string to_string(ChallengeResult::Outcome o);

struct ChallengeConfig {
  std::size_t vertex_budget = 100000;
};

/// k-evadibility challenge: the herder cuts, the cat answers, for the first
/// k - 1 cuts. SurvivedK when all of them are answered, so the herder needs at
/// least k cuts; Captured otherwise. Every cat path is checked edge by edge
/// against the generator and the ledger.
[[nodiscard]] ChallengeResult run_challenge(const InfiniteGraph& g, InfiniteCat& cat, InfiniteHerder& herder, int k,
                                            const ChallengeConfig& cfg = {});

/// Plays until the cat is isolated or `max_cuts` cuts have been made.
[[nodiscard]] ChallengeResult play_until_capture(const InfiniteGraph& g, InfiniteCat& cat, InfiniteHerder& herder,
                                                 int max_cuts, const ChallengeConfig& cfg = {});

}  // namespace catherd::inf
