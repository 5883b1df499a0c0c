#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "catherd/graph.hpp"

namespace catherd {

struct SolverConfig {
  /// Only consider cuts inside the cat's component. Values are identical
  /// either way; turning it off explores passing moves too.
  bool restrict_to_component = true;
  std::size_t memo_capacity_hint = 0;
  /// Refuse graphs with more edges than this (hard ceiling 64).
  int max_edges = 64;
};

class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ReplyOption {
  Vertex vertex;
  int value;  // cut(G - e, vertex) with the herder to act
  bool optimal;
};

struct CutOption {
  EdgeId edge;
  Edge endpoints;
  /// Total cuts from this state if the herder makes this cut and both sides
  /// then play optimally.
  int value;
  bool passing;   // outside the cat's component
  bool isolates;  // the cut captures the cat immediately
  bool optimal;
  std::vector<ReplyOption> replies;  // ascending vertex id
};

struct MoveAnalysis {
  Vertex cat;
  int value;  // cut(G, cat) = min over cuts
  std::vector<CutOption> cuts;  // ascending edge index
};

/// Exact cat numbers by memoized minimax over (surviving edges, cat vertex).
///
/// value(mask, v) is the number of further cuts with the herder to act and
/// the cat on v: 0 if v is isolated, else
///   min over cuts e of  1                                   if v isolated in G-e
///                       1 + max_{u in comp(v, G-e), u != v} value(G-e, u)
/// The memo persists across queries on the same solver.
class Solver {
 public:
  explicit Solver(const Graph& g, SolverConfig cfg = {});

  [[nodiscard]] const Graph& graph() const { return *g_; }
  [[nodiscard]] const SolverConfig& config() const { return cfg_; }

  int value(const EdgeMask& mask, Vertex v);
  int value_bits(std::uint64_t mask, Vertex v);
  /// Per-vertex values on the masked graph.
  std::vector<int> values(const EdgeMask& mask);
  /// max over v of value(full, v).
  int cat_number();

  /// Full edge/reply table for the state. Throws SolverError when the cat is
  /// already isolated.
  MoveAnalysis analyze(const EdgeMask& mask, Vertex cat);

  /// Lowest-index optimal cut for the herder.
  EdgeId best_cut(const EdgeMask& mask, Vertex cat);
  /// Lowest-id optimal destination for the cat after a cut; nullopt if the
  /// cat is isolated.
  std::optional<Vertex> best_reply(const EdgeMask& mask, Vertex cat);
  /// Lowest-id vertex with maximal value on the full graph.
  Vertex best_start();

  [[nodiscard]] std::size_t memo_size() const { return memo_.size(); }

 private:
  struct Component {
    std::uint64_t vertices;
    std::uint64_t edges;
  };

  [[nodiscard]] Component component(std::uint64_t mask, Vertex v) const;
  int solve(std::uint64_t mask, Vertex v);
  int reply_value(std::uint64_t after_cut, Vertex cat, int cutoff);
  [[nodiscard]] std::uint64_t check_mask(const EdgeMask& mask) const;
  void check_vertex(Vertex v) const;

  struct StateKey {
    std::uint64_t mask;
    Vertex cat;
    friend bool operator==(const StateKey&, const StateKey&) = default;
  };
  struct StateKeyHash {
    std::size_t operator()(const StateKey& k) const noexcept {
      std::uint64_t h = k.mask * 0x9E3779B97F4A7C15ULL;
      h ^= static_cast<std::uint64_t>(k.cat) + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2);
      return static_cast<std::size_t>(h);
    }
  };

  const Graph* g_;
  SolverConfig cfg_;
  std::uint64_t all_edges_ = 0;
  std::vector<std::uint64_t> incident_mask_;
  std::vector<Edge> endpoints_;
  std::unordered_map<StateKey, std::uint8_t, StateKeyHash> memo_;
};

[[nodiscard]] int cat_number_from(const Graph& g, const EdgeMask& mask, Vertex v, SolverConfig cfg = {});
[[nodiscard]] int cat_number(const Graph& g, SolverConfig cfg = {});

}  // namespace catherd
