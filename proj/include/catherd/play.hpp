#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "catherd/graph.hpp"
#include "catherd/solver.hpp"

namespace catherd {

/// A cat move along a non-trivial simple path of surviving edges.
struct CatMove {
  std::vector<Vertex> path;  // path.front() is the current vertex

  [[nodiscard]] Vertex destination() const { return path.back(); }
};

struct TraceEvent {
  enum class Kind { Place, Cut, Move };
  Kind kind;
  Vertex vertex = -1;          // Place: start; Move: destination
  EdgeId edge = -1;            // Cut
  std::vector<Vertex> path;    // Move: witness path
};

struct ScoreTrace {
  std::vector<TraceEvent> events;
  Vertex start = -1;
  int score = 0;
  bool captured = false;
};

/// Snapshot handed to strategies.
struct GameView {
  const Graph& graph;
  const EdgeMask& mask;
  Vertex cat;
  const std::vector<TraceEvent>& history;
};

class IllegalMove : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CatStrategy {
 public:
  virtual ~CatStrategy() = default;
  virtual void reset(std::uint64_t /*seed*/) {}
  virtual Vertex place(const Graph& g) = 0;
  virtual CatMove move(const GameView& view) = 0;
  [[nodiscard]] virtual std::string name() const = 0;
};

class HerderStrategy {
 public:
  virtual ~HerderStrategy() = default;
  virtual void reset(std::uint64_t /*seed*/) {}
  virtual EdgeId cut(const GameView& view) = 0;
  [[nodiscard]] virtual std::string name() const = 0;
};

/// Checks a witness path against the rules; returns a diagnostic on failure.
[[nodiscard]] std::optional<std::string> check_cat_move(const Graph& g, const EdgeMask& mask, Vertex cat,
                                                        const CatMove& move);

/// Runs one game. The cat places (or starts at `start` when given), then the
/// herder cuts and the cat moves alternately until the cat sits on a vertex
/// of degree 0 after a cut. Throws IllegalMove naming the offending move.
ScoreTrace play(const Graph& g, CatStrategy& cat, HerderStrategy& herder, std::uint64_t seed,
                std::optional<Vertex> start = std::nullopt);

// --- engine-backed strategies --------------------------------------------

class OptimalCat final : public CatStrategy {
 public:
  explicit OptimalCat(const Graph& g, SolverConfig cfg = {}) : solver_(g, cfg) {}
  Vertex place(const Graph& g) override;
  CatMove move(const GameView& view) override;
  [[nodiscard]] std::string name() const override { return "optimal"; }

 private:
  Solver solver_;
};

class OptimalHerder final : public HerderStrategy {
 public:
  explicit OptimalHerder(const Graph& g, SolverConfig cfg = {}) : solver_(g, cfg) {}
  EdgeId cut(const GameView& view) override;
  [[nodiscard]] std::string name() const override { return "optimal"; }

 private:
  Solver solver_;
};

/// Moves to the highest-degree vertex of its component (lowest id on ties).
class GreedyCat final : public CatStrategy {
 public:
  Vertex place(const Graph& g) override;
  CatMove move(const GameView& view) override;
  [[nodiscard]] std::string name() const override { return "greedy"; }
};

/// Certificate-driven heuristic: isolate a leaf cat, cut a star-component
/// edge when one exists, otherwise minimize the cat's component.
class GreedyHerder final : public HerderStrategy {
 public:
  EdgeId cut(const GameView& view) override;
  [[nodiscard]] std::string name() const override { return "greedy"; }
};

class RandomCat final : public CatStrategy {
 public:
  explicit RandomCat(std::uint64_t seed = 0) : rng_(seed) {}
  void reset(std::uint64_t seed) override { rng_.seed(seed); }
  Vertex place(const Graph& g) override;
  CatMove move(const GameView& view) override;
  [[nodiscard]] std::string name() const override { return "random"; }

 private:
  std::mt19937_64 rng_;
};

class RandomHerder final : public HerderStrategy {
 public:
  explicit RandomHerder(std::uint64_t seed = 0) : rng_(seed) {}
  void reset(std::uint64_t seed) override { rng_.seed(seed); }
  EdgeId cut(const GameView& view) override;
  [[nodiscard]] std::string name() const override { return "random"; }

 private:
  std::mt19937_64 rng_;
};

/// Constructive strategy behind the k^3 - 2k^2 + 3k - 2 herder bound.
///
/// Keeps an anchor vertex (initially the cat's start). While a surviving
/// cycle passes through the anchor it cuts the lowest-index anchor edge that
/// lies on a cycle. Once the anchor is on no cycle: if the cat sits on it,
/// the herder passes; otherwise the cat lives in the branch behind exactly
/// one anchor edge, which is cut, and its far endpoint becomes the anchor.
/// Anchors therefore form a simple path.
///
/// A pass cuts the lowest-index edge outside the cat's component, or, when
/// no such edge survives, the in-component edge farthest from the anchor.
class CycleSeveringHerder final : public HerderStrategy {
 public:
  void reset(std::uint64_t) override { anchor_.reset(); anchors_.clear(); }
  EdgeId cut(const GameView& view) override;
  [[nodiscard]] std::string name() const override { return "cycle_severing"; }
  [[nodiscard]] const std::vector<Vertex>& anchors() const { return anchors_; }

 private:
  std::optional<Vertex> anchor_;
  std::vector<Vertex> anchors_;
};

[[nodiscard]] std::unique_ptr<HerderStrategy> cycle_severing_herder(const Graph& g);

}  // namespace catherd
