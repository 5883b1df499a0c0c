#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "catherd/budget.hpp"
#include "catherd/play.hpp"
#include "catherd/serialize.hpp"
#include "catherd/solver.hpp"

namespace catherd {

/// Rejected request. `status` is the HTTP status the service answers with:
/// 409 for turn-order and rule violations, 422 for unusable graphs.
class SessionError : public std::runtime_error {
 public:
  SessionError(int status, const std::string& what) : std::runtime_error(what), status_(status) {}
  [[nodiscard]] int status() const { return status_; }

 private:
  int status_;
};

enum class Phase { AwaitPlacement, HerderToCut, CatToMove, Over };
[[nodiscard]] std::string to_string(Phase p);

/// Who the human plays; None lets the engine play both sides.
enum class HumanRole { Cat, Herder, None };
[[nodiscard]] std::string to_string(HumanRole r);
[[nodiscard]] HumanRole parse_role(std::string_view text);

struct EngineLevel {
  enum class Kind { Optimal, Greedy, Random };
  Kind kind = Kind::Optimal;
  std::uint64_t seed = 0;

  /// "optimal", "greedy", "random", "random:7" or "random(7)".
  static EngineLevel parse(std::string_view text);
  [[nodiscard]] std::string to_string() const;
};

/// Rules only: applies events in order and rejects anything out of turn.
class GameState {
 public:
  explicit GameState(const Graph& g);

  void apply(const TraceEvent& ev);

  [[nodiscard]] const Graph& graph() const { return *g_; }
  [[nodiscard]] const EdgeMask& mask() const { return mask_; }
  [[nodiscard]] std::optional<Vertex> cat() const { return cat_; }
  [[nodiscard]] Phase phase() const { return phase_; }
  [[nodiscard]] int score() const { return score_; }
  [[nodiscard]] bool terminal() const { return phase_ == Phase::Over; }
  [[nodiscard]] const std::vector<TraceEvent>& history() const { return history_; }

 private:
  void place(Vertex v);
  void cut(EdgeId e);
  void move(const std::vector<Vertex>& path);

  const Graph* g_;
  EdgeMask mask_;
  std::optional<Vertex> cat_;
  Phase phase_ = Phase::AwaitPlacement;
  int score_ = 0;
  std::vector<TraceEvent> history_;
};

struct LogEntry {
  bool by_engine = false;
  TraceEvent event;
};

/// One game between a human and the engine (or the engine against itself).
/// The engine answers automatically whenever it holds the next move.
class GameSession {
 public:
  GameSession(Graph g, HumanRole human, EngineLevel level, Budget budget = {});
  GameSession(const GameSession&) = delete;
  GameSession& operator=(const GameSession&) = delete;

  void place(Vertex v);
  void cut(Vertex u, Vertex v);
  void move(Vertex v);

  [[nodiscard]] const GameState& state() const { return state_; }
  [[nodiscard]] const std::vector<LogEntry>& log() const { return log_; }
  [[nodiscard]] HumanRole human() const { return human_; }
  [[nodiscard]] const EngineLevel& level() const { return level_; }
  /// Set when the optimal engine was swapped for greedy because the graph is
  /// over the solver budget.
  [[nodiscard]] bool engine_fallback() const { return fallback_; }

  [[nodiscard]] Json to_json() const;
  /// Exact values for the current phase. Throws SessionError(422) when the
  /// graph is over the solver budget.
  [[nodiscard]] Json analysis();

  /// Graph, roles, engine and the move log; restore() replays it.
  [[nodiscard]] Json snapshot() const;
  static std::unique_ptr<GameSession> restore(const Json& j, Budget budget = {});

 private:
  bool human_holds(Phase p) const;
  void require_role(HumanRole role) const;
  void record(const TraceEvent& ev, bool by_engine);
  void engine_turns();
  Solver& solver();

  Graph graph_;
  GameState state_;
  HumanRole human_;
  EngineLevel level_;
  Budget budget_;
  bool fallback_ = false;
  std::unique_ptr<CatStrategy> engine_cat_;
  std::unique_ptr<HerderStrategy> engine_herder_;
  std::unique_ptr<Solver> solver_;
  std::vector<LogEntry> log_;
};

/// Thread-safe session map. Each entry carries its own mutex so requests to
/// one session are serialized while distinct sessions proceed in parallel.
class SessionStore {
 public:
  struct Entry {
    std::mutex mutex;
    std::unique_ptr<GameSession> session;
  };

  /// Stores the session under a fresh random 128-bit hex id.
  std::string add(std::unique_ptr<GameSession> session);
  void add(const std::string& id, std::unique_ptr<GameSession> session);
  [[nodiscard]] std::shared_ptr<Entry> find(const std::string& id) const;
  [[nodiscard]] std::size_t size() const;

  [[nodiscard]] Json snapshot() const;
  /// Replays every session in a snapshot; returns how many were restored.
  std::size_t restore(const Json& j, Budget budget = {});

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, std::shared_ptr<Entry>> sessions_;
};

[[nodiscard]] std::string random_token();

}  // namespace catherd
