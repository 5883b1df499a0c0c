#include "catherd/session.hpp"

#include <algorithm>
#include <charconv>
#include <random>

namespace catherd {

std::string to_string(Phase p) {
  switch (p) {
    case Phase::AwaitPlacement:
      return "await_placement";
    case Phase::HerderToCut:
      return "herder";
    case Phase::CatToMove:
      return "cat";
    case Phase::Over:
      return "over";
  }
  return "?";
}

std::string to_string(HumanRole r) {
  switch (r) {
    case HumanRole::Cat:
      return "cat";
    case HumanRole::Herder:
      return "herder";
    case HumanRole::None:
      return "none";
  }
  return "?";
}

HumanRole parse_role(std::string_view text) {
  if (text == "cat") return HumanRole::Cat;
  if (text == "herder") return HumanRole::Herder;
  if (text == "none" || text == "spectator") return HumanRole::None;
  throw SessionError(400, "human_role must be cat, herder or none");
}

EngineLevel EngineLevel::parse(std::string_view text) {
  EngineLevel out;
  if (text == "optimal") return out;
  if (text == "greedy") {
    out.kind = Kind::Greedy;
    return out;
  }
  if (text.substr(0, 6) == "random") {
    out.kind = Kind::Random;
    auto rest = text.substr(6);
    if (rest.empty()) return out;
    if (rest.front() == '(' && rest.back() == ')') {
      rest = rest.substr(1, rest.size() - 2);
    } else if (rest.front() == ':') {
      rest.remove_prefix(1);
    } else {
      rest = {};
    }
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), out.seed);
    if (!rest.empty() && ec == std::errc() && ptr == rest.data() + rest.size()) return out;
  }
  throw SessionError(400, "engine_level must be optimal, greedy or random[:seed]");
}

std::string EngineLevel::to_string() const {
  switch (kind) {
    case Kind::Optimal:
      return "optimal";
    case Kind::Greedy:
      return "greedy";
    case Kind::Random:
      return "random(" + std::to_string(seed) + ")";
  }
  return "?";
}

// --- rules ---------------------------------------------------------------------

GameState::GameState(const Graph& g) : g_(&g), mask_(EdgeMask::full(g)) {
  if (g.vertex_count() == 0) throw SessionError(422, "graph has no vertices");
}

void GameState::apply(const TraceEvent& ev) {
  switch (ev.kind) {
    case TraceEvent::Kind::Place:
      place(ev.vertex);
      break;
    case TraceEvent::Kind::Cut:
      cut(ev.edge);
      break;
    case TraceEvent::Kind::Move:
      move(ev.path);
      break;
  }
  history_.push_back(ev);
}

void GameState::place(Vertex v) {
  if (phase_ != Phase::AwaitPlacement) throw SessionError(409, "the cat has already been placed");
  if (!g_->contains(v)) throw SessionError(409, "vertex " + std::to_string(v) + " does not exist");
  cat_ = v;
  phase_ = degree(*g_, mask_, v) == 0 ? Phase::Over : Phase::HerderToCut;
}

void GameState::cut(EdgeId e) {
  if (phase_ == Phase::AwaitPlacement) throw SessionError(409, "the cat must be placed before the first cut");
  if (phase_ == Phase::Over) throw SessionError(409, "the game is over");
  if (phase_ != Phase::HerderToCut) throw SessionError(409, "it is the cat's turn to move");
  if (e < 0 || e >= g_->edge_count()) throw SessionError(409, "no such edge");
  if (!mask_.test(e)) throw SessionError(409, "edge was already cut");
  mask_.set(e, false);
  ++score_;
  phase_ = degree(*g_, mask_, *cat_) == 0 ? Phase::Over : Phase::CatToMove;
}

void GameState::move(const std::vector<Vertex>& path) {
  if (phase_ == Phase::AwaitPlacement) throw SessionError(409, "the cat must be placed before it can move");
  if (phase_ == Phase::Over) throw SessionError(409, "the game is over");
  if (phase_ != Phase::CatToMove) throw SessionError(409, "it is the herder's turn to cut");
  if (path.size() < 2 || path.back() == *cat_) {
    throw SessionError(409, "cat must move to a different vertex in its component");
  }
  if (auto why = check_cat_move(*g_, mask_, *cat_, CatMove{path})) throw SessionError(409, *why);
  cat_ = path.back();
  phase_ = Phase::HerderToCut;
}

// --- sessions --------------------------------------------------------------------

GameSession::GameSession(Graph g, HumanRole human, EngineLevel level, Budget budget)
    : graph_(std::move(g)), state_(graph_), human_(human), level_(level), budget_(budget) {
  auto kind = level_.kind;
  if (kind == EngineLevel::Kind::Optimal && graph_.edge_count() > budget_.solver_edges) {
    kind = EngineLevel::Kind::Greedy;
    fallback_ = true;
  }
  switch (kind) {
    case EngineLevel::Kind::Optimal:
      engine_cat_ = std::make_unique<OptimalCat>(graph_);
      engine_herder_ = std::make_unique<OptimalHerder>(graph_);
      break;
    case EngineLevel::Kind::Greedy:
      engine_cat_ = std::make_unique<GreedyCat>();
      engine_herder_ = std::make_unique<GreedyHerder>();
      break;
    case EngineLevel::Kind::Random:
      engine_cat_ = std::make_unique<RandomCat>(level_.seed);
      engine_herder_ = std::make_unique<RandomHerder>(level_.seed + 1);
      break;
  }
  engine_turns();
}

bool GameSession::human_holds(Phase p) const {
  switch (p) {
    case Phase::AwaitPlacement:
    case Phase::CatToMove:
      return human_ == HumanRole::Cat;
    case Phase::HerderToCut:
      return human_ == HumanRole::Herder;
    case Phase::Over:
      return false;
  }
  return false;
}

void GameSession::require_role(HumanRole role) const {
  if (human_ == role) return;
  if (human_ == HumanRole::None) throw SessionError(409, "spectator session: the engine plays both sides");
  throw SessionError(409, "the engine plays the " + to_string(role));
}

void GameSession::place(Vertex v) {
  require_role(HumanRole::Cat);
  record({TraceEvent::Kind::Place, v, -1, {}}, false);
  engine_turns();
}

void GameSession::cut(Vertex u, Vertex v) {
  require_role(HumanRole::Herder);
  auto e = graph_.contains(u) && graph_.contains(v) ? graph_.find_edge(u, v) : std::nullopt;
  if (!e) throw SessionError(409, "no edge " + std::to_string(u) + "-" + std::to_string(v));
  record({TraceEvent::Kind::Cut, -1, *e, {}}, false);
  engine_turns();
}

void GameSession::move(Vertex v) {
  require_role(HumanRole::Cat);
  std::vector<Vertex> path;
  if (state_.phase() == Phase::CatToMove) {
    const Vertex at = *state_.cat();
    auto found = graph_.contains(v) && v != at ? shortest_path(graph_, state_.mask(), at, v) : std::nullopt;
    if (!found) throw SessionError(409, "cat must move to a different vertex in its component");
    path = std::move(*found);
  }
  // Out of phase, the empty path lets GameState name the turn-order rule.
  record({TraceEvent::Kind::Move, v, -1, std::move(path)}, false);
  engine_turns();
}

void GameSession::record(const TraceEvent& ev, bool by_engine) {
  state_.apply(ev);
  log_.push_back({by_engine, ev});
}

void GameSession::engine_turns() {
  while (!state_.terminal() && !human_holds(state_.phase())) {
    const auto& hist = state_.history();
    switch (state_.phase()) {
      case Phase::AwaitPlacement:
        record({TraceEvent::Kind::Place, engine_cat_->place(graph_), -1, {}}, true);
        break;
      case Phase::HerderToCut: {
        GameView view{graph_, state_.mask(), *state_.cat(), hist};
        record({TraceEvent::Kind::Cut, -1, engine_herder_->cut(view), {}}, true);
        break;
      }
      case Phase::CatToMove: {
        GameView view{graph_, state_.mask(), *state_.cat(), hist};
        CatMove m = engine_cat_->move(view);
        record({TraceEvent::Kind::Move, m.destination(), -1, std::move(m.path)}, true);
        break;
      }
      case Phase::Over:
        return;
    }
  }
}

Solver& GameSession::solver() {
  if (graph_.edge_count() > budget_.solver_edges) {
    throw SessionError(422, "graph has " + std::to_string(graph_.edge_count()) +
                                " edges; exact analysis is limited to " + std::to_string(budget_.solver_edges) +
                                " (raise CATHERD_BUDGET)");
  }
  if (!solver_) solver_ = std::make_unique<Solver>(graph_);
  return *solver_;
}

Json GameSession::to_json() const {
  const auto& g = graph_;
  const auto& mask = state_.mask();
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back(Json::array({e.u, e.v}));
  Json j = catherd::to_json(mask, g);
  j["n"] = g.vertex_count();
  j["edges"] = std::move(edges);
  j["cat"] = state_.cat() ? Json(*state_.cat()) : Json(nullptr);
  j["phase"] = to_string(state_.phase());
  switch (state_.phase()) {
    case Phase::AwaitPlacement:
    case Phase::CatToMove:
      j["turn"] = "cat";
      break;
    case Phase::HerderToCut:
      j["turn"] = "herder";
      break;
    case Phase::Over:
      j["turn"] = nullptr;
      break;
  }
  j["score"] = state_.score();
  j["terminal"] = state_.terminal();
  j["human_role"] = to_string(human_);
  j["engine_level"] = level_.to_string();
  j["engine_fallback"] = fallback_;

  // Legal actions for whoever is to act.
  Json legal = Json::object();
  if (state_.phase() == Phase::AwaitPlacement) {
    Json all = Json::array();
    for (Vertex v = 0; v < g.vertex_count(); ++v) all.push_back(v);
    legal["place"] = std::move(all);
  } else if (state_.phase() == Phase::HerderToCut) {
    Json cuts = Json::array();
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (mask.test(e)) cuts.push_back(Json::array({g.edge(e).u, g.edge(e).v}));
    }
    legal["cut"] = std::move(cuts);
  } else if (state_.phase() == Phase::CatToMove) {
    auto comp = component_of(g, mask, *state_.cat());
    std::erase(comp, *state_.cat());
    legal["move"] = comp;
  }
  j["legal"] = std::move(legal);
  if (state_.cat()) j["component"] = component_of(g, mask, *state_.cat());

  Json log = Json::array();
  for (const auto& entry : log_) {
    Json ev = catherd::to_json(entry.event, g);
    ev["by"] = entry.by_engine ? "engine" : "human";
    log.push_back(std::move(ev));
  }
  j["log"] = std::move(log);
  return j;
}

Json GameSession::analysis() {
  Json j = {{"phase", to_string(state_.phase())}};
  switch (state_.phase()) {
    case Phase::AwaitPlacement: {
      auto& s = solver();
      j["values"] = s.values(EdgeMask::full(graph_));
      j["best"] = s.best_start();
      break;
    }
    case Phase::HerderToCut: {
      Json a = catherd::to_json(solver().analyze(state_.mask(), *state_.cat()));
      a["phase"] = j["phase"];
      return a;
    }
    case Phase::CatToMove: {
      auto& s = solver();
      const Vertex at = *state_.cat();
      auto comp = component_of(graph_, state_.mask(), at);
      int best = -1;
      std::vector<std::pair<Vertex, int>> values;
      for (Vertex v : comp) {
        if (v == at) continue;
        values.emplace_back(v, s.value(state_.mask(), v));
        best = std::max(best, values.back().second);
      }
      Json replies = Json::array();
      for (auto [v, value] : values) replies.push_back({{"vertex", v}, {"value", value}, {"optimal", value == best}});
      j["cat"] = at;
      j["replies"] = std::move(replies);
      break;
    }
    case Phase::Over:
      j["score"] = state_.score();
      break;
  }
  return j;
}

Json GameSession::snapshot() const {
  Json log = Json::array();
  for (const auto& entry : log_) {
    Json ev = catherd::to_json(entry.event, graph_);
    ev["by"] = entry.by_engine ? "engine" : "human";
    log.push_back(std::move(ev));
  }
  return {{"graph", catherd::to_json(graph_)},
          {"human_role", to_string(human_)},
          {"engine_level", level_.to_string()},
          {"log", std::move(log)}};
}

std::unique_ptr<GameSession> GameSession::restore(const Json& j, Budget budget) {
  Graph g = graph_from_json(j.at("graph"));
  const auto role = parse_role(j.at("human_role").get<std::string>());
  const auto level = EngineLevel::parse(j.at("engine_level").get<std::string>());
  // Rebuild as a human-vs-human game so the log is replayed verbatim, then
  // hand the engine its side back.
  auto s = std::make_unique<GameSession>(std::move(g), HumanRole::Cat, level, budget);
  s->log_.clear();
  s->state_ = GameState(s->graph_);
  for (const auto& ev : j.at("log")) {
    const std::string kind = ev.at("kind").get<std::string>();
    TraceEvent te{TraceEvent::Kind::Place, -1, -1, {}};
    if (kind == "place") {
      te.vertex = ev.at("vertex").get<Vertex>();
    } else if (kind == "cut") {
      te.kind = TraceEvent::Kind::Cut;
      te.edge = ev.at("edge").get<EdgeId>();
    } else if (kind == "move") {
      te.kind = TraceEvent::Kind::Move;
      te.path = ev.at("path").get<std::vector<Vertex>>();
      te.vertex = te.path.empty() ? -1 : te.path.back();
    } else {
      throw SessionError(422, "unknown log event '" + kind + "'");
    }
    s->record(te, ev.value("by", "human") == "engine");
  }
  s->human_ = role;
  s->engine_turns();
  return s;
}

// --- store ----------------------------------------------------------------------

std::string random_token() {
  std::random_device rd;
  std::string out;
  static constexpr char hex[] = "0123456789abcdef";
  for (int i = 0; i < 4; ++i) {
    auto word = rd();
    for (int j = 0; j < 8; ++j) {
      out.push_back(hex[word & 0xF]);
      word >>= 4;
    }
  }
  return out;
}

std::string SessionStore::add(std::unique_ptr<GameSession> session) {
  auto entry = std::make_shared<Entry>();
  entry->session = std::move(session);
  std::unique_lock lock(mutex_);
  std::string id;
  do {
    id = random_token();
  } while (sessions_.count(id));
  sessions_.emplace(id, std::move(entry));
  return id;
}

void SessionStore::add(const std::string& id, std::unique_ptr<GameSession> session) {
  auto entry = std::make_shared<Entry>();
  entry->session = std::move(session);
  std::unique_lock lock(mutex_);
  sessions_[id] = std::move(entry);
}

std::shared_ptr<SessionStore::Entry> SessionStore::find(const std::string& id) const {
  std::shared_lock lock(mutex_);
  auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

std::size_t SessionStore::size() const {
  std::shared_lock lock(mutex_);
  return sessions_.size();
}

Json SessionStore::snapshot() const {
  std::vector<std::pair<std::string, std::shared_ptr<Entry>>> entries;
  {
    std::shared_lock lock(mutex_);
    entries.assign(sessions_.begin(), sessions_.end());
  }
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  Json out = Json::object();
  for (auto& [id, entry] : entries) {
    std::lock_guard lock(entry->mutex);
    out[id] = entry->session->snapshot();
  }
  return {{"sessions", std::move(out)}};
}

std::size_t SessionStore::restore(const Json& j, Budget budget) {
  std::size_t n = 0;
  for (const auto& [id, s] : j.at("sessions").items()) {
    add(id, GameSession::restore(s, budget));
    ++n;
  }
  return n;
}

}  // namespace catherd
