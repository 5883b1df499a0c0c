#include "catherd/serialize.hpp"

#include "catherd/generators.hpp"

namespace catherd {

namespace {

Json edge_pair(const Edge& e) { return Json::array({e.u, e.v}); }

std::string witness_kind(LowerBoundWitness::Kind k) {
  switch (k) {
    case LowerBoundWitness::Kind::LongPath:
      return "long_path";
    case LowerBoundWitness::Kind::LongCycle:
      return "long_cycle";
    case LowerBoundWitness::Kind::MeetingCycles:
      return "meeting_cycles";
  }
  return "?";
}

}  // namespace

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back(edge_pair(e));
  return {{"n", g.vertex_count()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const Json& j) {
  if (j.is_string()) return graph_from_text(j.get<std::string>());
  if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
    throw GraphError("graph must be a spec string, edge-list text, or {\"n\", \"edges\"}");
  }
  const auto& n = j.at("n");
  const auto& edges = j.at("edges");
  if (!n.is_number_integer() || !edges.is_array()) throw GraphError("graph needs an integer n and an edge array");
  // Route through the edge-list parser so object input gets the same checks.
  std::string text = "p " + std::to_string(n.get<long long>()) + "\n";
  for (const auto& e : edges) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
      throw GraphError("each edge must be a pair of integers");
    }
    text += "e " + std::to_string(e[0].get<long long>()) + " " + std::to_string(e[1].get<long long>()) + "\n";
  }
  return parse_graph(text);
}

Json to_json(const EdgeMask& mask, const Graph& g) {
  Json surviving = Json::array(), cut = Json::array();
  for (EdgeId e = 0; e < g.edge_count(); ++e) (mask.test(e) ? surviving : cut).push_back(edge_pair(g.edge(e)));
  return {{"surviving", std::move(surviving)}, {"cut", std::move(cut)}};
}

Json to_json(const PruneStep& step) {
  return {{"rule", to_string(step.rule)}, {"removed", step.removed}, {"anchors", step.anchors}};
}

Json to_json(const PruneReport& report) {
  Json steps = Json::array();
  for (const auto& s : report.steps) steps.push_back(to_json(s));
  return {{"steps", std::move(steps)},
          {"result", to_json(report.result)},
          {"vertex_map", report.vertex_map},
          {"identity", report.identity()}};
}

Json to_json(const LowerBoundWitness& w) {
  return {{"kind", witness_kind(w.kind)}, {"vertices", w.vertices}, {"description", w.description}};
}

Json to_json(const Classification& c) {
  Json j = {{"verdict", to_string(c.verdict)},
            {"value", verdict_value(c.verdict)},
            {"at_least", c.verdict == Verdict::AtLeast4},
            {"catalog_id", c.catalog_id ? Json(*c.catalog_id) : Json(nullptr)},
            {"mapping", c.mapping},
            {"prune", to_json(c.prune)},
            {"witness", c.witness ? to_json(*c.witness) : Json(nullptr)}};
  return j;
}

Json to_json(const EvadibilityReport& r) {
  return {{"longest_path", r.longest_path},
          {"max_cycles", r.max_cycles},
          {"cycle_vertex", r.cycle_vertex},
          {"k", r.k},
          {"bound", r.bound},
          {"cut_value", r.cut_value ? Json(*r.cut_value) : Json(nullptr)}};
}

Json to_json(const BlockTree& b) {
  Json links = Json::array();
  for (const auto& [x, y] : b.links) links.push_back(Json::array({x, y}));
  return {{"component", b.component}, {"members", b.members}, {"bridges", b.bridges}, {"links", std::move(links)}};
}

Json to_json(const MoveAnalysis& a) {
  Json cuts = Json::array();
  for (const auto& c : a.cuts) {
    Json replies = Json::array();
    for (const auto& r : c.replies) replies.push_back({{"vertex", r.vertex}, {"value", r.value}, {"optimal", r.optimal}});
    cuts.push_back({{"edge", c.edge},
                    {"endpoints", edge_pair(c.endpoints)},
                    {"value", c.value},
                    {"passing", c.passing},
                    {"isolates", c.isolates},
                    {"optimal", c.optimal},
                    {"replies", std::move(replies)}});
  }
  return {{"cat", a.cat}, {"value", a.value}, {"cuts", std::move(cuts)}};
}

Json to_json(const TraceEvent& ev, const Graph& g) {
  switch (ev.kind) {
    case TraceEvent::Kind::Place:
      return {{"kind", "place"}, {"vertex", ev.vertex}};
    case TraceEvent::Kind::Cut:
      return {{"kind", "cut"}, {"edge", ev.edge}, {"endpoints", edge_pair(g.edge(ev.edge))}};
    case TraceEvent::Kind::Move:
      return {{"kind", "move"}, {"vertex", ev.vertex}, {"path", ev.path}};
  }
  return nullptr;
}

Json to_json(const ScoreTrace& t, const Graph& g) {
  Json events = Json::array();
  for (const auto& ev : t.events) events.push_back(to_json(ev, g));
  return {{"start", t.start}, {"score", t.score}, {"captured", t.captured}, {"events", std::move(events)}};
}

Json to_json(const SuiteResult& r) {
  return {{"suite", r.name},
          {"passed", r.passed()},
          {"scope", r.scope},
          {"seed", r.seed},
          {"checked", r.checked},
          {"failures", r.failures},
          {"counterexamples", r.counterexamples},
          {"seconds", r.seconds}};
}

namespace inf {

Json to_json(const InfiniteEvent& ev) {
  switch (ev.kind) {
    case InfiniteEvent::Kind::Place:
      return {{"kind", "place"}, {"vertex", ev.vertex}};
    case InfiniteEvent::Kind::Cut:
      return {{"kind", "cut"}, {"edge", Json::array({ev.edge.a, ev.edge.b})}};
    case InfiniteEvent::Kind::Move:
      return {{"kind", "move"}, {"path", ev.path}};
  }
  return nullptr;
}

Json to_json(const ChallengeResult& r) {
  Json trace = Json::array();
  for (const auto& ev : r.trace) trace.push_back(to_json(ev));
  return {{"family", r.family},
          {"cat", r.cat},
          {"herder", r.herder},
          {"k", r.k},
          {"survived", r.survived},
          {"outcome", to_string(r.outcome)},
          {"captured_at", r.captured_at ? Json(*r.captured_at) : Json(nullptr)},
          {"materialized", r.materialized},
          {"trace", std::move(trace)}};
}

Json to_json(const FamilyInfo& info) {
  return {{"cat_win", info.cat_win},
          {"omega_evadible", info.omega_evadible},
          {"rationale", info.rationale},
          {"cat_strategy", info.cat_strategy}};
}

}  // namespace inf

}  // namespace catherd
