#include "doctest.h"

#include <httplib.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <thread>

#include "catherd/generators.hpp"
#include "catherd/service.hpp"
#include "catherd/session.hpp"
#include "catherd/solver.hpp"
#include "oracles.hpp"

using namespace catherd;

namespace {

Json post(Api& api, const std::string& path, const Json& body, int expect) {
  auto r = api.handle("POST", path, body.dump());
  CHECK_MESSAGE(r.status == expect, path << " -> " << r.body.dump());
  return r.body;
}

Json get(Api& api, const std::string& path, int expect = 200) {
  auto r = api.handle("GET", path, "");
  CHECK_MESSAGE(r.status == expect, path << " -> " << r.body.dump());
  return r.body;
}

std::string create(Api& api, const Json& body) {
  auto r = post(api, "/api/session", body, 201);
  return r.at("session_id").get<std::string>();
}

// Replays the logged events on a fresh rules engine.
GameState replay(const Graph& g, const Json& log) {
  GameState s(g);
  for (const auto& ev : log) {
    const auto kind = ev.at("kind").get<std::string>();
    if (kind == "place") {
      s.apply({TraceEvent::Kind::Place, ev.at("vertex").get<Vertex>(), -1, {}});
    } else if (kind == "cut") {
      s.apply({TraceEvent::Kind::Cut, -1, ev.at("edge").get<EdgeId>(), {}});
    } else {
      auto path = ev.at("path").get<std::vector<Vertex>>();
      s.apply({TraceEvent::Kind::Move, path.back(), -1, path});
    }
  }
  return s;
}

}  // namespace

TEST_CASE("herder on P4 sees an optimal first cut valued 2") {
  Api api;
  auto id = create(api, {{"graph", "path:4"}, {"human_role", "herder"}, {"engine_level", "optimal"}});
  auto state = get(api, "/api/session/" + id);
  CHECK(state["phase"] == "herder");
  CHECK(state["turn"] == "herder");
  CHECK_FALSE(state["cat"].is_null());
  CHECK(state["score"] == 0);
  auto a = get(api, "/api/session/" + id + "/analysis");
  CHECK(a["value"] == 2);
  int optimal = 0;
  for (const auto& c : a["cuts"]) {
    CHECK(c["value"].get<int>() >= 2);
    if (c["optimal"].get<bool>()) {
      CHECK(c["value"] == 2);
      ++optimal;
    }
  }
  CHECK(optimal >= 1);
}

TEST_CASE("cat moves are validated") {
  Api api;
  auto id = create(api, {{"graph", "path:4"}, {"human_role", "cat"}});
  auto s = get(api, "/api/session/" + id);
  CHECK(s["phase"] == "await_placement");
  CHECK(s["legal"]["place"].size() == 4);
  // Moving or cutting before placement is out of turn.
  post(api, "/api/session/" + id + "/move", {{"vertex", 1}}, 409);
  post(api, "/api/session/" + id + "/cut", {{"edge", {0, 1}}}, 409);
  s = post(api, "/api/session/" + id + "/place", {{"vertex", 1}}, 200);
  // The engine herder answered at once; the cat is to move.
  CHECK(s["phase"] == "cat");
  CHECK(s["score"] == 1);
  post(api, "/api/session/" + id + "/place", {{"vertex", 2}}, 409);
  auto own = post(api, "/api/session/" + id + "/move", {{"vertex", 1}}, 409);
  CHECK(own["error"] == "cat must move to a different vertex in its component");
  // A vertex cut off from the cat is no better.
  const auto legal = s["legal"]["move"].get<std::vector<int>>();
  for (int v = 0; v < 4; ++v) {
    if (v == 1 || std::find(legal.begin(), legal.end(), v) != legal.end()) continue;
    post(api, "/api/session/" + id + "/move", {{"vertex", v}}, 409);
  }
  REQUIRE_FALSE(legal.empty());
  s = post(api, "/api/session/" + id + "/move", {{"vertex", legal.front()}}, 200);
  CHECK(s["score"].get<int>() >= 2);
}

TEST_CASE("cutting the last edge at the cat ends the game") {
  Api api;
  auto id = create(api, {{"graph", "path:3"}, {"human_role", "herder"}});
  auto s = get(api, "/api/session/" + id);
  // Cut every edge at the cat, answering moves as they come.
  while (!s["terminal"].get<bool>()) {
    const int at = s["cat"].get<int>();
    Json edge;
    for (const auto& e : s["legal"]["cut"]) {
      if (e[0] == at || e[1] == at) edge = e;
    }
    s = post(api, "/api/session/" + id + "/cut", {{"edge", edge}}, 200);
  }
  CHECK(s["phase"] == "over");
  CHECK(s["turn"].is_null());
  CHECK(s["score"].get<int>() == static_cast<int>(s["cut"].size()));
  CHECK(s["score"].get<int>() >= 1);
  post(api, "/api/session/" + id + "/cut", {{"edge", {0, 1}}}, 409);
  CHECK(get(api, "/api/session/" + id + "/analysis")["phase"] == "over");
}

TEST_CASE("errors: unknown session, bad bodies, bad graphs") {
  Api api;
  CHECK(get(api, "/api/session/deadbeef", 404).contains("error"));
  post(api, "/api/session/deadbeef/cut", {{"edge", {0, 1}}}, 404);
  get(api, "/api/nothing", 404);
  post(api, "/api/session", {{"graph", "cycle:2"}}, 422);
  post(api, "/api/session", {{"graph", "p 3\ne 0 1\ne 0 1"}}, 422);
  post(api, "/api/session", {{"graph", {{"n", 2}, {"edges", {{0, 5}}}}}}, 422);
  post(api, "/api/session", {{"human_role", "herder"}}, 400);
  post(api, "/api/session", {{"graph", "path:3"}, {"human_role", "referee"}}, 400);
  post(api, "/api/session", {{"graph", "path:3"}, {"engine_level", "clever"}}, 400);
  CHECK(api.handle("POST", "/api/session", "{not json").status == 400);
  CHECK(api.handle("GET", "/api/analyze", "").status == 405);

  auto id = create(api, {{"graph", "cycle:5"}, {"human_role", "herder"}});
  post(api, "/api/session/" + id + "/cut", {{"edge", {0, 2}}}, 409);
  post(api, "/api/session/" + id + "/cut", {{"edge", {0}}}, 400);
  post(api, "/api/session/" + id + "/cut", {{"edge", "0-1"}}, 400);
  post(api, "/api/session/" + id + "/move", {{"vertex", 1}}, 409);
  post(api, "/api/session/" + id + "/place", {{"vertex", 1}}, 409);
}

TEST_CASE("C5 herder hints match an independent minimax") {
  // The cat must move after every cut, so only the cut opposite the cat
  // (which leaves it in the middle of P5) holds the game to 3.
  Api api;
  auto id = create(api, {{"graph", "cycle:5"}, {"human_role", "herder"}});
  const int cat = get(api, "/api/session/" + id)["cat"].get<int>();
  auto a = get(api, "/api/session/" + id + "/analysis");
  CHECK(a["value"] == 3);
  Graph c5 = from_spec("cycle:5");
  oracle::Minimax mm(c5);
  REQUIRE(a["cuts"].size() == 5);
  int threes = 0;
  for (const auto& c : a["cuts"]) {
    const auto e = c["edge"].get<int>();
    const std::uint64_t after = 0x1F & ~(std::uint64_t{1} << e);
    int best = 0;
    for (int u = 0; u < 5; ++u) {
      if (u != cat) best = std::max(best, mm.value(after, u));
    }
    CHECK(c["value"] == 1 + best);
    const bool opposite = !c5.edge(e).touches(cat) && !c5.edge(e).touches((cat + 1) % 5) && !c5.edge(e).touches((cat + 4) % 5);
    CHECK(c["value"] == (opposite ? 3 : 4));
    threes += c["value"] == 3 ? 1 : 0;
  }
  CHECK(threes == 1);
}

TEST_CASE("spectator games with optimal engines score the cat number") {
  for (const auto& spec : {"path:8", "cycle:6", "star:5", "two_triangles_bridge", "spider:2,2,1", "complete:4"}) {
    Api api;
    auto r = post(api, "/api/session", {{"graph", spec}, {"human_role", "none"}}, 201);
    const auto& s = r["state"];
    CHECK(s["terminal"] == true);
    Graph g = from_spec(spec);
    Solver solver(g);
    const int start = s["log"][0]["vertex"].get<int>();
    CHECK(s["score"].get<int>() == solver.value(EdgeMask::full(g), start));
    CHECK(s["score"].get<int>() == cat_number(g));
  }
}

TEST_CASE("move logs replay to the same state") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 30; ++round) {
    Graph g = oracle::random_connected(rng, 4 + static_cast<int>(rng() % 5), 6 + static_cast<int>(rng() % 5));
    Api api;
    const std::string level = round % 3 == 0 ? "optimal" : (round % 3 == 1 ? "greedy" : "random:" + std::to_string(round));
    auto r = post(api, "/api/session", {{"graph", to_json(g)}, {"human_role", "none"}, {"engine_level", level}}, 201);
    const auto& s = r["state"];
    auto replayed = replay(g, s["log"]);
    CHECK(replayed.terminal());
    CHECK(replayed.score() == s["score"].get<int>());
    CHECK(*replayed.cat() == s["cat"].get<int>());
    CHECK(to_json(replayed.mask(), g) == Json({{"surviving", s["surviving"]}, {"cut", s["cut"]}}));
    if (level == "optimal") CHECK(replayed.score() == cat_number(g));
  }
}

TEST_CASE("engine budget fallback") {
  Budget small;
  small.solver_edges = 4;
  Api api(small);
  auto r = post(api, "/api/session", {{"graph", "cycle:6"}, {"human_role", "herder"}}, 201);
  CHECK(r["state"]["engine_fallback"] == true);
  CHECK(r["state"]["engine_level"] == "optimal");
  get(api, "/api/session/" + r["session_id"].get<std::string>() + "/analysis", 422);
  auto a = post(api, "/api/analyze", {{"graph", "cycle:6"}}, 200);
  CHECK(a["values"].is_null());
  CHECK(a.contains("values_error"));
  CHECK(a["classification"]["verdict"] == "AtLeast4");
}

TEST_CASE("analysis in every phase") {
  Api api;
  auto id = create(api, {{"graph", "star:4"}, {"human_role", "cat"}});
  auto a = get(api, "/api/session/" + id + "/analysis");
  CHECK(a["phase"] == "await_placement");
  CHECK(a["values"] == Json({2, 1, 1, 1}));
  CHECK(a["best"] == 0);
  post(api, "/api/session/" + id + "/place", {{"vertex", 0}}, 200);
  a = get(api, "/api/session/" + id + "/analysis");
  CHECK(a["phase"] == "cat");
  REQUIRE(a["replies"].size() == 2);
  for (const auto& reply : a["replies"]) CHECK(reply["value"] == 1);
}

TEST_CASE("analyze endpoint") {
  Api api;
  auto a = post(api, "/api/analyze", {{"graph", "spider:2,2,1"}}, 200);
  CHECK(a["values"]["cat_number"] == 3);
  CHECK(a["values"]["per_vertex"].size() == 6);
  CHECK(a["classification"]["verdict"] == "Cut3");
  CHECK(a["classification"]["catalog_id"] == "P5");
  CHECK(a["prune"]["steps"][0]["rule"] == "tree_leaf_of_p2");
  CHECK(a["evadibility"]["longest_path"] == 5);
  CHECK(a["blocks"]["bridges"].size() == 5);
  auto d = post(api, "/api/analyze", {{"graph", "p 4\ne 0 1\ne 2 3"}}, 200);
  CHECK(d["classification"].is_null());
  CHECK(d.contains("classification_error"));
  post(api, "/api/analyze", {{"graph", "p 0"}}, 422);
}

TEST_CASE("generators endpoint") {
  Api api;
  auto g = get(api, "/api/generators");
  CHECK(g["finite"].size() == finite_families().size());
  for (const auto& f : g["finite"]) CHECK_NOTHROW((void)from_spec(f["example"].get<std::string>()));
  CHECK(g["infinite"].size() == inf::builtin_generators().size());
  for (const auto& f : g["infinite"]) {
    if (f["board"].is_null()) continue;
    CHECK_NOTHROW((void)from_spec(f["board"].get<std::string>()));
  }
  CHECK(g["infinite"][0]["info"]["cat_win"] == true);
}

TEST_CASE("concurrent requests") {
  Api api;
  std::vector<std::string> ids;
  for (int i = 0; i < 4; ++i) ids.push_back(create(api, {{"graph", "cycle:7"}, {"human_role", "herder"}}));
  std::vector<std::thread> workers;
  std::atomic<int> ok{0};
  for (int t = 0; t < 8; ++t) {
    workers.emplace_back([&, t] {
      const auto& id = ids[static_cast<std::size_t>(t % 4)];
      for (int i = 0; i < 20; ++i) {
        auto r = api.handle("GET", "/api/session/" + id + "/analysis", "");
        if (r.status == 200) ++ok;
      }
    });
  }
  for (auto& w : workers) w.join();
  CHECK(ok == 160);
  CHECK(api.sessions().size() == 4);
  // Ids are 32 hex characters and distinct.
  std::set<std::string> unique(ids.begin(), ids.end());
  CHECK(unique.size() == 4);
  for (const auto& id : ids) CHECK(id.size() == 32);
}

TEST_CASE("snapshots restore sessions") {
  Api api;
  auto id = create(api, {{"graph", "path:6"}, {"human_role", "cat"}});
  post(api, "/api/session/" + id + "/place", {{"vertex", 2}}, 200);
  auto before = get(api, "/api/session/" + id);
  SessionStore store;
  CHECK(store.restore(api.sessions().snapshot()) == 1);
  auto entry = store.find(id);
  REQUIRE(entry);
  CHECK(entry->session->to_json() == before);
}

TEST_CASE("HTTP round trip") {
  namespace fs = std::filesystem;
  const auto snap = fs::temp_directory_path() / ("catherd_snapshot_" + random_token() + ".json");
  ServiceConfig cfg;
  cfg.port = 0;
  cfg.snapshot_path = snap.string();
  std::string id;
  {
    Server server(cfg);
    const int port = server.bind();
    std::thread t([&] { server.run(); });
    httplib::Client client("127.0.0.1", port);
    auto res = client.Post("/api/session", R"({"graph": "cycle:5", "human_role": "herder"})", "application/json");
    REQUIRE(res);
    CHECK(res->status == 201);
    id = Json::parse(res->body)["session_id"].get<std::string>();
    auto gen = client.Get("/api/generators");
    REQUIRE(gen);
    CHECK(gen->status == 200);
    auto missing = client.Get("/api/session/nope");
    REQUIRE(missing);
    CHECK(missing->status == 404);
    server.stop();
    t.join();
  }
  REQUIRE(fs::exists(snap));
  {
    Server again(cfg);
    CHECK(again.api().sessions().find(id) != nullptr);
  }
  fs::remove(snap);
}
