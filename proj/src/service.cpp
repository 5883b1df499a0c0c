#include "catherd/service.hpp"

#include <httplib.h>

#include <fstream>
#include <map>

#include "catherd/classifier.hpp"
#include "catherd/generators.hpp"
#include "catherd/pruning.hpp"
#include "catherd/structure.hpp"

namespace catherd {

namespace {

ApiResponse error(int status, const std::string& message) { return {status, {{"error", message}}}; }

std::vector<std::string_view> split_path(std::string_view path) {
  std::vector<std::string_view> parts;
  while (!path.empty()) {
    auto slash = path.find('/');
    auto part = path.substr(0, slash);
    if (!part.empty()) parts.push_back(part);
    if (slash == std::string_view::npos) break;
    path.remove_prefix(slash + 1);
  }
  return parts;
}

template <typename T>
T field(const Json& body, const char* name) {
  if (!body.contains(name)) throw SessionError(400, std::string("missing field '") + name + "'");
  try {
    return body.at(name).get<T>();
  } catch (const Json::exception&) {
    throw SessionError(400, std::string("field '") + name + "' has the wrong type");
  }
}

Graph parse_graph_field(const Json& body) {
  if (!body.contains("graph")) throw SessionError(400, "missing field 'graph'");
  try {
    return graph_from_json(body.at("graph"));
  } catch (const GraphError& e) {
    throw SessionError(422, e.what());
  }
}

// Finite stand-ins for the infinite families, for the board view.
const std::map<std::string, std::string>& boards() {
  static const std::map<std::string, std::string> b = {
      {"binary_tree", "binary_tree:4"}, {"ray", "path:16"},         {"double_ray", "path:17"},
      {"ladder", "ladder:6"},           {"star_of_rays", "spider:5,5,5"},
  };
  return b;
}

}  // namespace

ApiResponse Api::handle(std::string_view method, std::string_view path, std::string_view body_text) {
  try {
    Json body = Json::object();
    if (method == "POST" && !body_text.empty()) {
      body = Json::parse(body_text, nullptr, false);
      if (body.is_discarded() || !body.is_object()) return error(400, "request body must be a JSON object");
    }
    auto parts = split_path(path);
    if (parts.size() < 2 || parts[0] != "api") return error(404, "no such route");
    if (parts[1] == "session") {
      if (parts.size() == 2) {
        if (method != "POST") return error(405, "use POST to create a session");
        return create(body);
      }
      if (parts.size() > 4) return error(404, "no such route");
      return session_action(std::string(parts[2]), parts.size() == 4 ? parts[3] : "", method, body);
    }
    if (parts.size() == 2 && parts[1] == "analyze") {
      if (method != "POST") return error(405, "use POST");
      return analyze(body);
    }
    if (parts.size() == 2 && parts[1] == "generators") {
      if (method != "GET") return error(405, "use GET");
      return generators();
    }
    return error(404, "no such route");
  } catch (const SessionError& e) {
    return error(e.status(), e.what());
  } catch (const std::exception& e) {
    return error(500, e.what());
  }
}

ApiResponse Api::create(const Json& body) {
  Graph g = parse_graph_field(body);
  const auto role = parse_role(body.contains("human_role") ? field<std::string>(body, "human_role") : "herder");
  auto level = EngineLevel::parse(body.contains("engine_level") ? field<std::string>(body, "engine_level") : "optimal");
  if (body.contains("seed")) level.seed = field<std::uint64_t>(body, "seed");
  auto session = std::make_unique<GameSession>(std::move(g), role, level, budget_);
  Json state = session->to_json();
  auto id = sessions_.add(std::move(session));
  return {201, {{"session_id", id}, {"state", std::move(state)}}};
}

ApiResponse Api::session_action(const std::string& id, std::string_view action, std::string_view method,
                                const Json& body) {
  auto entry = sessions_.find(id);
  if (!entry) return error(404, "unknown session '" + id + "'");
  std::lock_guard lock(entry->mutex);
  GameSession& s = *entry->session;
  if (action.empty()) {
    if (method != "GET") return error(405, "use GET");
    return {200, s.to_json()};
  }
  if (action == "analysis") {
    if (method != "GET") return error(405, "use GET");
    return {200, s.analysis()};
  }
  if (method != "POST") return error(405, "use POST");
  if (action == "place") {
    s.place(field<Vertex>(body, "vertex"));
  } else if (action == "move") {
    s.move(field<Vertex>(body, "vertex"));
  } else if (action == "cut") {
    auto edge = field<std::vector<Vertex>>(body, "edge");
    if (edge.size() != 2) throw SessionError(400, "edge must be [u, v]");
    s.cut(edge[0], edge[1]);
  } else {
    return error(404, "no such route");
  }
  return {200, s.to_json()};
}

ApiResponse Api::analyze(const Json& body) {
  Graph g = parse_graph_field(body);
  if (g.vertex_count() == 0) throw SessionError(422, "graph has no vertices");
  Json out = {{"graph", to_json(g)}};
  auto attempt = [&](const char* key, auto&& compute) {
    try {
      out[key] = compute();
    } catch (const std::exception& e) {
      out[key] = nullptr;
      out[std::string(key) + "_error"] = e.what();
    }
  };
  attempt("values", [&]() -> Json {
    if (g.edge_count() > budget_.solver_edges) {
      throw SessionError(422, "graph has " + std::to_string(g.edge_count()) + " edges; exact values are limited to " +
                                  std::to_string(budget_.solver_edges));
    }
    Solver solver(g);
    auto values = solver.values(EdgeMask::full(g));
    return {{"per_vertex", values}, {"cat_number", *std::max_element(values.begin(), values.end())}};
  });
  attempt("classification", [&] { return to_json(classify(g)); });
  attempt("prune", [&] { return to_json(is_tree(g) ? prune_tree(g) : prune_duplicate_leaves(g)); });
  attempt("evadibility", [&] { return to_json(evadibility_report(g)); });
  attempt("blocks", [&] { return to_json(two_edge_connected_components(g)); });
  return {200, std::move(out)};
}

ApiResponse Api::generators() {
  static const std::vector<std::string> examples = {
      "path:8",          "cycle:5",          "star:6",           "complete:4",
      "spider:2,2,1",    "two_triangles_bridge", "triangle_tails:1,1,0", "triangle_fork:1,2",
      "square_leaves:1,0,0,0", "binary_tree:3", "ladder:4"};
  Json finite = Json::array();
  const auto families = finite_families();
  for (std::size_t i = 0; i < families.size(); ++i) {
    finite.push_back({{"family", families[i]}, {"example", i < examples.size() ? Json(examples[i]) : Json(nullptr)}});
  }
  Json infinite = Json::array();
  for (const auto& spec : inf::builtin_generators()) {
    auto g = inf::make_infinite(spec);
    auto board = boards().find(g.family);
    infinite.push_back({{"spec", spec},
                        {"family", g.family},
                        {"info", inf::to_json(g.info)},
                        {"board", board == boards().end() ? Json(nullptr) : Json(board->second)}});
  }
  return {200, {{"finite", std::move(finite)}, {"infinite", std::move(infinite)}}};
}

// --- HTTP ----------------------------------------------------------------------

struct Server::Impl {
  httplib::Server http;
  int port = -1;
  bool stopped = false;
};

Server::Server(ServiceConfig cfg) : cfg_(std::move(cfg)), api_(cfg_.budget), impl_(std::make_unique<Impl>()) {
  if (!cfg_.snapshot_path.empty()) {
    std::ifstream in(cfg_.snapshot_path);
    if (in) api_.sessions().restore(Json::parse(in), cfg_.budget);
  }
  auto forward = [this](const httplib::Request& req, httplib::Response& res) {
    auto r = api_.handle(req.method, req.path, req.body);
    res.status = r.status;
    res.set_content(r.body.dump(), "application/json");
  };
  impl_->http.Get("/api/.*", forward);
  impl_->http.Post("/api/.*", forward);
  if (!cfg_.static_dir.empty() && !impl_->http.set_mount_point("/", cfg_.static_dir)) {
    throw std::runtime_error("static directory '" + cfg_.static_dir + "' does not exist");
  }
}

Server::~Server() { stop(); }

int Server::bind() {
  if (cfg_.port == 0) {
    impl_->port = impl_->http.bind_to_any_port(cfg_.host);
  } else {
    impl_->port = impl_->http.bind_to_port(cfg_.host, cfg_.port) ? cfg_.port : -1;
  }
  if (impl_->port < 0) throw std::runtime_error("cannot bind " + cfg_.host + ":" + std::to_string(cfg_.port));
  return impl_->port;
}

void Server::run() { impl_->http.listen_after_bind(); }

void Server::stop() {
  if (impl_->stopped) return;
  impl_->stopped = true;
  impl_->http.stop();
  if (!cfg_.snapshot_path.empty()) {
    std::ofstream out(cfg_.snapshot_path);
    out << api_.sessions().snapshot().dump(2) << "\n";
  }
}

}  // namespace catherd
