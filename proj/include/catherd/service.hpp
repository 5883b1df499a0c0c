#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "catherd/budget.hpp"
#include "catherd/serialize.hpp"
#include "catherd/session.hpp"

namespace catherd {

struct ApiResponse {
  int status = 200;
  Json body;
};

/// The JSON API without a transport, so it can be driven directly in tests.
///
///   POST /api/session               {graph, human_role, engine_level}
///   GET  /api/session/{id}
///   POST /api/session/{id}/place    {vertex}
///   POST /api/session/{id}/cut      {edge: [u, v]}
///   POST /api/session/{id}/move     {vertex}
///   GET  /api/session/{id}/analysis
///   POST /api/analyze               {graph}
///   GET  /api/generators
///
/// Errors carry {"error": message}: 400 bad request body, 404 unknown session
/// or route, 409 out-of-turn or illegal move, 422 unusable graph.
class Api {
 public:
  explicit Api(Budget budget = {}) : budget_(budget) {}

  ApiResponse handle(std::string_view method, std::string_view path, std::string_view body);

  [[nodiscard]] SessionStore& sessions() { return sessions_; }
  [[nodiscard]] const Budget& budget() const { return budget_; }

 private:
  ApiResponse create(const Json& body);
  ApiResponse session_action(const std::string& id, std::string_view action, std::string_view method,
                             const Json& body);
  ApiResponse analyze(const Json& body);
  static ApiResponse generators();

  Budget budget_;
  SessionStore sessions_;
};

struct ServiceConfig {
  Budget budget;
  std::string host = "127.0.0.1";
  int port = 8080;  // 0 picks a free port
  std::string static_dir;
  /// Sessions are restored from here on start and written back on stop.
  std::string snapshot_path;
};

/// HTTP front end over Api.
class Server {
 public:
  explicit Server(ServiceConfig cfg);
  ~Server();
  Server(const Server&) = delete;
  Server& operator=(const Server&) = delete;

  /// Binds the socket; returns the bound port. Throws std::runtime_error.
  int bind();
  /// Serves until stop(); call bind() first.
  void run();
  /// Stops serving and writes the snapshot when one is configured.
  void stop();

  [[nodiscard]] Api& api() { return api_; }

 private:
  struct Impl;
  ServiceConfig cfg_;
  Api api_;
  std::unique_ptr<Impl> impl_;
};

}  // namespace catherd
