#include "cli.hpp"

#include <CLI11.hpp>
#include <csignal>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include "catherd/budget.hpp"
#include "catherd/classifier.hpp"
#include "catherd/enumerate.hpp"
#include "catherd/generators.hpp"
#include "catherd/infinite.hpp"
#include "catherd/pruning.hpp"
#include "catherd/serialize.hpp"
#include "catherd/service.hpp"
#include "catherd/session.hpp"
#include "catherd/solver.hpp"
#include "catherd/structure.hpp"
#include "catherd/verify.hpp"

namespace catherd::cli {

namespace {

// Thrown by command handlers to leave with a specific exit code.
struct Exit {
  int code;
  std::string message;
};

Graph load_graph(const std::string& arg) {
  std::ifstream file(arg);
  if (file) {
    std::stringstream text;
    text << file.rdbuf();
    return graph_from_text(text.str());
  }
  return graph_from_text(arg);
}

void require_budget(const Graph& g, const Budget& budget) {
  if (g.edge_count() > budget.solver_edges) {
    throw Exit{kBudget, "graph has " + std::to_string(g.edge_count()) + " edges; the solver budget is " +
                            std::to_string(budget.solver_edges) + " (raise it with CATHERD_BUDGET=edges=N)"};
  }
}

std::string edge_text(const Graph& g, EdgeId e) {
  return std::to_string(g.edge(e).u) + "-" + std::to_string(g.edge(e).v);
}

std::string path_text(const std::vector<Vertex>& path) {
  std::string s;
  for (std::size_t i = 0; i < path.size(); ++i) s += (i ? "-" : "") + std::to_string(path[i]);
  return s;
}

// --- solve ---------------------------------------------------------------------

struct SolveArgs {
  std::string graph;
  std::optional<int> vertex;
  bool all = false;
  bool unrestricted = false;
};

void solve(const SolveArgs& a, bool json, const Budget& budget, std::ostream& out) {
  const Graph g = load_graph(a.graph);
  require_budget(g, budget);
  if (g.vertex_count() == 0) throw Exit{kUsage, "graph has no vertices"};
  if (a.vertex && !g.contains(*a.vertex)) throw Exit{kUsage, "vertex " + std::to_string(*a.vertex) + " is not in the graph"};
  Solver s(g, {.restrict_to_component = !a.unrestricted});
  const auto values = s.values(EdgeMask::full(g));
  const int top = *std::max_element(values.begin(), values.end());
  if (json) {
    Json j = {{"cat_number", top}};
    if (a.vertex) {
      j["vertex"] = *a.vertex;
      j["value"] = values[*a.vertex];
    }
    if (a.all) j["values"] = values;
    out << j.dump(2) << "\n";
    return;
  }
  if (a.vertex) {
    out << values[*a.vertex] << "\n";
  } else if (a.all) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) out << v << ": " << values[v] << "\n";
  } else {
    out << top << "\n";
  }
}

// --- classify / prune / structure -----------------------------------------------

void classify_cmd(const std::string& graph, bool json, std::ostream& out) {
  const auto c = classify(load_graph(graph));
  if (json) {
    out << to_json(c).dump(2) << "\n";
    return;
  }
  out << to_string(c.verdict);
  if (c.catalog_id) out << "/" << *c.catalog_id;
  out << "\n";
  if (!c.prune.identity()) out << "pruned: " << one_line(c.prune.result) << "\n";
  if (c.witness) out << "witness: " << c.witness->description << "\n";
}

void prune_cmd(const std::string& graph, const std::string& emit, bool json, std::ostream& out) {
  const Graph g = load_graph(graph);
  const auto report = is_tree(g) ? prune_tree(g) : prune_duplicate_leaves(g);
  if (emit == "dot") {
    out << to_dot(report.result);
    return;
  }
  if (emit == "json" || json) {
    out << to_json(report).dump(2) << "\n";
    return;
  }
  for (const auto& step : report.steps) {
    out << to_string(step.rule) << ": removed";
    for (Vertex v : step.removed) out << " " << v;
    out << "\n";
  }
  out << serialize_graph(report.result);
}

void structure_cmd(const std::string& graph, bool json, const Budget& budget, std::ostream& out) {
  const Graph g = load_graph(graph);
  const auto report = evadibility_report(g, g.edge_count() <= budget.solver_edges);
  const auto blocks = two_edge_connected_components(g);
  if (json) {
    out << Json{{"evadibility", to_json(report)}, {"blocks", to_json(blocks)}}.dump(2) << "\n";
    return;
  }
  out << "longest path: " << report.longest_path << " vertices\n";
  out << "edge-disjoint cycles: " << report.max_cycles;
  if (report.cycle_vertex >= 0) out << " (at vertex " << report.cycle_vertex << ")";
  out << "\nk = " << report.k << ", herder bound " << report.bound << "\n";
  if (report.cut_value) out << "cat number: " << *report.cut_value << "\n";
  out << "2-edge-connected components: " << blocks.members.size() << "\n";
  for (std::size_t i = 0; i < blocks.members.size(); ++i) {
    out << "  " << i << ":";
    for (Vertex v : blocks.members[i]) out << " " << v;
    out << "\n";
  }
  out << "bridges:";
  for (EdgeId e : blocks.bridges) out << " " << edge_text(g, e);
  out << "\n";
}

// --- verify ------------------------------------------------------------------------

int verify_cmd(const std::string& suite, const VerifyOptions& opts, bool json, std::ostream& out) {
  const auto results = run_suites(suite, opts);
  bool ok = true;
  Json all = Json::array();
  for (const auto& r : results) {
    ok = ok && r.passed();
    if (json) {
      all.push_back(to_json(r));
      continue;
    }
    out << (r.passed() ? "PASS " : "FAIL ") << std::left << std::setw(13) << r.name << std::right << " "
        << r.checked << " checks, " << std::fixed << std::setprecision(2) << r.seconds << " s  [" << r.scope << "]\n";
    if (!r.passed()) {
      out << "  " << r.failures << " failures (seed " << r.seed << ")\n";
      for (const auto& c : r.counterexamples) out << "  " << c << "\n";
      if (static_cast<long long>(r.counterexamples.size()) < r.failures) out << "  ...\n";
    }
  }
  if (json) out << Json{{"passed", ok}, {"suites", all}}.dump(2) << "\n";
  return ok ? kOk : kFailed;
}

// --- challenge ---------------------------------------------------------------------

struct ChallengeArgs {
  std::string generator;
  std::string cat;
  std::string herder = "cut_last_edge";
  int k = 0;
  std::uint64_t seed = 0;
  bool until_capture = false;
  int horizon = 10000;
  bool trace = false;
};

void challenge_cmd(const ChallengeArgs& a, bool json, const Budget& budget, std::ostream& out) {
  const auto g = inf::make_infinite(a.generator);
  const auto cat_name = a.cat.empty() ? g.info.cat_strategy : a.cat;
  auto cat = inf::make_cat(cat_name, std::max(1, a.k));
  auto herder = inf::make_herder(a.herder, a.seed);
  const inf::ChallengeConfig cfg{budget.infinite_vertices};
  const auto r = a.until_capture ? inf::play_until_capture(g, *cat, *herder, a.horizon, cfg)
                                 : inf::run_challenge(g, *cat, *herder, a.k, cfg);
  if (json) {
    out << inf::to_json(r).dump(2) << "\n";
    return;
  }
  out << r.family << ": " << r.cat << " vs " << r.herder << ", k = " << r.k << ": " << inf::to_string(r.outcome);
  if (r.captured_at) out << " at cut " << *r.captured_at;
  out << " (" << r.survived << " cuts answered, " << r.materialized << " vertices touched)\n";
  if (!a.trace) return;
  for (const auto& ev : r.trace) {
    switch (ev.kind) {
      case inf::InfiniteEvent::Kind::Place:
        out << "  place " << ev.vertex << "\n";
        break;
      case inf::InfiniteEvent::Kind::Cut:
        out << "  cut " << ev.edge.a << " " << ev.edge.b << "\n";
        break;
      case inf::InfiniteEvent::Kind::Move: {
        out << "  move";
        for (const auto& l : ev.path) out << " " << l;
        out << "\n";
        break;
      }
    }
  }
}

// --- play ------------------------------------------------------------------------

void print_log(const GameSession& s, std::size_t from, std::ostream& out) {
  const Graph& g = s.state().graph();
  for (std::size_t i = from; i < s.log().size(); ++i) {
    const auto& entry = s.log()[i];
    const char* who = entry.by_engine ? "engine" : "you";
    switch (entry.event.kind) {
      case TraceEvent::Kind::Place:
        out << who << ": cat placed on " << entry.event.vertex << "\n";
        break;
      case TraceEvent::Kind::Cut:
        out << who << ": cut " << edge_text(g, entry.event.edge) << "\n";
        break;
      case TraceEvent::Kind::Move:
        out << who << ": cat moves " << path_text(entry.event.path) << "\n";
        break;
    }
  }
}

void print_state(const GameSession& s, std::ostream& out) {
  const auto& st = s.state();
  const Graph& g = st.graph();
  out << "score " << st.score();
  if (st.cat()) out << ", cat on " << *st.cat();
  out << "; surviving:";
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (st.mask().test(e)) out << " " << edge_text(g, e);
  }
  out << "\n";
}

void print_hints(GameSession& s, std::ostream& out) {
  Json a;
  try {
    a = s.analysis();
  } catch (const SessionError& e) {
    out << "hints unavailable: " << e.what() << "\n";
    return;
  }
  const auto phase = s.state().phase();
  if (phase == Phase::AwaitPlacement) {
    const auto values = a["values"].get<std::vector<int>>();
    out << "hint: vertex values";
    for (std::size_t v = 0; v < values.size(); ++v) out << " " << v << ":" << values[v];
    out << "\n";
  } else if (phase == Phase::HerderToCut) {
    out << "hint: total cuts after each cut\n";
    for (const auto& c : a["cuts"]) {
      out << "  " << c["endpoints"][0] << "-" << c["endpoints"][1] << ": " << c["value"]
          << (c["optimal"].get<bool>() ? " *" : "") << "\n";
    }
  } else if (phase == Phase::CatToMove) {
    out << "hint: further cuts the herder needs after each move\n";
    for (const auto& r : a["replies"]) {
      out << "  " << r["vertex"] << ": " << r["value"] << (r["optimal"].get<bool>() ? " *" : "") << "\n";
    }
  }
}

void play_cmd(const std::string& graph, const std::string& as, bool hints, const Budget& budget, std::istream& in,
              std::ostream& out) {
  const HumanRole role = as == "cat" ? HumanRole::Cat : HumanRole::Herder;
  GameSession s(load_graph(graph), role, EngineLevel{}, budget);
  if (s.engine_fallback()) out << "graph is over the solver budget; the engine plays greedy\n";
  out << "you are the " << as << ". commands: place v | cut u v | move v | hint | quit\n";
  std::size_t shown = 0;
  for (;;) {
    print_log(s, shown, out);
    shown = s.log().size();
    if (s.state().terminal()) {
      out << "cat captured after " << s.state().score() << " cuts\n";
      return;
    }
    print_state(s, out);
    if (hints) print_hints(s, out);
    out << "> " << std::flush;
    std::string line;
    if (!std::getline(in, line)) {
      out << "\ngame abandoned\n";
      return;
    }
    std::istringstream words(line);
    std::string cmd;
    words >> cmd;
    try {
      if (cmd.empty()) continue;
      if (cmd == "quit" || cmd == "q") return;
      if (cmd == "hint" || cmd == "?") {
        print_hints(s, out);
        continue;
      }
      std::vector<Vertex> xs;
      for (Vertex x; words >> x;) xs.push_back(x);
      if (!words.eof()) throw SessionError(400, "expected vertex numbers");
      if (cmd == "place" && xs.size() == 1) {
        s.place(xs[0]);
      } else if (cmd == "move" && xs.size() == 1) {
        s.move(xs[0]);
      } else if (cmd == "cut" && xs.size() == 2) {
        s.cut(xs[0], xs[1]);
      } else {
        out << "unknown command; use place v, cut u v, move v, hint or quit\n";
      }
    } catch (const SessionError& e) {
      out << "rejected: " << e.what() << "\n";
    }
  }
}

// --- serve -------------------------------------------------------------------------

void serve_cmd(ServiceConfig cfg, std::ostream& out) {
  sigset_t signals;
  sigemptyset(&signals);
  sigaddset(&signals, SIGINT);
  sigaddset(&signals, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &signals, nullptr);
  Server server(std::move(cfg));
  const int port = server.bind();
  out << "listening on port " << port << std::endl;
  std::thread worker([&] { server.run(); });
  int sig = 0;
  sigwait(&signals, &sig);
  server.stop();
  worker.join();
  out << "stopped" << std::endl;
}

// --- enumerate -------------------------------------------------------------------

void enumerate_cmd(const std::string& cls, const EnumConfig& base, bool json, std::ostream& out) {
  EnumConfig cfg = base;
  if (cls == "connected") cfg.graph_class = GraphClass::Connected;
  if (cls == "trees") cfg.graph_class = GraphClass::Trees;
  if (cls == "unicyclic") cfg.graph_class = GraphClass::Unicyclic;
  if (cls == "spiders") cfg.graph_class = GraphClass::Spiders;
  const auto graphs = enumerate(cfg);
  if (json) {
    Json all = Json::array();
    for (const auto& g : graphs) all.push_back(to_json(g));
    out << all.dump() << "\n";
    return;
  }
  out << write_edge_lists(graphs);
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact solver and tools for the cat herding game"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Machine-readable output");

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "Cat numbers by exact minimax");
  solve_cmd->add_option("--graph", solve_args.graph, "Edge-list file, edge-list text or generator spec")->required();
  auto* vertex_opt = solve_cmd->add_option("--vertex", solve_args.vertex, "Value of one starting vertex");
  solve_cmd->add_flag("--all-vertices", solve_args.all, "Value of every starting vertex")->excludes(vertex_opt);
  solve_cmd->add_flag("--no-component-restriction", solve_args.unrestricted,
                      "Also consider cuts outside the cat's component");

  std::string graph;
  auto* classify_sub = app.add_subcommand("classify", "Cat number 0-3 or at least 4, with the pruned form");
  classify_sub->add_option("--graph", graph)->required();

  std::string emit = "text";
  auto* prune_sub = app.add_subcommand("prune", "Apply the pruning rules to a fixpoint");
  prune_sub->add_option("--graph", graph)->required();
  prune_sub->add_option("--emit", emit)->check(CLI::IsMember({"text", "dot", "json"}));

  auto* structure_sub = app.add_subcommand("structure", "Longest path, cycle packing, bound and 2-edge-connected blocks");
  structure_sub->add_option("--graph", graph)->required();

  std::string suite;
  VerifyOptions vopts;
  auto suites = suite_names();
  suites.push_back("all");
  auto* verify_sub = app.add_subcommand("verify", "Run a verification suite; exit 1 on any failure");
  verify_sub->add_option("--suite", suite)->required()->check(CLI::IsMember(suites));
  verify_sub->add_option("--max-n", vopts.max_n, "Vertex bound overriding the suite default");
  verify_sub->add_option("--max-m", vopts.max_m, "Edge bound overriding the suite default");
  verify_sub->add_option("--seed", vopts.seed, "Seed for the randomized suites")->capture_default_str();

  ChallengeArgs cargs;
  auto* challenge_sub = app.add_subcommand("challenge", "k-evadibility challenge on an infinite graph");
  challenge_sub->add_option("--generator", cargs.generator, "Infinite family, e.g. binary_tree or star_of_rays:3")
      ->required();
  challenge_sub->add_option("--cat", cargs.cat, "subtree, median_path or cycle_hub; the family's own by default")
      ->check(CLI::IsMember(inf::cat_strategy_names()));
  challenge_sub->add_option("--herder", cargs.herder)->check(CLI::IsMember(inf::herder_strategy_names()))
      ->capture_default_str();
  challenge_sub->add_option("--k", cargs.k, "Cuts the cat must answer k - 1 of; also the median-path window 2^k")
      ->required()
      ->check(CLI::Range(1, 1000000));
  challenge_sub->add_option("--seed", cargs.seed)->capture_default_str();
  challenge_sub->add_flag("--until-capture", cargs.until_capture, "Play on until the cat is isolated");
  challenge_sub->add_option("--horizon", cargs.horizon, "Cut limit for --until-capture")
      ->capture_default_str()
      ->check(CLI::Range(1, 1000000));
  challenge_sub->add_flag("--trace", cargs.trace, "Print every event");

  std::string as;
  bool hints = false;
  auto* play_sub = app.add_subcommand("play", "Play against the optimal engine in the terminal");
  play_sub->add_option("--graph", graph)->required();
  play_sub->add_option("--as", as)->required()->check(CLI::IsMember({"cat", "herder"}));
  play_sub->add_flag("--hints", hints, "Show exact values before every move");

  ServiceConfig scfg;
  auto* serve_sub = app.add_subcommand("serve", "Start the HTTP session service");
  serve_sub->add_option("--port", scfg.port)->capture_default_str()->check(CLI::Range(0, 65535));
  serve_sub->add_option("--host", scfg.host)->capture_default_str();
  serve_sub->add_option("--static-dir", scfg.static_dir, "Directory of the built web UI");
  serve_sub->add_option("--snapshot", scfg.snapshot_path, "Session snapshot file, read on start and written on stop");

  std::string cls = "connected";
  EnumConfig ecfg;
  auto* enumerate_sub = app.add_subcommand("enumerate", "Non-isomorphic graphs as edge lists");
  enumerate_sub->add_option("--class", cls)->check(CLI::IsMember({"connected", "trees", "unicyclic", "spiders"}))
      ->capture_default_str();
  enumerate_sub->add_option("--min-n", ecfg.min_vertices)->capture_default_str();
  enumerate_sub->add_option("--max-n", ecfg.max_vertices)->capture_default_str();
  enumerate_sub->add_option("--max-m", ecfg.max_edges)->capture_default_str();

  std::vector<const char*> argv{"catherd"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    const Budget budget = budget_from_env();
    scfg.budget = budget;
    if (*solve_cmd) solve(solve_args, json, budget, out);
    if (*classify_sub) classify_cmd(graph, json, out);
    if (*prune_sub) prune_cmd(graph, emit, json, out);
    if (*structure_sub) structure_cmd(graph, json, budget, out);
    if (*verify_sub) return verify_cmd(suite, vopts, json, out);
    if (*challenge_sub) challenge_cmd(cargs, json, budget, out);
    if (*play_sub) play_cmd(graph, as, hints, budget, in, out);
    if (*serve_sub) serve_cmd(scfg, out);
    if (*enumerate_sub) enumerate_cmd(cls, ecfg, json, out);
    return kOk;
  } catch (const Exit& e) {
    err << "error: " << e.message << "\n";
    return e.code;
  } catch (const inf::BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const BudgetError& e) {
    err << "error: CATHERD_BUDGET: " << e.what() << "\n";
    return kUsage;
  } catch (const GraphError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    // Classify, prune, enumerate, verify and session rejections.
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const inf::InfiniteError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const SessionError& e) {
    err << "error: " << e.what() << "\n";
    return e.status() >= 500 ? kError : kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
}

}  // namespace catherd::cli
