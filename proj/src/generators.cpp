#include "catherd/generators.hpp"

#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

namespace catherd {

namespace {

constexpr int kMaxVertices = 4096;

[[noreturn]] void bad(const std::string& msg) { throw GraphError("generator spec: " + msg); }

void expect_params(const GeneratorSpec& s, std::size_t count) {
  if (s.params.size() != count) {
    bad(s.family + " takes " + std::to_string(count) + " parameter(s), got " +
        std::to_string(s.params.size()));
  }
}

void expect_range(const GeneratorSpec& s, int value, int lo, int hi) {
  if (value < lo || value > hi) {
    bad(s.family + " parameter " + std::to_string(value) + " outside [" + std::to_string(lo) + ", " +
        std::to_string(hi) + "]");
  }
}

// Appends a path of `length` new vertices hanging from `anchor`.
void hang_path(int& next, Vertex anchor, int length, std::vector<Edge>& edges) {
  Vertex prev = anchor;
  for (int i = 0; i < length; ++i) {
    edges.push_back({prev, next});
    prev = next++;
  }
}

Graph cycle_with_paths(int cycle_len, const std::vector<std::vector<int>>& paths_at) {
  std::vector<Edge> edges;
  for (int i = 0; i < cycle_len; ++i) edges.push_back({i, (i + 1) % cycle_len});
  int next = cycle_len;
  for (int c = 0; c < cycle_len; ++c) {
    for (int len : paths_at[static_cast<std::size_t>(c)]) hang_path(next, c, len, edges);
  }
  return Graph(next, std::move(edges));
}

}  // namespace

GeneratorSpec GeneratorSpec::parse(std::string_view text) {
  GeneratorSpec spec;
  auto colon = text.find(':');
  spec.family = std::string(text.substr(0, colon));
  if (spec.family.empty()) bad("empty family name");
  for (char c : spec.family) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) bad("bad family name '" + spec.family + "'");
  }
  if (colon == std::string_view::npos) return spec;
  std::string_view rest = text.substr(colon + 1);
  if (rest.empty()) bad("missing parameters after ':'");
  std::size_t pos = 0;
  while (pos <= rest.size()) {
    auto comma = rest.find(',', pos);
    if (comma == std::string_view::npos) comma = rest.size();
    auto token = rest.substr(pos, comma - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size() || value < 0) {
      bad("parameter '" + std::string(token) + "' is not a non-negative integer");
    }
    spec.params.push_back(value);
    if (comma == rest.size()) break;
    pos = comma + 1;
  }
  return spec;
}

std::string GeneratorSpec::to_string() const {
  std::ostringstream out;
  out << family;
  for (std::size_t i = 0; i < params.size(); ++i) out << (i == 0 ? ':' : ',') << params[i];
  return out.str();
}

Graph spider(const std::vector<int>& legs) {
  std::vector<Edge> edges;
  int next = 1;
  for (int len : legs) {
    if (len < 1) bad("spider legs must have at least one vertex");
    hang_path(next, 0, len, edges);
  }
  return Graph(next, std::move(edges));
}

Graph from_spec(const GeneratorSpec& s) {
  const auto& f = s.family;
  const auto& p = s.params;
  if (f == "path") {
    expect_params(s, 1);
    expect_range(s, p[0], 1, kMaxVertices);
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < p[0]; ++i) edges.push_back({i, i + 1});
    return Graph(p[0], std::move(edges));
  }
  if (f == "cycle") {
    expect_params(s, 1);
    expect_range(s, p[0], 3, kMaxVertices);
    return cycle_with_paths(p[0], std::vector<std::vector<int>>(static_cast<std::size_t>(p[0])));
  }
  if (f == "star") {
    expect_params(s, 1);
    expect_range(s, p[0], 1, kMaxVertices);
    std::vector<Edge> edges;
    for (int i = 1; i < p[0]; ++i) edges.push_back({0, i});
    return Graph(p[0], std::move(edges));
  }
  if (f == "complete") {
    expect_params(s, 1);
    expect_range(s, p[0], 1, 64);
    std::vector<Edge> edges;
    for (int i = 0; i < p[0]; ++i) {
      for (int j = i + 1; j < p[0]; ++j) edges.push_back({i, j});
    }
    return Graph(p[0], std::move(edges));
  }
  if (f == "spider") {
    if (p.empty()) bad("spider needs at least one leg");
    int total = std::accumulate(p.begin(), p.end(), 1);
    expect_range(s, total, 1, kMaxVertices);
    for (int len : p) expect_range(s, len, 1, kMaxVertices);
    return spider(p);
  }
  if (f == "two_triangles_bridge") {
    expect_params(s, 0);
    return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}});
  }
  if (f == "triangle_tails") {
    expect_params(s, 3);
    for (int len : p) expect_range(s, len, 0, kMaxVertices);
    return cycle_with_paths(3, {{p[0]}, {p[1]}, {p[2]}});
  }
  if (f == "triangle_fork") {
    expect_params(s, 2);
    for (int len : p) expect_range(s, len, 1, kMaxVertices);
    return cycle_with_paths(3, {{p[0], p[1]}, {}, {}});
  }
  if (f == "square_leaves") {
    expect_params(s, 4);
    std::vector<std::vector<int>> at(4);
    for (std::size_t c = 0; c < 4; ++c) {
      expect_range(s, p[c], 0, kMaxVertices);
      at[c].assign(static_cast<std::size_t>(p[c]), 1);
    }
    return cycle_with_paths(4, at);
  }
  if (f == "binary_tree") {
    expect_params(s, 1);
    expect_range(s, p[0], 0, 11);
    int n = (1 << (p[0] + 1)) - 1;
    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i) edges.push_back({(i - 1) / 2, i});
    return Graph(n, std::move(edges));
  }
  if (f == "ladder") {
    expect_params(s, 1);
    expect_range(s, p[0], 1, kMaxVertices / 2);
    int n = p[0];
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
      edges.push_back({i, n + i});
      if (i + 1 < n) {
        edges.push_back({i, i + 1});
        edges.push_back({n + i, n + i + 1});
      }
    }
    return Graph(2 * n, std::move(edges));
  }
  bad("unknown family '" + f + "'");
}

Graph from_spec(std::string_view text) { return from_spec(GeneratorSpec::parse(text)); }

Graph graph_from_text(std::string_view text) {
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(pos, end - pos);
    auto first = line.find_first_not_of(" \t\r");
    if (first != std::string_view::npos && (line[first] == 'p' || line[first] == '#') &&
        (first + 1 == line.size() || line[first + 1] == ' ' || line[first] == '#')) {
      return parse_graph(text);
    }
    if (first != std::string_view::npos) break;
    pos = end + 1;
  }
  auto trimmed = text;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) trimmed.remove_suffix(1);
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front()))) trimmed.remove_prefix(1);
  return from_spec(trimmed);
}

std::vector<std::string> finite_families() {
  return {"path:n",           "cycle:n",          "star:n",        "complete:n",
          "spider:a,b,...",   "two_triangles_bridge", "triangle_tails:p,q,r",
          "triangle_fork:a,b", "square_leaves:a,b,c,d", "binary_tree:d", "ladder:n"};
}

}  // namespace catherd
