#include "catherd/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <deque>
#include <sstream>

namespace catherd {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw GraphError("negative vertex count");
  for (auto& e : edges_) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw GraphError("edge endpoint out of range: " + std::to_string(e.u) + " " +
                       std::to_string(e.v));
    }
    if (e.u == e.v) throw GraphError("self-loop at vertex " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw GraphError("duplicate edge " + std::to_string(dup->u) + " " + std::to_string(dup->v));
  }
  adjacency_.assign(static_cast<std::size_t>(n), {});
  for (EdgeId i = 0; i < edge_count(); ++i) {
    const Edge& e = edges_[static_cast<std::size_t>(i)];
    adjacency_[static_cast<std::size_t>(e.u)].push_back({e.v, i});
    adjacency_[static_cast<std::size_t>(e.v)].push_back({e.u, i});
  }
}

std::span<const Incidence> Graph::incident(Vertex v) const {
  if (!contains(v)) throw GraphError("vertex out of range: " + std::to_string(v));
  return adjacency_[static_cast<std::size_t>(v)];
}

std::optional<EdgeId> Graph::find_edge(Vertex a, Vertex b) const {
  if (!contains(a) || !contains(b) || a == b) return std::nullopt;
  Edge key{std::min(a, b), std::max(a, b)};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<EdgeId>(it - edges_.begin());
}

// --- EdgeMask ---------------------------------------------------------------

EdgeMask EdgeMask::empty(const Graph& g) {
  EdgeMask m;
  m.width_ = g.edge_count();
  m.words_.assign(static_cast<std::size_t>((m.width_ + 63) / 64), 0);
  return m;
}

EdgeMask EdgeMask::full(const Graph& g) {
  EdgeMask m = empty(g);
  for (EdgeId e = 0; e < m.width_; ++e) m.set(e, true);
  return m;
}

EdgeMask EdgeMask::from_bits(int width, std::uint64_t bits) {
  if (width < 0 || width > 64) throw GraphError("from_bits supports widths up to 64");
  EdgeMask m;
  m.width_ = width;
  m.words_.assign(width > 0 ? 1 : 0, 0);
  if (width > 0) {
    std::uint64_t valid = width == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << width) - 1);
    m.words_[0] = bits & valid;
  }
  return m;
}

void EdgeMask::check(EdgeId e) const {
  if (e < 0 || e >= width_) throw GraphError("edge index out of range: " + std::to_string(e));
}

bool EdgeMask::test(EdgeId e) const {
  check(e);
  return (words_[static_cast<std::size_t>(e / 64)] >> (e % 64)) & 1U;
}

void EdgeMask::set(EdgeId e, bool value) {
  check(e);
  auto& w = words_[static_cast<std::size_t>(e / 64)];
  const std::uint64_t bit = std::uint64_t{1} << (e % 64);
  w = value ? (w | bit) : (w & ~bit);
}

int EdgeMask::count() const {
  int total = 0;
  for (auto w : words_) total += std::popcount(w);
  return total;
}

bool EdgeMask::is_subset_of(const EdgeMask& other) const {
  if (width_ != other.width_) return false;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

std::uint64_t EdgeMask::bits64() const {
  if (width_ > 64) throw GraphError("mask wider than 64 edges");
  return words_.empty() ? 0 : words_[0];
}

EdgeMask delete_edge(const EdgeMask& mask, EdgeId e) {
  EdgeMask out = mask;
  out.set(e, false);
  return out;
}

// --- masked queries ----------------------------------------------------------

namespace {

void check_mask(const Graph& g, const EdgeMask& mask) {
  if (mask.width() != g.edge_count()) throw GraphError("mask width does not match graph");
}

}  // namespace

int degree(const Graph& g, const EdgeMask& mask, Vertex v) {
  check_mask(g, mask);
  int d = 0;
  for (const auto& inc : g.incident(v)) d += mask.test(inc.edge) ? 1 : 0;
  return d;
}

std::vector<Vertex> component_of(const Graph& g, const EdgeMask& mask, Vertex v) {
  check_mask(g, mask);
  if (!g.contains(v)) throw GraphError("vertex out of range: " + std::to_string(v));
  std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  std::vector<Vertex> stack{v};
  std::vector<Vertex> out;
  seen[static_cast<std::size_t>(v)] = 1;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    out.push_back(x);
    for (const auto& inc : g.incident(x)) {
      if (!mask.test(inc.edge) || seen[static_cast<std::size_t>(inc.to)]) continue;
      seen[static_cast<std::size_t>(inc.to)] = 1;
      stack.push_back(inc.to);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> component_labels(const Graph& g, const EdgeMask& mask) {
  check_mask(g, mask);
  std::vector<int> label(static_cast<std::size_t>(g.vertex_count()), -1);
  int next = 0;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (label[static_cast<std::size_t>(s)] != -1) continue;
    for (Vertex x : component_of(g, mask, s)) label[static_cast<std::size_t>(x)] = next;
    ++next;
  }
  return label;
}

int component_count(const Graph& g, const EdgeMask& mask) {
  auto labels = component_labels(g, mask);
  return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  return static_cast<int>(component_of(g, EdgeMask::full(g), 0).size()) == g.vertex_count();
}

bool is_tree(const Graph& g) {
  return g.vertex_count() >= 1 && g.edge_count() == g.vertex_count() - 1 && is_connected(g);
}

std::optional<std::vector<Vertex>> shortest_path(const Graph& g, const EdgeMask& mask, Vertex a,
                                                 Vertex b) {
  check_mask(g, mask);
  if (!g.contains(a) || !g.contains(b)) throw GraphError("vertex out of range");
  std::vector<Vertex> parent(static_cast<std::size_t>(g.vertex_count()), -1);
  std::deque<Vertex> queue{a};
  parent[static_cast<std::size_t>(a)] = a;
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    if (x == b) break;
    for (const auto& inc : g.incident(x)) {
      if (!mask.test(inc.edge) || parent[static_cast<std::size_t>(inc.to)] != -1) continue;
      parent[static_cast<std::size_t>(inc.to)] = x;
      queue.push_back(inc.to);
    }
  }
  if (parent[static_cast<std::size_t>(b)] == -1) return std::nullopt;
  std::vector<Vertex> path{b};
  while (path.back() != a) path.push_back(parent[static_cast<std::size_t>(path.back())]);
  std::reverse(path.begin(), path.end());
  return path;
}

// --- text formats -----------------------------------------------------------

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<long long> to_int(std::string_view s) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  using Kind = ParseError::Kind;
  std::optional<int> n;
  std::vector<Edge> edges;
  std::vector<int> edge_line;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    auto tokens = split_ws(line);
    if (tokens.empty() || tokens[0].front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (tokens[0] == "p") {
      if (n) throw ParseError(Kind::Malformed, line_no, where + "duplicate header");
      if (tokens.size() != 2) throw ParseError(Kind::Malformed, line_no, where + "expected 'p <n>'");
      auto value = to_int(tokens[1]);
      if (!value || *value < 0 || *value > 1'000'000) {
        throw ParseError(Kind::Malformed, line_no, where + "bad vertex count");
      }
      n = static_cast<int>(*value);
    } else if (tokens[0] == "e") {
      if (!n) throw ParseError(Kind::MissingHeader, line_no, where + "edge before 'p' header");
      if (tokens.size() != 3) {
        throw ParseError(Kind::Malformed, line_no, where + "expected 'e <u> <v>'");
      }
      auto u = to_int(tokens[1]);
      auto v = to_int(tokens[2]);
      if (!u || !v) throw ParseError(Kind::Malformed, line_no, where + "non-integer endpoint");
      if (*u < 0 || *u >= *n || *v < 0 || *v >= *n) {
        throw ParseError(Kind::OutOfRange, line_no, where + "endpoint out of range");
      }
      if (*u == *v) throw ParseError(Kind::SelfLoop, line_no, where + "self-loop");
      Edge e{static_cast<int>(std::min(*u, *v)), static_cast<int>(std::max(*u, *v))};
      auto seen = std::find(edges.begin(), edges.end(), e);
      if (seen != edges.end()) {
        throw ParseError(Kind::Duplicate, line_no,
                         where + "duplicate edge (first on line " +
                             std::to_string(edge_line[static_cast<std::size_t>(seen - edges.begin())]) +
                             ")");
      }
      edges.push_back(e);
      edge_line.push_back(line_no);
    } else {
      throw ParseError(Kind::Malformed, line_no, where + "unknown record '" + std::string(tokens[0]) + "'");
    }
    if (end == text.size()) break;
  }
  if (!n) throw ParseError(Kind::MissingHeader, 0, "missing 'p <n>' header");
  return Graph(*n, std::move(edges));
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << "p " << g.vertex_count() << '\n';
  for (const auto& e : g.edges()) out << "e " << e.u << ' ' << e.v << '\n';
  return out.str();
}

std::string to_dot(const Graph& g, const EdgeMask& mask) {
  check_mask(g, mask);
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
  for (EdgeId i = 0; i < g.edge_count(); ++i) {
    const auto& e = g.edge(i);
    out << "  " << e.u << " -- " << e.v;
    if (!mask.test(i)) out << " [style=dashed]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const Graph& g) { return to_dot(g, EdgeMask::full(g)); }

Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  std::vector<int> index(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) index[static_cast<std::size_t>(keep[i])] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    int a = index[static_cast<std::size_t>(e.u)];
    int b = index[static_cast<std::size_t>(e.v)];
    if (a >= 0 && b >= 0) edges.push_back({a, b});
  }
  return Graph(static_cast<int>(keep.size()), std::move(edges));
}

Graph masked_graph(const Graph& g, const EdgeMask& mask) {
  check_mask(g, mask);
  std::vector<Edge> edges;
  for (EdgeId i = 0; i < g.edge_count(); ++i) {
    if (mask.test(i)) edges.push_back(g.edge(i));
  }
  return Graph(g.vertex_count(), std::move(edges));
}

}  // namespace catherd
