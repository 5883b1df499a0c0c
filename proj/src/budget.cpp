#include "catherd/budget.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <string>

namespace catherd {

namespace {

long long parse_positive(std::string_view s, std::string_view whole) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || v <= 0) {
    throw BudgetError("bad budget '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

Budget parse_budget(std::string_view text) {
  Budget b;
  if (text.find('=') == std::string_view::npos) {
    b.solver_edges = static_cast<int>(std::min(64LL, parse_positive(text, text)));
    return b;
  }
  std::string_view rest = text;
  while (!rest.empty()) {
    auto comma = rest.find(',');
    auto item = rest.substr(0, comma);
    auto eq = item.find('=');
    if (eq == std::string_view::npos) throw BudgetError("bad budget '" + std::string(text) + "'");
    auto key = item.substr(0, eq);
    auto value = parse_positive(item.substr(eq + 1), text);
    if (key == "edges") {
      b.solver_edges = static_cast<int>(std::min(64LL, value));
    } else if (key == "vertices") {
      b.infinite_vertices = static_cast<std::size_t>(value);
    } else {
      throw BudgetError("unknown budget key '" + std::string(key) + "'");
    }
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
    if (rest.empty()) throw BudgetError("bad budget '" + std::string(text) + "'");
  }
  return b;
}

Budget budget_from_env() {
  const char* env = std::getenv("CATHERD_BUDGET");
  if (env == nullptr || *env == '\0') return {};
  return parse_budget(env);
}

}  // namespace catherd
