#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string_view>

namespace catherd {

/// Size guards shared by the CLI, the session engine and infinite play.
struct Budget {
  /// Largest graph (in edges) the optimal engine and analysis will solve.
  int solver_edges = 18;
  /// Vertices an infinite-graph challenge may touch.
  std::size_t infinite_vertices = 100000;
};

class BudgetError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// "edges=N,vertices=M" (either key optional); a bare integer sets edges.
/// Edges are capped at the solver's 64-edge ceiling.
[[nodiscard]] Budget parse_budget(std::string_view text);
/// Defaults overridden by CATHERD_BUDGET when it is set.
[[nodiscard]] Budget budget_from_env();

}  // namespace catherd
