#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "catherd/graph.hpp"

namespace catherd {

/// Parsed generator descriptor, `family[:p1,p2,...]`.
struct GeneratorSpec {
  std::string family;
  std::vector<int> params;

  static GeneratorSpec parse(std::string_view text);
  [[nodiscard]] std::string to_string() const;
};

/// Builds the finite graph named by a generator spec.
///
/// Vertex labeling per family:
///   path:n                 0-1-...-(n-1)
///   cycle:n (n>=3)         path order plus edge (n-1,0)
///   star:n                 center 0, leaves 1..n-1
///   complete:n             K_n
///   spider:a,b,...         root 0; each leg numbered outward, legs in order
///   two_triangles_bridge   triangles {0,1,2} and {3,4,5}, bridge 2-3
///   triangle_tails:p,q,r   triangle 0,1,2 with pendant paths of p,q,r
///                          vertices at 0,1,2 respectively
///   triangle_fork:a,b      triangle 0,1,2 with two pendant paths of a and b
///                          vertices, both at vertex 0
///   square_leaves:a,b,c,d  square 0-1-2-3 with a,b,c,d leaves at each corner
///   binary_tree:d          complete binary tree of depth d, heap numbering
///   ladder:n               rails 0..n-1 and n..2n-1, rungs i -- n+i
///
/// Throws GraphError for unknown families or out-of-range parameters.
[[nodiscard]] Graph from_spec(const GeneratorSpec& spec);
[[nodiscard]] Graph from_spec(std::string_view text);

/// Accepts either edge-list text (anything with a "p" header line) or a
/// generator spec.
[[nodiscard]] Graph graph_from_text(std::string_view text);

/// Spider S(P): root 0 with one pendant path of k vertices per entry k.
[[nodiscard]] Graph spider(const std::vector<int>& legs);

/// Names of the finite generator families, for listings.
[[nodiscard]] std::vector<std::string> finite_families();

}  // namespace catherd
