#pragma once

#include <json.hpp>

#include "catherd/classifier.hpp"
#include "catherd/graph.hpp"
#include "catherd/infinite.hpp"
#include "catherd/play.hpp"
#include "catherd/pruning.hpp"
#include "catherd/solver.hpp"
#include "catherd/structure.hpp"
#include "catherd/verify.hpp"

namespace catherd {

using Json = nlohmann::json;

/// {"n": 3, "edges": [[0,1],[1,2]]}
[[nodiscard]] Json to_json(const Graph& g);
/// Accepts the object form above, a generator spec string, or edge-list text.
/// Throws GraphError on anything else.
[[nodiscard]] Graph graph_from_json(const Json& j);

[[nodiscard]] Json to_json(const EdgeMask& mask, const Graph& g);
[[nodiscard]] Json to_json(const PruneStep& step);
[[nodiscard]] Json to_json(const PruneReport& report);
[[nodiscard]] Json to_json(const LowerBoundWitness& w);
[[nodiscard]] Json to_json(const Classification& c);
[[nodiscard]] Json to_json(const EvadibilityReport& r);
[[nodiscard]] Json to_json(const BlockTree& b);
[[nodiscard]] Json to_json(const MoveAnalysis& a);
[[nodiscard]] Json to_json(const TraceEvent& ev, const Graph& g);
[[nodiscard]] Json to_json(const ScoreTrace& t, const Graph& g);
[[nodiscard]] Json to_json(const SuiteResult& r);

namespace inf {
[[nodiscard]] Json to_json(const InfiniteEvent& ev);
[[nodiscard]] Json to_json(const ChallengeResult& r);
[[nodiscard]] Json to_json(const FamilyInfo& info);
}  // namespace inf

}  // namespace catherd
