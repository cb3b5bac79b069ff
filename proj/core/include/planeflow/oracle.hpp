#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "planeflow/network.hpp"

namespace planeflow {

// Independent reference implementations used to validate the pipeline. None
// of this code shares logic with the transform/typing path.

struct MaxFlowResult {
    Rat value;
    std::vector<Rat> flow;      // per edge id
    std::vector<bool> cut_side; // true = source side of a minimum cut
};

// Dinic over exact rationals. Asserts that the returned cut's capacity
// equals the flow value before returning.
MaxFlowResult dinic_max_flow(const FlowNetwork& n);

// Feasibility with lower bounds and pinned terminal excesses. g is aligned
// with n.sources followed by n.sinks and must be nonnegative. Returns a
// witness flow or nullopt.
std::optional<std::vector<Rat>> feasible_flow_with_lower_bounds(const ExtFlowNetwork& n,
                                                                const std::vector<Rat>& g);

// An item of a component X: a boundary edge (exactly one endpoint in X) or a
// terminal contained in X. sigma is +1 when the item injects into X (edge
// head inside, or source), -1 when it extracts (edge tail inside, or sink).
struct ComponentItem {
    bool is_edge = true;
    EdgeId edge = kNone;
    VertexId terminal = kNone;
    int sigma = 0;
};

// Boundary edges by ascending edge id, then contained terminals by ascending
// vertex id. comp must be sorted ascending. This ordering indexes subset
// bitmasks everywhere.
std::vector<ComponentItem> items_of_component(const ExtFlowNetwork& n,
                                              const std::vector<VertexId>& comp);

// Exact range of the net injection through the item subset `mask` over all
// partial flows of the component: edge bounds, conservation at contained
// non-terminals, and nonnegative excess at contained terminals. Solved by
// the in-repo simplex; oracle scale only.
std::pair<Rat, Rat> project_interval(const ExtFlowNetwork& n,
                                     const std::vector<VertexId>& comp,
                                     std::uint32_t mask);

} // namespace planeflow
