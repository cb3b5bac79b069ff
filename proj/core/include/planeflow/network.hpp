#pragma once

#include <vector>

#include "planeflow/plane_graph.hpp"
#include "planeflow/rational.hpp"

namespace planeflow {

// Classic single source / single sink network: lower bounds are all zero.
struct FlowNetwork {
    PlaneDiGraph g;
    std::vector<Rat> upper; // per edge id, >= 0
    VertexId s = kNone;
    VertexId t = kNone;
};

// Extended network: lower bounds, source set, sink set.
struct ExtFlowNetwork {
    PlaneDiGraph g;
    std::vector<Rat> upper;
    std::vector<Rat> lower;
    std::vector<VertexId> sources; // ascending, disjoint from sinks
    std::vector<VertexId> sinks;   // ascending
};

ExtFlowNetwork to_extended(const FlowNetwork& n);

// Validates capacity vector sizes, nonnegativity, lower <= upper, terminal
// sanity (in range, S and T disjoint and nonempty).
void validate_network(const FlowNetwork& n);
void validate_network(const ExtFlowNetwork& n);

} // namespace planeflow
