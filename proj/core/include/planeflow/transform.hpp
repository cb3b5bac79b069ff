#pragma once

#include <vector>

#include "planeflow/network.hpp"

namespace planeflow {

// Replace vertex v (degree p >= 3) by a clockwise directed cycle of p fresh
// vertices carrying cycle_cap each; the i-th incident edge moves to the i-th
// cycle vertex. v's id is reused for the cycle vertex at rotation position 0,
// so terminals and edge ids are stable; the p-1 other vertices are appended.
FlowNetwork expand_vertex(const FlowNetwork& n, VertexId v, const Rat& cycle_cap);

struct CubicResult {
    FlowNetwork net;
    std::vector<VertexId> vertex_origin; // new id -> input id
    std::vector<EdgeId> edge_origin;     // new id -> input id, kNone = cycle edge
    Rat big;                             // capacity of every fresh cycle edge
};

// Make every vertex degree exactly 3 and break antiparallel pairs: first
// expand all vertices of degree >= 4 (ascending), then expand both endpoints
// of each surviving two-edge cycle (ascending). Cycle capacities are one more
// than the total input capacity, so they never constrain a flow. Requires
// minimum degree 3.
CubicResult to_cubic(const FlowNetwork& n);

} // namespace planeflow
