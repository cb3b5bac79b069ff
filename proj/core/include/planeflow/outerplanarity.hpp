#pragma once

#include <vector>

#include "planeflow/faces.hpp"
#include "planeflow/plane_graph.hpp"

namespace planeflow {

// Iterative peeling of the outer face. Each round removes everything
// currently bordering the unbounded region; removals merge the faces on
// both sides of a removed edge into that region, exposing the next round.
// Every merge absorbs an inner face into the outer region, so membership
// is a plain flag per face. layer[] entries are 1-based rounds; k is the
// number of rounds, i.e. the outerplanarity index of the embedding.

struct EdgePeel {
    int k = 0;
    std::vector<int> layer; // per undirected edge
    // Boundary walks of the outer region at the start of each round, in
    // face order. Every edge removed in round i has at least one dart on a
    // round-i walk; darts of earlier walks never reappear.
    std::vector<std::vector<std::vector<Dart>>> walks;
};

struct VertexPeel {
    int k = 0;
    std::vector<int> layer; // per vertex
};

EdgePeel peel_edges(const UndirectedView& u, const FaceSet& fs);
VertexPeel peel_vertices(const UndirectedView& u, const FaceSet& fs);

} // namespace planeflow
