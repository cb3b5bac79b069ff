#pragma once

#include <string>
#include <vector>

#include "planeflow/plane_graph.hpp"

namespace planeflow {

// A reassembling of a plane graph: a rooted binary tree whose leaves are the
// vertices. Each node stands for the union of the leaves below it, and its
// boundary is the set of directed edges with exactly one endpoint inside.
// The parent's boundary is always the symmetric difference of its children's,
// so only ids are stored; sets are sorted ascending.

struct Reassembling {
    struct Node {
        int left = -1; // -1 on leaves
        int right = -1;
        VertexId vertex = kNone; // set on leaves only
        std::vector<EdgeId> boundary;
    };
    std::vector<Node> nodes; // children precede parents
    int root = -1;
};

// Widest boundary over all nodes, and one node attaining it.
struct AlphaMeasure {
    std::size_t alpha = 0;
    int argmax_node = -1;
};

// Builds a reassembling whose node boundaries stay within twice the peel
// depth of the embedding on radially layered inputs, and close to it
// elsewhere. Peel walks assign each vertex an exact rational angle (round
// one spreads uniformly, later walks interpolate between already-angled
// anchors). Edges whose two faces sit at equal breadth-first depth from the
// outer face run radially; their components, grown inward from the outer
// walk, form radial columns. Angle-adjacent columns fuse while that does not
// widen the boundary, and the resulting units are folded left-to-right into
// a caterpillar. Degrees must be 2 or 3 (NotCubic otherwise); the embedding
// must be a connected plane graph (Disconnected / NotPlane).
Reassembling build_reassembling(const PlaneDiGraph& g);

// Recomputes every boundary bottom-up and checks the tree: one root, every
// node a child of exactly one parent, leaves carry each vertex exactly once,
// and every cached boundary matches the recomputation. InvalidTree on any
// violation.
AlphaMeasure alpha_measure(const PlaneDiGraph& g, const Reassembling& b);

// Indented dump, root first: node id, vertex set, boundary degree.
std::string export_tree(const Reassembling& b);

} // namespace planeflow
