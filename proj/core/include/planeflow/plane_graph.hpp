#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "planeflow/error.hpp"

namespace planeflow {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

// Plane directed graph described purely combinatorially: a rotation system
// (clockwise cyclic order of incident edge ids at every vertex) plus a
// witness edge whose tail->head dart has the outer face on its left. No
// coordinates are ever stored; planarity of the rotation system is enforced
// via the Euler count of the traced faces.
//
// outer_flip covers witnesses where only the head->tail dart borders the
// outer face: a subgraph's boundary can consist entirely of edges directed
// against its outer walk, so an aligned witness need not exist.
struct PlaneDiGraph {
    struct Edge {
        VertexId tail = kNone;
        VertexId head = kNone;
    };

    std::vector<Edge> edges;
    std::vector<std::vector<EdgeId>> rotation; // clockwise per vertex
    EdgeId outer_edge = kNone;                 // kNone only for edgeless graphs
    bool outer_flip = false; // outer face is left of the head->tail dart

    std::size_t vertex_count() const { return rotation.size(); }
    std::size_t edge_count() const { return edges.size(); }
};

// Undirected view: a two-edge cycle (v,w),(w,v) collapses into one undirected
// edge carrying both directed ids. Rotations carry over; the pair must sit in
// adjacent rotation slots at both endpoints for the collapse to be drawable.
struct UndirectedView {
    struct UEdge {
        VertexId a = kNone;
        VertexId b = kNone;
        EdgeId forward = kNone;  // directed id with tail a, or kNone
        EdgeId backward = kNone; // directed id with tail b, or kNone
        std::uint32_t slot_a = kNone; // index in rotation[a]
        std::uint32_t slot_b = kNone; // index in rotation[b]
    };

    std::vector<UEdge> uedges;
    std::vector<std::vector<std::uint32_t>> rotation; // clockwise, uedge ids
    // Per directed edge: the uedge id and whether the directed edge runs a->b.
    std::vector<std::uint32_t> uedge_of_edge;
    std::vector<bool> edge_is_forward;

    std::size_t vertex_count() const { return rotation.size(); }
    std::size_t uedge_count() const { return uedges.size(); }

    VertexId other(std::uint32_t ue, VertexId v) const {
        const UEdge& e = uedges[ue];
        return e.a == v ? e.b : e.a;
    }
};

// A dart is a directed traversal of an undirected edge: 2*ue for a->b,
// 2*ue+1 for b->a.
using Dart = std::uint32_t;

inline Dart make_dart(std::uint32_t ue, bool forward) { return 2 * ue + (forward ? 0u : 1u); }
inline std::uint32_t dart_uedge(Dart d) { return d >> 1; }
inline bool dart_forward(Dart d) { return (d & 1u) == 0; }
inline Dart dart_reverse(Dart d) { return d ^ 1u; }

inline VertexId dart_from(const UndirectedView& u, Dart d) {
    const auto& e = u.uedges[dart_uedge(d)];
    return dart_forward(d) ? e.a : e.b;
}
inline VertexId dart_to(const UndirectedView& u, Dart d) {
    const auto& e = u.uedges[dart_uedge(d)];
    return dart_forward(d) ? e.b : e.a;
}

// Validates ids, rejects self-loops and duplicate directed edges, checks that
// rotations list exactly the incident edges, and that the traced embedding
// satisfies Euler's formula on the undirected view.
PlaneDiGraph build_plane_graph(std::vector<PlaneDiGraph::Edge> edges,
                               std::vector<std::vector<EdgeId>> rotation,
                               EdgeId outer_edge, bool outer_flip = false);

// Collapse opposite edge pairs. Rejects pairs that are not adjacent in the
// rotation at both endpoints (not drawable as a single segment).
UndirectedView undirect(const PlaneDiGraph& g);

} // namespace planeflow
