#include "planeflow/plane_graph.hpp"

#include <algorithm>
#include <unordered_map>

#include "planeflow/faces.hpp"

namespace planeflow {

namespace {

std::uint64_t pack_pair(VertexId a, VertexId b) {
    return (static_cast<std::uint64_t>(a) << 32) | b;
}

} // namespace

UndirectedView undirect(const PlaneDiGraph& g) {
    const std::size_t n = g.vertex_count();
    const std::size_t m = g.edge_count();

    std::unordered_map<std::uint64_t, EdgeId> by_pair;
    by_pair.reserve(m * 2);
    for (EdgeId e = 0; e < m; ++e)
        by_pair.emplace(pack_pair(g.edges[e].tail, g.edges[e].head), e);

    UndirectedView u;
    u.rotation.resize(n);
    u.uedge_of_edge.assign(m, kNone);
    u.edge_is_forward.assign(m, false);

    // Uedge ids in order of the smaller directed id: deterministic.
    for (EdgeId e = 0; e < m; ++e) {
        if (u.uedge_of_edge[e] != kNone) continue;
        auto it = by_pair.find(pack_pair(g.edges[e].head, g.edges[e].tail));
        EdgeId partner = (it == by_pair.end()) ? kNone : it->second;
        std::uint32_t ue = static_cast<std::uint32_t>(u.uedges.size());
        UndirectedView::UEdge rec;
        rec.a = g.edges[e].tail;
        rec.b = g.edges[e].head;
        rec.forward = e;
        rec.backward = partner;
        u.uedges.push_back(rec);
        u.uedge_of_edge[e] = ue;
        u.edge_is_forward[e] = true;
        if (partner != kNone) {
            u.uedge_of_edge[partner] = ue;
            u.edge_is_forward[partner] = false;
        }
    }

    // Collapse rotations. A directed pair occupies two adjacent slots at each
    // endpoint; anything else cannot be drawn as one segment.
    for (VertexId v = 0; v < n; ++v) {
        const auto& rot = g.rotation[v];
        const std::size_t deg = rot.size();
        std::vector<bool> consumed(deg, false);
        for (std::size_t i = 0; i < deg; ++i) {
            if (consumed[i]) continue;
            EdgeId e = rot[i];
            std::uint32_t ue = u.uedge_of_edge[e];
            const auto& rec = u.uedges[ue];
            EdgeId partner = (rec.forward == e) ? rec.backward : rec.forward;
            if (partner != kNone) {
                std::size_t nxt = (i + 1) % deg;
                if (nxt == i || rot[nxt] != partner || consumed[nxt])
                    reject(ErrorCode::EmbeddingNotPlanar,
                           "opposite edge pair " + std::to_string(e) + "/" +
                               std::to_string(partner) +
                               " not adjacent in rotation at vertex " + std::to_string(v));
                consumed[nxt] = true;
            }
            consumed[i] = true;
            u.rotation[v].push_back(ue);
        }
    }

    for (VertexId v = 0; v < n; ++v)
        for (std::uint32_t i = 0; i < u.rotation[v].size(); ++i) {
            auto& rec = u.uedges[u.rotation[v][i]];
            if (rec.a == v)
                rec.slot_a = i;
            else
                rec.slot_b = i;
        }
    return u;
}

PlaneDiGraph build_plane_graph(std::vector<PlaneDiGraph::Edge> edges,
                               std::vector<std::vector<EdgeId>> rotation,
                               EdgeId outer_edge, bool outer_flip) {
    PlaneDiGraph g;
    g.edges = std::move(edges);
    g.rotation = std::move(rotation);
    g.outer_edge = outer_edge;
    g.outer_flip = outer_flip;

    const std::size_t n = g.vertex_count();
    const std::size_t m = g.edge_count();
    if (n == 0) reject(ErrorCode::InvalidParams, "graph needs at least one vertex");

    std::unordered_map<std::uint64_t, EdgeId> seen;
    seen.reserve(m * 2);
    for (EdgeId e = 0; e < m; ++e) {
        VertexId t = g.edges[e].tail, h = g.edges[e].head;
        if (t >= n || h >= n)
            reject(ErrorCode::InvalidParams, "edge " + std::to_string(e) + " endpoint out of range");
        if (t == h) reject(ErrorCode::SelfLoop, "edge " + std::to_string(e));
        auto [it, fresh] = seen.emplace(pack_pair(t, h), e);
        if (!fresh)
            reject(ErrorCode::DuplicateDirectedEdge,
                   "edges " + std::to_string(it->second) + " and " + std::to_string(e));
    }

    // Every edge id must appear exactly once at each endpoint's rotation.
    std::vector<std::uint8_t> at_tail(m, 0), at_head(m, 0);
    for (VertexId v = 0; v < n; ++v) {
        for (EdgeId e : g.rotation[v]) {
            if (e >= m)
                reject(ErrorCode::RotationMismatch,
                       "vertex " + std::to_string(v) + " lists unknown edge " + std::to_string(e));
            if (g.edges[e].tail == v) {
                if (++at_tail[e] > 1)
                    reject(ErrorCode::RotationMismatch, "edge " + std::to_string(e) + " repeated");
            } else if (g.edges[e].head == v) {
                if (++at_head[e] > 1)
                    reject(ErrorCode::RotationMismatch, "edge " + std::to_string(e) + " repeated");
            } else {
                reject(ErrorCode::RotationMismatch,
                       "vertex " + std::to_string(v) + " lists non-incident edge " + std::to_string(e));
            }
        }
    }
    for (EdgeId e = 0; e < m; ++e)
        if (!at_tail[e] || !at_head[e])
            reject(ErrorCode::RotationMismatch, "edge " + std::to_string(e) + " missing from a rotation");

    if (m == 0) {
        if (n != 1)
            reject(ErrorCode::EmbeddingNotPlanar, "edgeless graph with more than one vertex");
        if (g.outer_edge != kNone)
            reject(ErrorCode::InvalidParams, "outer witness on edgeless graph");
        return g;
    }
    if (g.outer_edge >= m) reject(ErrorCode::InvalidParams, "outer witness edge out of range");

    UndirectedView u = undirect(g);
    FaceSet fs = trace_faces(u, g);
    // Euler check on the undirected view; fails for disconnected inputs too.
    long long euler = static_cast<long long>(n) - static_cast<long long>(u.uedge_count()) +
                      static_cast<long long>(fs.face_count());
    if (euler != 2)
        reject(ErrorCode::EmbeddingNotPlanar,
               "Euler count is " + std::to_string(euler) + ", embedding is not a plane drawing");
    return g;
}

} // namespace planeflow
