#include "planeflow/transform.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace planeflow {

namespace {

struct Work {
    std::vector<PlaneDiGraph::Edge> edges;
    std::vector<std::vector<EdgeId>> rot;
    std::vector<Rat> upper;
    std::vector<VertexId> vertex_origin;
    std::vector<EdgeId> edge_origin;

    static Work from(const FlowNetwork& n) {
        Work w;
        w.edges = n.g.edges;
        w.rot = n.g.rotation;
        w.upper = n.upper;
        w.vertex_origin.resize(n.g.vertex_count());
        std::iota(w.vertex_origin.begin(), w.vertex_origin.end(), 0u);
        w.edge_origin.resize(n.g.edge_count());
        std::iota(w.edge_origin.begin(), w.edge_origin.end(), 0u);
        return w;
    }

    void expand(VertexId v, const Rat& cap) {
        const std::vector<EdgeId> star = rot[v];
        const std::size_t p = star.size();
        if (p < 3) reject(ErrorCode::DegreeTooSmall, "cannot expand a vertex of degree below 3");

        std::vector<VertexId> ring(p);
        ring[0] = v;
        for (std::size_t i = 1; i < p; ++i) {
            ring[i] = static_cast<VertexId>(rot.size());
            rot.emplace_back();
            vertex_origin.push_back(vertex_origin[v]);
        }
        std::vector<EdgeId> cyc(p);
        for (std::size_t i = 0; i < p; ++i) {
            cyc[i] = static_cast<EdgeId>(edges.size());
            edges.push_back({ring[i], ring[(i + 1) % p]});
            upper.push_back(cap);
            edge_origin.push_back(kNone);
        }
        for (std::size_t i = 0; i < p; ++i) {
            EdgeId e = star[i];
            if (edges[e].tail == v) {
                edges[e].tail = ring[i];
            } else {
                edges[e].head = ring[i];
            }
            rot[ring[i]] = {e, cyc[i], cyc[(i + p - 1) % p]};
        }
    }

    FlowNetwork net(const FlowNetwork& base) const {
        FlowNetwork out;
        out.g = build_plane_graph(edges, rot, base.g.outer_edge, base.g.outer_flip);
        out.upper = upper;
        out.s = base.s;
        out.t = base.t;
        return out;
    }
};

} // namespace

FlowNetwork expand_vertex(const FlowNetwork& n, VertexId v, const Rat& cycle_cap) {
    validate_network(n);
    if (v >= n.g.vertex_count()) reject(ErrorCode::InvalidParams, "vertex out of range");
    Work w = Work::from(n);
    w.expand(v, cycle_cap);
    return w.net(n);
}

CubicResult to_cubic(const FlowNetwork& n) {
    validate_network(n);
    for (const auto& row : n.g.rotation) {
        if (row.size() < 3) reject(ErrorCode::DegreeTooSmall, "input must have minimum degree 3");
    }
    CubicResult out;
    out.big = std::accumulate(n.upper.begin(), n.upper.end(), Rat(0)) + Rat(1);

    Work w = Work::from(n);
    const VertexId original = static_cast<VertexId>(n.g.vertex_count());
    for (VertexId v = 0; v < original; ++v) {
        if (w.rot[v].size() >= 4) w.expand(v, out.big);
    }

    // A pair that survives stage one joins two unexpanded degree-3 vertices:
    // expansion attaches antiparallel strands to distinct ring vertices, so
    // anything touched above is already clean.
    std::map<std::pair<VertexId, VertexId>, std::pair<bool, bool>> seen;
    for (const auto& e : w.edges) {
        std::pair<VertexId, VertexId> key{std::min(e.tail, e.head), std::max(e.tail, e.head)};
        auto& dirs = seen[key];
        (e.tail < e.head ? dirs.first : dirs.second) = true;
    }
    std::vector<VertexId> targets;
    for (const auto& [key, dirs] : seen) {
        if (dirs.first && dirs.second) {
            targets.push_back(key.first);
            targets.push_back(key.second);
        }
    }
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    for (VertexId v : targets) w.expand(v, out.big);

    out.net = w.net(n);
    out.vertex_origin = w.vertex_origin;
    out.edge_origin = w.edge_origin;
    return out;
}

} // namespace planeflow
