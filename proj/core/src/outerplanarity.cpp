#include "planeflow/outerplanarity.hpp"

#include <algorithm>
#include <cassert>

namespace planeflow {

namespace {

// Alive rotation entries per vertex as circular doubly linked lists over
// global slot ids, so boundary walks skip removed edges in O(1).
struct Slots {
    std::vector<std::uint32_t> offset; // per vertex
    std::vector<std::uint32_t> nxt, prv;
    std::vector<EdgeId> ue_at;

    explicit Slots(const UndirectedView& u) {
        const std::size_t n = u.rotation.size();
        offset.resize(n + 1, 0);
        for (std::size_t v = 0; v < n; ++v)
            offset[v + 1] = offset[v] + std::uint32_t(u.rotation[v].size());
        const std::uint32_t total = offset[n];
        nxt.resize(total);
        prv.resize(total);
        ue_at.resize(total);
        for (std::size_t v = 0; v < n; ++v) {
            const std::uint32_t d = offset[v + 1] - offset[v];
            for (std::uint32_t j = 0; j < d; ++j) {
                const std::uint32_t s = offset[v] + j;
                ue_at[s] = u.rotation[v][j];
                nxt[s] = offset[v] + (j + 1) % d;
                prv[s] = offset[v] + (j + d - 1) % d;
            }
        }
    }

    std::uint32_t slot_at(const UndirectedView& u, EdgeId ue, VertexId v) const {
        const auto& e = u.uedges[ue];
        return v == e.a ? offset[e.a] + e.slot_a : offset[e.b] + e.slot_b;
    }

    void unlink(std::uint32_t s) {
        nxt[prv[s]] = nxt[s];
        prv[nxt[s]] = prv[s];
    }
};

// Next dart along the outer boundary: leave the head along the first alive
// clockwise successor of the arriving edge.
Dart walk_next(const UndirectedView& u, const Slots& sl, Dart d) {
    const VertexId v = dart_to(u, d);
    const std::uint32_t s = sl.nxt[sl.slot_at(u, dart_uedge(d), v)];
    const EdgeId ue = sl.ue_at[s];
    return make_dart(ue, u.uedges[ue].a == v);
}

} // namespace

EdgePeel peel_edges(const UndirectedView& u, const FaceSet& fs) {
    const std::size_t mu = u.uedges.size();
    EdgePeel out;
    out.layer.assign(mu, 0);
    if (mu == 0) return out;

    Slots sl(u);
    std::vector<char> face_outer(fs.faces.size(), 0);
    std::vector<std::vector<Dart>> bucket(fs.faces.size());
    for (std::size_t f = 0; f < fs.faces.size(); ++f)
        if (f != fs.outer) bucket[f] = fs.faces[f];
    face_outer[fs.outer] = 1;

    std::vector<char> dart_seen(2 * mu, 0);
    std::vector<Dart> frontier = fs.faces[fs.outer];
    std::size_t remaining = mu;
    int round = 0;
    while (remaining > 0) {
        ++round;
        assert(!frontier.empty());
        std::vector<EdgeId> batch;
        for (Dart d : frontier) {
            const EdgeId e = dart_uedge(d);
            if (out.layer[e] == 0) {
                out.layer[e] = round;
                batch.push_back(e);
            }
        }
        frontier.clear();
        std::sort(batch.begin(), batch.end());

        // Boundary walks before this round's removals. Walk darts lie on
        // the outer region, so their edges all belong to this batch.
        std::vector<std::vector<Dart>> walks;
        for (EdgeId e : batch) {
            for (int fwd = 1; fwd >= 0; --fwd) {
                const Dart d0 = make_dart(e, fwd != 0);
                if (dart_seen[d0] || !face_outer[fs.face_of_dart[d0]]) continue;
                std::vector<Dart> w;
                Dart d = d0;
                do {
                    assert(!dart_seen[d]);
                    dart_seen[d] = 1;
                    w.push_back(d);
                    d = walk_next(u, sl, d);
                } while (d != d0);
                walks.push_back(std::move(w));
            }
        }
        out.walks.push_back(std::move(walks));

        for (EdgeId e : batch) {
            --remaining;
            sl.unlink(sl.slot_at(u, e, u.uedges[e].a));
            sl.unlink(sl.slot_at(u, e, u.uedges[e].b));
            for (int fwd = 1; fwd >= 0; --fwd) {
                const FaceId f = fs.face_of_dart[make_dart(e, fwd != 0)];
                if (!face_outer[f]) {
                    face_outer[f] = 1;
                    frontier.insert(frontier.end(), bucket[f].begin(),
                                    bucket[f].end());
                    bucket[f].clear();
                }
            }
        }
    }
    out.k = round;
    return out;
}

VertexPeel peel_vertices(const UndirectedView& u, const FaceSet& fs) {
    const std::size_t n = u.rotation.size();
    const std::size_t mu = u.uedges.size();
    VertexPeel out;
    out.layer.assign(n, 0);

    Slots sl(u);
    std::vector<char> face_outer(fs.faces.size(), 0);
    std::vector<std::vector<Dart>> bucket(fs.faces.size());
    for (std::size_t f = 0; f < fs.faces.size(); ++f)
        if (f != fs.outer) bucket[f] = fs.faces[f];
    face_outer[fs.outer] = 1;

    std::vector<char> edge_alive(mu, 1);
    std::vector<std::uint32_t> deg(n);
    for (std::size_t v = 0; v < n; ++v)
        deg[v] = std::uint32_t(u.rotation[v].size());

    std::vector<VertexId> frontier;
    for (Dart d : fs.faces[fs.outer]) frontier.push_back(dart_from(u, d));
    for (std::size_t v = 0; v < n; ++v)
        if (deg[v] == 0) frontier.push_back(VertexId(v)); // single-vertex graph

    std::size_t remaining = n;
    int round = 0;
    while (remaining > 0) {
        ++round;
        assert(!frontier.empty());
        std::vector<VertexId> batch;
        for (VertexId v : frontier)
            if (out.layer[v] == 0) {
                out.layer[v] = round;
                batch.push_back(v);
            }
        frontier.clear();
        std::sort(batch.begin(), batch.end());

        for (VertexId v : batch) {
            --remaining;
            for (EdgeId ue : u.rotation[v]) {
                if (!edge_alive[ue]) continue;
                edge_alive[ue] = 0;
                sl.unlink(sl.slot_at(u, ue, u.uedges[ue].a));
                sl.unlink(sl.slot_at(u, ue, u.uedges[ue].b));
                const VertexId w = u.uedges[ue].a == v ? u.uedges[ue].b
                                                       : u.uedges[ue].a;
                --deg[v];
                --deg[w];
                // an isolated survivor sits inside the merged outer region
                if (deg[w] == 0 && out.layer[w] == 0) frontier.push_back(w);
                for (int fwd = 1; fwd >= 0; --fwd) {
                    const FaceId f = fs.face_of_dart[make_dart(ue, fwd != 0)];
                    if (!face_outer[f]) {
                        face_outer[f] = 1;
                        for (Dart d : bucket[f])
                            frontier.push_back(dart_from(u, d));
                        bucket[f].clear();
                    }
                }
            }
        }
    }
    out.k = round;
    return out;
}

} // namespace planeflow
