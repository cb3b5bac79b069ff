#include "planeflow/preprocess.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <numeric>

#include "planeflow/faces.hpp"

namespace planeflow {

namespace {

// ---------------------------------------------------------------------------
// Block-cut machinery.

struct Dsu {
    std::vector<std::uint32_t> parent;

    explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }

    std::uint32_t find(std::uint32_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    void unite(std::uint32_t a, std::uint32_t b) { parent[find(a)] = find(b); }
};

std::vector<VertexId> block_vertices(const UndirectedView& u, const std::vector<std::uint32_t>& ues) {
    std::vector<VertexId> verts;
    verts.reserve(ues.size() + 1);
    for (std::uint32_t ue : ues) {
        verts.push_back(u.uedges[ue].a);
        verts.push_back(u.uedges[ue].b);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    return verts;
}

// The blocks crossed on the way from s to t, and the cut vertices between
// consecutive ones. BFS over the block-cut tree; a terminal that is itself a
// cut vertex starts/ends at its cut node.
struct BlockChain {
    std::vector<std::uint32_t> blocks;
    std::vector<VertexId> cuts; // size = blocks.size() - 1
};

BlockChain block_chain(const UndirectedView& u, const BiconnectedDecomposition& bc,
                       VertexId s, VertexId t) {
    const std::uint32_t nblocks = static_cast<std::uint32_t>(bc.blocks.size());
    std::vector<std::vector<VertexId>> bverts(nblocks);
    std::vector<std::uint32_t> home_block(u.vertex_count(), kNone); // for non-cut vertices
    std::vector<VertexId> cut_list;
    std::vector<std::uint32_t> cut_index(u.vertex_count(), kNone);
    for (VertexId v = 0; v < u.vertex_count(); ++v) {
        if (bc.is_cut[v]) {
            cut_index[v] = static_cast<std::uint32_t>(cut_list.size());
            cut_list.push_back(v);
        }
    }
    // Tree nodes: [0, nblocks) blocks, [nblocks, ...) cut vertices.
    std::vector<std::vector<std::uint32_t>> adj(nblocks + cut_list.size());
    for (std::uint32_t b = 0; b < nblocks; ++b) {
        bverts[b] = block_vertices(u, bc.blocks[b]);
        for (VertexId v : bverts[b]) {
            if (bc.is_cut[v]) {
                adj[b].push_back(nblocks + cut_index[v]);
                adj[nblocks + cut_index[v]].push_back(b);
            } else {
                home_block[v] = b;
            }
        }
    }

    auto node_of = [&](VertexId v) -> std::uint32_t {
        if (bc.is_cut[v]) return nblocks + cut_index[v];
        if (home_block[v] == kNone) reject(ErrorCode::Disconnected, "terminal in no block");
        return home_block[v];
    };
    const std::uint32_t start = node_of(s);
    const std::uint32_t goal = node_of(t);

    std::vector<std::uint32_t> parent(adj.size(), kNone);
    std::deque<std::uint32_t> queue{start};
    parent[start] = start;
    while (!queue.empty()) {
        std::uint32_t x = queue.front();
        queue.pop_front();
        if (x == goal) break;
        for (std::uint32_t y : adj[x]) {
            if (parent[y] == kNone) {
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    if (parent[goal] == kNone) reject(ErrorCode::Disconnected, "terminals in different components");

    std::vector<std::uint32_t> path;
    for (std::uint32_t x = goal;; x = parent[x]) {
        path.push_back(x);
        if (x == parent[x]) break;
    }
    std::reverse(path.begin(), path.end());

    BlockChain chain;
    for (std::uint32_t node : path) {
        if (node < nblocks) {
            chain.blocks.push_back(node);
        } else if (!chain.blocks.empty()) {
            chain.cuts.push_back(cut_list[node - nblocks]);
        }
    }
    if (chain.cuts.size() >= chain.blocks.size() && !chain.cuts.empty()) chain.cuts.pop_back();
    assert(chain.cuts.size() + 1 == chain.blocks.size());
    return chain;
}

bool sink_reachable(const FlowNetwork& n) {
    std::vector<std::vector<VertexId>> out(n.g.vertex_count());
    for (const auto& e : n.g.edges) out[e.tail].push_back(e.head);
    std::vector<char> seen(n.g.vertex_count(), 0);
    std::deque<VertexId> queue{n.s};
    seen[n.s] = 1;
    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop_front();
        if (v == n.t) return true;
        for (VertexId w : out[v]) {
            if (!seen[w]) {
                seen[w] = 1;
                queue.push_back(w);
            }
        }
    }
    return false;
}

// ---------------------------------------------------------------------------
// Mutable working copy of one segment. Rotation rows list alive edges only,
// so degree == row size throughout.

struct MutNet {
    struct ME {
        VertexId tail = kNone;
        VertexId head = kNone;
        Rat cap;
        bool alive = false;
        EdgeId orig = kNone;
    };

    std::vector<ME> edges;
    std::vector<std::vector<EdgeId>> rot;
    std::vector<char> valive;
    std::vector<VertexId> orig_vertex; // local -> input id, kNone = fresh
    std::vector<std::uint32_t> local_of; // input id -> local, kNone = absent
    VertexId s = kNone;
    VertexId t = kNone;
    EdgeId witness = kNone;
    bool witness_flip = false;

    std::size_t deg(VertexId v) const { return rot[v].size(); }
    bool is_terminal(VertexId v) const { return v == s || v == t; }

    VertexId add_vertex() {
        rot.emplace_back();
        valive.push_back(1);
        orig_vertex.push_back(kNone);
        return static_cast<VertexId>(rot.size() - 1);
    }

    EdgeId add_edge(VertexId tail, VertexId head, Rat cap) {
        edges.push_back(ME{tail, head, std::move(cap), true, kNone});
        return static_cast<EdgeId>(edges.size() - 1);
    }

    void replace_in_rot(VertexId v, EdgeId from, EdgeId to) {
        auto it = std::find(rot[v].begin(), rot[v].end(), from);
        assert(it != rot[v].end());
        *it = to;
    }

    void erase_from_rot(VertexId v, EdgeId e) {
        auto it = std::find(rot[v].begin(), rot[v].end(), e);
        assert(it != rot[v].end());
        rot[v].erase(it);
    }
};

MutNet whole_network(const FlowNetwork& n) {
    MutNet m;
    m.edges.reserve(n.g.edge_count());
    for (EdgeId e = 0; e < n.g.edge_count(); ++e) {
        m.edges.push_back(MutNet::ME{n.g.edges[e].tail, n.g.edges[e].head, n.upper[e], true, e});
    }
    m.rot = n.g.rotation;
    m.valive.assign(n.g.vertex_count(), 1);
    m.orig_vertex.resize(n.g.vertex_count());
    std::iota(m.orig_vertex.begin(), m.orig_vertex.end(), 0u);
    m.local_of = m.orig_vertex;
    m.s = n.s;
    m.t = n.t;
    m.witness = n.g.outer_edge;
    m.witness_flip = n.g.outer_flip;
    return m;
}

// Restriction of the input to one block. Edges induced on the block's vertex
// set are exactly the block's edges (two blocks share at most one vertex).
// The witness is found by merging input faces across the deleted edges: the
// class holding the input outer face is the new outer region, and any kept
// dart bordering it will do. The input witness is preferred when it still
// qualifies, so extracting the whole network is the identity.
MutNet extract_block(const FlowNetwork& n, const UndirectedView& u, const FaceSet& fs,
                     const std::vector<VertexId>& verts, VertexId entry, VertexId exit) {
    MutNet m;
    m.local_of.assign(n.g.vertex_count(), kNone);
    for (std::uint32_t i = 0; i < verts.size(); ++i) m.local_of[verts[i]] = i;
    m.orig_vertex = verts;
    m.valive.assign(verts.size(), 1);

    std::vector<EdgeId> eloc(n.g.edge_count(), kNone);
    for (EdgeId e = 0; e < n.g.edge_count(); ++e) {
        VertexId a = m.local_of[n.g.edges[e].tail];
        VertexId b = m.local_of[n.g.edges[e].head];
        if (a == kNone || b == kNone) continue;
        eloc[e] = static_cast<EdgeId>(m.edges.size());
        m.edges.push_back(MutNet::ME{a, b, n.upper[e], true, e});
    }
    m.rot.resize(verts.size());
    for (std::uint32_t i = 0; i < verts.size(); ++i) {
        for (EdgeId e : n.g.rotation[verts[i]]) {
            if (eloc[e] != kNone) m.rot[i].push_back(eloc[e]);
        }
    }
    m.s = m.local_of[entry];
    m.t = m.local_of[exit];
    assert(m.s != kNone && m.t != kNone);

    Dsu region(fs.face_count());
    for (std::uint32_t ue = 0; ue < u.uedge_count(); ++ue) {
        const auto& edge = u.uedges[ue];
        if (m.local_of[edge.a] != kNone && m.local_of[edge.b] != kNone) continue;
        region.unite(fs.face_of_dart[make_dart(ue, true)], fs.face_of_dart[make_dart(ue, false)]);
    }
    const std::uint32_t outer = region.find(fs.outer);
    auto dart_of = [&](EdgeId e, bool flip) {
        std::uint32_t ue = u.uedge_of_edge[e];
        bool fwd = u.edge_is_forward[e];
        return make_dart(ue, flip ? !fwd : fwd);
    };
    auto on_outer = [&](EdgeId e, bool flip) {
        return eloc[e] != kNone && region.find(fs.face_of_dart[dart_of(e, flip)]) == outer;
    };

    if (on_outer(n.g.outer_edge, n.g.outer_flip)) {
        m.witness = eloc[n.g.outer_edge];
        m.witness_flip = n.g.outer_flip;
    } else {
        for (int flip = 0; flip < 2 && m.witness == kNone; ++flip) {
            for (EdgeId e = 0; e < n.g.edge_count(); ++e) {
                if (on_outer(e, flip != 0)) {
                    m.witness = eloc[e];
                    m.witness_flip = flip != 0;
                    break;
                }
            }
        }
    }
    assert(m.witness != kNone);
    return m;
}

// Degree-2 pass-through check: one edge in, one edge out. Anything else at a
// non-terminal degree-2 vertex has no flow through it in one direction and
// cannot be smoothed away.
void require_config_a(const MutNet& m, VertexId v) {
    bool in0 = m.edges[m.rot[v][0]].head == v;
    bool in1 = m.edges[m.rot[v][1]].head == v;
    if (in0 == in1) {
        reject(ErrorCode::ForbiddenConfig,
               "degree-2 vertex with two " + std::string(in0 ? "incoming" : "outgoing") + " edges");
    }
}

// Smooth a non-terminal degree-2 vertex: x -> v -> y becomes x -> y with the
// bottleneck capacity, reusing the incoming edge's id and the outgoing edge's
// rotation slot at y. A pre-existing parallel x -> y strand is folded in by
// adding capacities (the strands are interchangeable for flow). Returns the
// vertices whose degree dropped from such a fold.
std::vector<VertexId> apply_contract(MutNet& m, VertexId v) {
    assert(m.valive[v] && !m.is_terminal(v) && m.deg(v) == 2);
    require_config_a(m, v);
    EdgeId p = m.rot[v][0];
    EdgeId q = m.rot[v][1];
    EdgeId ein = m.edges[p].head == v ? p : q;
    EdgeId eout = ein == p ? q : p;
    VertexId x = m.edges[ein].tail;
    VertexId y = m.edges[eout].head;
    assert(x != v && y != v && x != y);

    m.edges[ein].head = y;
    m.edges[ein].cap = std::min(m.edges[ein].cap, m.edges[eout].cap);
    m.edges[eout].alive = false;
    m.replace_in_rot(y, eout, ein);
    m.rot[v].clear();
    m.valive[v] = 0;
    if (m.witness == eout) m.witness = ein; // same left faces along the corridor

    EdgeId dup = kNone;
    for (EdgeId e : m.rot[x]) {
        if (e != ein && m.edges[e].tail == x && m.edges[e].head == y) {
            dup = e;
            break;
        }
    }
    if (dup == kNone) return {};
    EdgeId keep = ein;
    if (dup == m.witness || (ein != m.witness && dup < ein)) keep = dup;
    EdgeId drop = keep == ein ? dup : ein;
    m.edges[keep].cap += m.edges[drop].cap;
    m.edges[drop].alive = false;
    m.erase_from_rot(x, drop);
    m.erase_from_rot(y, drop);
    return {x, y};
}

// Split an edge at a fresh vertex. The tail-side half keeps the id (and the
// witness role, if any); both halves keep the capacity. Returns the half
// incident to v and the other half.
struct SplitHalves {
    EdgeId near; // incident to the requested endpoint
    EdgeId far;
};

SplitHalves subdivide_toward(MutNet& m, EdgeId e, VertexId mid, VertexId v) {
    assert(m.edges[e].tail == v || m.edges[e].head == v);
    if (m.edges[e].head == v) {
        EdgeId half = m.add_edge(mid, v, m.edges[e].cap);
        m.edges[e].head = mid;
        return SplitHalves{half, e};
    }
    EdgeId half = m.add_edge(mid, m.edges[e].head, m.edges[e].cap);
    m.replace_in_rot(m.edges[e].head, e, half);
    m.edges[e].head = mid;
    return SplitHalves{e, half};
}

// Raise a degree-2 terminal to degree 3 without changing any flow: three
// fresh vertices in the corner clockwise after the lower-id incident edge,
// joined to the terminal and to midpoints of both incident edges by zero
// capacity edges.
void apply_gadget(MutNet& m, VertexId w) {
    assert(m.valive[w] && m.is_terminal(w));
    if (m.deg(w) != 2) reject(ErrorCode::DegreeTooSmall, "gadget needs a degree-2 terminal");
    EdgeId ea = std::min(m.rot[w][0], m.rot[w][1]);
    EdgeId eb = std::max(m.rot[w][0], m.rot[w][1]);

    VertexId v1 = m.add_vertex();
    VertexId v2 = m.add_vertex();
    VertexId v3 = m.add_vertex();
    SplitHalves ha = subdivide_toward(m, ea, v2, w);
    SplitHalves hb = subdivide_toward(m, eb, v3, w);
    EdgeId gs = m.add_edge(v1, w, Rat(0));
    EdgeId g2 = m.add_edge(v1, v2, Rat(0));
    EdgeId g3 = m.add_edge(v1, v3, Rat(0));

    // The gadget opens the corner swept clockwise from ea to eb. That corner
    // is the face left of the dart arriving via ea (equally: leaving via eb).
    // If the witness designates that face through a dart of the half that
    // keeps the edge id next to the terminal, the id-keeping half now borders
    // a gadget triangle instead; the far half still borders the old face.
    if (m.witness == ea && ha.near == ea && m.witness_flip) m.witness = ha.far;
    if (m.witness == eb && hb.near == eb && !m.witness_flip) m.witness = hb.far;

    m.rot[w] = {ha.near, gs, hb.near};
    m.rot[v1] = {g3, gs, g2};
    m.rot[v2] = {ha.far, g2, ha.near};
    m.rot[v3] = {hb.near, g3, hb.far};
}

Segment compact(const MutNet& m) {
    Segment seg;
    std::vector<VertexId> vdense(m.rot.size(), kNone);
    for (VertexId v = 0; v < m.rot.size(); ++v) {
        if (!m.valive[v]) continue;
        vdense[v] = static_cast<VertexId>(seg.orig_vertex.size());
        seg.orig_vertex.push_back(m.orig_vertex[v]);
    }
    std::vector<EdgeId> edense(m.edges.size(), kNone);
    std::vector<PlaneDiGraph::Edge> edges;
    for (EdgeId e = 0; e < m.edges.size(); ++e) {
        if (!m.edges[e].alive) continue;
        edense[e] = static_cast<EdgeId>(edges.size());
        edges.push_back(PlaneDiGraph::Edge{vdense[m.edges[e].tail], vdense[m.edges[e].head]});
        seg.orig_edge.push_back(m.edges[e].orig);
        seg.net.upper.push_back(m.edges[e].cap);
    }
    std::vector<std::vector<EdgeId>> rotation(seg.orig_vertex.size());
    for (VertexId v = 0; v < m.rot.size(); ++v) {
        if (!m.valive[v]) continue;
        auto& row = rotation[vdense[v]];
        row.reserve(m.rot[v].size());
        for (EdgeId e : m.rot[v]) row.push_back(edense[e]);
    }
    assert(m.witness != kNone && edense[m.witness] != kNone);
    seg.net.g = build_plane_graph(std::move(edges), std::move(rotation), edense[m.witness],
                                  m.witness_flip);
    seg.net.s = vdense[m.s];
    seg.net.t = vdense[m.t];

    if (seg.orig_vertex.size() == 2) {
        seg.degenerate = true;
        seg.direct_value = 0;
        for (EdgeId e = 0; e < seg.net.g.edge_count(); ++e) {
            if (seg.net.g.edges[e].tail == seg.net.s && seg.net.g.edges[e].head == seg.net.t) {
                seg.direct_value += seg.net.upper[e];
            }
        }
    }
    return seg;
}

std::size_t alive_vertex_count(const MutNet& m) {
    return static_cast<std::size_t>(std::count(m.valive.begin(), m.valive.end(), 1));
}

// Smooth every non-terminal degree-2 vertex, cascading through the folds.
// Decisions land in the report when one is supplied; queue order is
// deterministic either way.
void run_contractions(MutNet& m, NormalizationReport* report, int segment) {
    std::deque<VertexId> queue;
    auto enqueue = [&](VertexId v) {
        if (m.valive[v] && !m.is_terminal(v) && m.deg(v) == 2) {
            require_config_a(m, v);
            queue.push_back(v);
        }
    };
    for (VertexId v = 0; v < m.rot.size(); ++v) enqueue(v);
    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop_front();
        if (!m.valive[v] || m.is_terminal(v) || m.deg(v) != 2) continue;
        if (report) {
            NormalizeAction act;
            act.kind = NormalizeAction::Kind::Contract;
            act.segment = segment;
            act.a = m.orig_vertex[v];
            report->actions.push_back(std::move(act));
        }
        for (VertexId x : apply_contract(m, v)) enqueue(x);
    }
}

void run_gadgets(MutNet& m, NormalizationReport* report, int segment) {
    for (VertexId w : {m.s, m.t}) {
        if (m.deg(w) != 2) continue;
        if (report) {
            NormalizeAction act;
            act.kind = NormalizeAction::Kind::Gadget;
            act.segment = segment;
            act.a = m.orig_vertex[w];
            report->actions.push_back(std::move(act));
        }
        apply_gadget(m, w);
    }
}

void check_segment_invariants(const Segment& seg) {
    if (seg.degenerate) return;
    for (const auto& row : seg.net.g.rotation) {
        if (row.size() < 3) reject(ErrorCode::DegreeTooSmall, "normalize left a low degree vertex");
    }
    UndirectedView u = undirect(seg.net.g);
    if (biconnected_components(u).blocks.size() != 1) {
        reject(ErrorCode::Disconnected, "normalize left a separable segment");
    }
}

} // namespace

BiconnectedDecomposition biconnected_components(const UndirectedView& u) {
    const std::size_t n = u.vertex_count();
    BiconnectedDecomposition out;
    out.is_cut.assign(n, 0);

    std::vector<std::uint32_t> disc(n, kNone);
    std::vector<std::uint32_t> low(n, 0);
    std::vector<std::uint32_t> estack;
    std::uint32_t timer = 0;

    struct Frame {
        VertexId v;
        std::uint32_t parent_ue;
        std::uint32_t it;
        std::uint32_t children;
    };

    std::vector<Frame> stack;
    for (VertexId root = 0; root < n; ++root) {
        if (disc[root] != kNone || u.rotation[root].empty()) continue;
        disc[root] = low[root] = timer++;
        stack.push_back(Frame{root, kNone, 0, 0});
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.it < u.rotation[f.v].size()) {
                std::uint32_t ue = u.rotation[f.v][f.it++];
                if (ue == f.parent_ue) continue;
                VertexId w = u.other(ue, f.v);
                if (disc[w] == kNone) {
                    estack.push_back(ue);
                    disc[w] = low[w] = timer++;
                    stack.push_back(Frame{w, ue, 0, 0});
                } else if (disc[w] < disc[f.v]) {
                    estack.push_back(ue);
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
            } else {
                Frame done = f;
                stack.pop_back();
                if (stack.empty()) {
                    if (done.children >= 2) out.is_cut[done.v] = 1;
                    continue;
                }
                Frame& p = stack.back();
                ++p.children;
                low[p.v] = std::min(low[p.v], low[done.v]);
                if (low[done.v] >= disc[p.v]) {
                    std::vector<std::uint32_t> block;
                    while (true) {
                        std::uint32_t e = estack.back();
                        estack.pop_back();
                        block.push_back(e);
                        if (e == done.parent_ue) break;
                    }
                    std::reverse(block.begin(), block.end());
                    out.blocks.push_back(std::move(block));
                    if (stack.size() >= 2) out.is_cut[p.v] = 1;
                }
            }
        }
    }
    assert(estack.empty());
    return out;
}

Normalized normalize(const FlowNetwork& n) {
    validate_network(n);
    if (!sink_reachable(n)) reject(ErrorCode::NoPath, "sink unreachable from source");

    UndirectedView u = undirect(n.g);
    FaceSet fs = trace_faces(u, n.g);
    BiconnectedDecomposition bc = biconnected_components(u);
    BlockChain chain = block_chain(u, bc, n.s, n.t);

    Normalized out;
    for (std::uint32_t i = 0; i < chain.blocks.size(); ++i) {
        std::vector<VertexId> verts = block_vertices(u, bc.blocks[chain.blocks[i]]);
        VertexId entry = i == 0 ? n.s : chain.cuts[i - 1];
        VertexId exit = i + 1 == chain.blocks.size() ? n.t : chain.cuts[i];

        NormalizeAction act;
        act.kind = NormalizeAction::Kind::SelectBlock;
        act.segment = static_cast<int>(i);
        act.vertices = verts;
        act.a = entry;
        act.b = exit;
        out.report.actions.push_back(std::move(act));

        MutNet m = extract_block(n, u, fs, verts, entry, exit);
        run_contractions(m, &out.report, static_cast<int>(i));
        if (alive_vertex_count(m) > 2) run_gadgets(m, &out.report, static_cast<int>(i));
        Segment seg = compact(m);
        check_segment_invariants(seg);
        out.segments.push_back(std::move(seg));
    }
    return out;
}

std::vector<Segment> replay(const FlowNetwork& n, const NormalizationReport& report) {
    validate_network(n);
    UndirectedView u = undirect(n.g);
    FaceSet fs = trace_faces(u, n.g);

    std::vector<Segment> segments;
    MutNet m;
    bool open = false;
    auto close = [&]() {
        if (open) segments.push_back(compact(m));
        open = false;
    };
    for (const NormalizeAction& act : report.actions) {
        switch (act.kind) {
            case NormalizeAction::Kind::SelectBlock:
                close();
                m = extract_block(n, u, fs, act.vertices, act.a, act.b);
                open = true;
                break;
            case NormalizeAction::Kind::Contract:
                apply_contract(m, m.local_of[act.a]);
                break;
            case NormalizeAction::Kind::Gadget:
                apply_gadget(m, m.local_of[act.a]);
                break;
        }
    }
    close();
    return segments;
}

Rat combine_segment_values(const std::vector<Rat>& values) {
    if (values.empty()) reject(ErrorCode::InvalidParams, "no segment values");
    return *std::min_element(values.begin(), values.end());
}

FlowNetwork contract_degree2(const FlowNetwork& n) {
    validate_network(n);
    MutNet m = whole_network(n);
    run_contractions(m, nullptr, -1);
    return compact(m).net;
}

FlowNetwork fix_terminal_degrees(const FlowNetwork& n) {
    validate_network(n);
    MutNet m = whole_network(n);
    for (VertexId w : {m.s, m.t}) {
        if (m.deg(w) < 2) reject(ErrorCode::DegreeTooSmall, "terminal of degree below 2");
        if (m.deg(w) == 2) apply_gadget(m, w);
    }
    return compact(m).net;
}

} // namespace planeflow
