#include "planeflow/reassembling.hpp"

#include <algorithm>
#include <cassert>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "planeflow/error.hpp"
#include "planeflow/faces.hpp"
#include "planeflow/outerplanarity.hpp"
#include "planeflow/rational.hpp"

namespace planeflow {
namespace {

Rat frac(std::size_t p, std::size_t q) {
    Rat r(static_cast<unsigned long>(p), static_cast<unsigned long>(q));
    r.canonicalize();
    return r;
}

// Exact angle in [0,1) per vertex, assigned walk by walk in peel order. The
// round-one walk is spread uniformly; a later walk interpolates each run of
// unassigned vertices between the two assigned anchors enclosing it, wrapping
// cyclically. In a connected graph every later walk touches at least one
// vertex exposed by an earlier round, so the anchorless fallback (a fresh
// uniform spread) never fires on pipeline inputs; it is kept for hand-built
// trees of walks.
std::vector<Rat> sweep_angles(const UndirectedView& u, const EdgePeel& peel, std::size_t n) {
    std::vector<Rat> angle(n, Rat(0));
    std::vector<char> has(n, 0);
    std::vector<VertexId> vs;
    std::vector<std::size_t> anchors;
    for (const auto& round : peel.walks) {
        for (const auto& walk : round) {
            const std::size_t len = walk.size();
            vs.clear();
            anchors.clear();
            for (std::size_t j = 0; j < len; ++j) vs.push_back(dart_from(u, walk[j]));
            for (std::size_t j = 0; j < len; ++j)
                if (has[vs[j]]) anchors.push_back(j);
            if (anchors.empty()) {
                for (std::size_t j = 0; j < len; ++j) {
                    if (!has[vs[j]]) {
                        angle[vs[j]] = frac(j, len);
                        has[vs[j]] = 1;
                    }
                }
                continue;
            }
            const std::size_t t = anchors.size();
            for (std::size_t p = 0; p < t; ++p) {
                const std::size_t i0 = anchors[p];
                const std::size_t i1 = anchors[(p + 1) % t];
                const std::size_t gap = (i1 + len - i0 - 1) % len;
                if (gap == 0) continue;
                const Rat a = angle[vs[i0]];
                Rat span = angle[vs[i1]] - a;
                if (span <= 0) span += 1; // wrap; a lone anchor spans the full circle
                for (std::size_t q = 1; q <= gap; ++q) {
                    const VertexId v = vs[(i0 + q) % len];
                    if (has[v]) continue;
                    Rat theta = a + span * frac(q, gap + 1);
                    if (theta >= 1) theta -= 1;
                    angle[v] = theta;
                    has[v] = 1;
                }
            }
        }
    }
    for (std::size_t v = 0; v < n; ++v) {
        (void)v;
        assert(has[v]); // every vertex lies on the walk of its first exposed round
    }
    return angle;
}

// Cyclic distance between two angles in [0,1).
Rat arc_dist(const Rat& x, const Rat& y) {
    Rat d = x < y ? y - x : x - y;
    Rat w = 1 - d;
    return d < w ? d : w;
}

std::size_t symdiff_size(const std::vector<EdgeId>& a, const std::vector<EdgeId>& b) {
    std::size_t i = 0, j = 0, out = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) {
            ++i;
            ++out;
        } else if (b[j] < a[i]) {
            ++j;
            ++out;
        } else {
            ++i;
            ++j;
        }
    }
    return out + (a.size() - i) + (b.size() - j);
}

} // namespace

Reassembling build_reassembling(const PlaneDiGraph& g) {
    const std::size_t n = g.rotation.size();
    if (n == 0) reject(ErrorCode::InvalidParams, "reassembling of an empty graph");
    const UndirectedView u = undirect(g);
    for (VertexId v = 0; v < n; ++v) {
        const std::size_t deg = u.rotation[v].size();
        if (deg < 2 || deg > 3)
            reject(ErrorCode::NotCubic,
                   "vertex " + std::to_string(v) + " has degree " + std::to_string(deg));
    }
    {
        std::vector<char> seen(n, 0);
        std::vector<VertexId> stack{0};
        seen[0] = 1;
        std::size_t cnt = 0;
        while (!stack.empty()) {
            const VertexId v = stack.back();
            stack.pop_back();
            ++cnt;
            for (const std::uint32_t ue : u.rotation[v]) {
                const VertexId w = u.other(ue, v);
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        if (cnt != n) reject(ErrorCode::Disconnected, "graph is not connected");
    }
    const FaceSet fs = trace_faces(u, g);
    if (n + fs.face_count() != u.uedge_count() + 2)
        reject(ErrorCode::NotPlane, "embedding violates Euler's relation");

    const EdgePeel ep = peel_edges(u, fs);
    const std::vector<Rat> angle = sweep_angles(u, ep, n);

    // Face depth: breadth-first over the dual from the outer face. An edge
    // whose two sides sit at equal depth runs radially (a spoke lies between
    // two annulus faces of the same ring; a circumferential edge separates
    // two depths). Vertices joined by radial edges form one group, so an
    // expanded vertex's cycle travels with its attachment instead of being
    // crossed one hop at a time.
    std::vector<std::size_t> gid(n);
    std::size_t gcount = 0;
    {
        std::vector<std::size_t> fdepth(fs.face_count(), ~std::size_t{0});
        std::vector<FaceId> fqueue{fs.outer};
        fdepth[fs.outer] = 0;
        for (std::size_t head = 0; head < fqueue.size(); ++head) {
            const FaceId f = fqueue[head];
            for (const Dart d : fs.faces[f]) {
                const FaceId across = fs.face_of_dart[d ^ 1u];
                if (fdepth[across] == ~std::size_t{0}) {
                    fdepth[across] = fdepth[f] + 1;
                    fqueue.push_back(across);
                }
            }
        }
        std::vector<char> radial(u.uedge_count(), 0);
        for (std::uint32_t ue = 0; ue < u.uedge_count(); ++ue)
            radial[ue] = fdepth[fs.face_of_dart[2 * ue]] == fdepth[fs.face_of_dart[2 * ue + 1]];
        std::vector<std::size_t> comp(n, ~std::size_t{0});
        std::vector<VertexId> stack;
        for (VertexId v = 0; v < n; ++v) {
            if (comp[v] != ~std::size_t{0}) continue;
            comp[v] = gcount;
            stack.push_back(v);
            while (!stack.empty()) {
                const VertexId x = stack.back();
                stack.pop_back();
                for (const std::uint32_t ue : u.rotation[x]) {
                    const VertexId w = u.other(ue, x);
                    if (radial[ue] && comp[w] == ~std::size_t{0}) {
                        comp[w] = gcount;
                        stack.push_back(w);
                    }
                }
            }
            ++gcount;
        }
        gid = std::move(comp);
    }
    std::vector<std::vector<VertexId>> members(gcount);
    for (VertexId v = 0; v < n; ++v) members[gid[v]].push_back(v);
    std::vector<Rat> qangle(gcount);
    for (std::size_t q = 0; q < gcount; ++q) {
        qangle[q] = angle[members[q][0]];
        for (const VertexId v : members[q])
            if (angle[v] < qangle[q]) qangle[q] = angle[v];
    }
    std::vector<std::vector<std::size_t>> qadj(gcount);
    for (std::uint32_t ue = 0; ue < u.uedge_count(); ++ue) {
        const std::size_t a = gid[u.uedges[ue].a];
        const std::size_t b = gid[u.uedges[ue].b];
        if (a != b) {
            qadj[a].push_back(b);
            qadj[b].push_back(a);
        }
    }
    for (auto& row : qadj) {
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
    }

    // Radial fibers: BFS over the quotient graph from the outer-face walk.
    // Every group hangs below the nearest-angle group one BFS level closer
    // to the outer walk; a fiber is one tree of this forest, rooted on the
    // walk. Grouping a fiber into its own subtree keeps its edges interior,
    // so the accumulated prefixes of the angular sweep only cut
    // circumferential edges near the two bounding rays. A plain vertex
    // caterpillar cannot achieve the 2k target: in a triangle-free cubic
    // graph every 3-vertex prefix already has boundary 5.
    std::vector<std::size_t> qdist(gcount, ~std::size_t{0});
    std::vector<char> on_walk(n, 0);
    {
        std::vector<std::size_t> queue;
        for (const auto& walk : ep.walks[0]) {
            for (const auto d : walk) {
                const VertexId v = dart_from(u, d);
                on_walk[v] = 1;
                if (qdist[gid[v]] != 0) {
                    qdist[gid[v]] = 0;
                    queue.push_back(gid[v]);
                }
            }
        }
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const std::size_t q = queue[head];
            for (const std::size_t w : qadj[q]) {
                if (qdist[w] == ~std::size_t{0}) {
                    qdist[w] = qdist[q] + 1;
                    queue.push_back(w);
                }
            }
        }
    }
    // Parent of a group: a one-level-closer neighbor reached through a pivot,
    // a single parent vertex carrying at least two connecting edges. A column
    // continues through such pivots (the vertex above a cell keeps both cycle
    // edges into the cell's lower half), while a stray ring edge into the
    // neighboring column has no pivot. A group with no pivoted parent is the
    // stump of a column whose upward edge the input lacks; gluing it into a
    // side fiber would hold that fiber's far flank open, so it roots a fiber
    // of its own and the fusion pass absorbs it once a flank neighbor is
    // consumed. Angle breaks ties.
    std::vector<std::size_t> qpar(gcount, ~std::size_t{0});
    std::vector<VertexId> touch;
    for (std::size_t q = 0; q < gcount; ++q) {
        if (qdist[q] == 0) continue;
        std::size_t best = ~std::size_t{0};
        std::size_t best_pivot = 0;
        Rat best_dist;
        for (const std::size_t w : qadj[q]) {
            if (qdist[w] + 1 != qdist[q]) continue;
            touch.clear();
            for (const VertexId v : members[q])
                for (const std::uint32_t ue : u.rotation[v])
                    if (gid[u.other(ue, v)] == w) touch.push_back(u.other(ue, v));
            std::sort(touch.begin(), touch.end());
            std::size_t pivot = 0;
            for (std::size_t i = 0; i < touch.size();) {
                std::size_t j = i;
                while (j < touch.size() && touch[j] == touch[i]) ++j;
                pivot = std::max(pivot, j - i);
                i = j;
            }
            if (pivot < 2) continue;
            const Rat d = arc_dist(qangle[q], qangle[w]);
            if (best == ~std::size_t{0} || pivot > best_pivot ||
                (pivot == best_pivot && (d < best_dist || (d == best_dist && w < best)))) {
                best = w;
                best_pivot = pivot;
                best_dist = d;
            }
        }
        qpar[q] = best;
    }
    if (std::getenv("PF_DEBUG")) {
        for (std::size_t q = 0; q < gcount; ++q) {
            std::ostringstream os;
            os << "group " << q << " d=" << qdist[q] << " par=";
            if (qpar[q] == ~std::size_t{0})
                os << "-";
            else
                os << qpar[q];
            os << " members:";
            for (const VertexId v : members[q]) os << " " << v;
            std::fprintf(stderr, "%s\n", os.str().c_str());
        }
    }
    std::vector<std::size_t> qroot(gcount);
    for (std::size_t q = 0; q < gcount; ++q) {
        std::size_t r = q;
        while (qpar[r] != ~std::size_t{0}) r = qpar[r];
        qroot[q] = r;
    }

    // Fiber assembly order: fibers by their root's angle, groups inside a
    // fiber by BFS depth outward-in. Member order is decided greedily while
    // the fold runs, see below.
    std::vector<std::size_t> wroots;
    for (std::size_t q = 0; q < gcount; ++q)
        if (qroot[q] == q) wroots.push_back(q);
    std::sort(wroots.begin(), wroots.end(), [&](std::size_t x, std::size_t y) {
        if (qangle[x] != qangle[y]) return qangle[x] < qangle[y];
        return x < y;
    });
    std::vector<std::vector<std::size_t>> fiber(gcount);
    for (std::size_t q = 0; q < gcount; ++q) fiber[qroot[q]].push_back(q);
    for (const std::size_t r : wroots) {
        std::sort(fiber[r].begin(), fiber[r].end(), [&](std::size_t x, std::size_t y) {
            if (qdist[x] != qdist[y]) return qdist[x] < qdist[y];
            if (qangle[x] != qangle[y]) return qangle[x] < qangle[y];
            return x < y;
        });
    }

    std::vector<std::vector<EdgeId>> inc(n);
    for (EdgeId e = 0; e < g.edges.size(); ++e) {
        inc[g.edges[e].tail].push_back(e);
        inc[g.edges[e].head].push_back(e);
    }

    Reassembling out;
    out.nodes.reserve(2 * n - 1);
    const auto leaf = [&](VertexId v) {
        Reassembling::Node nd;
        nd.vertex = v;
        nd.boundary = inc[v];
        out.nodes.push_back(std::move(nd));
        return static_cast<int>(out.nodes.size()) - 1;
    };
    const auto join = [&](int l, int r) {
        Reassembling::Node nd;
        nd.left = l;
        nd.right = r;
        std::set_symmetric_difference(out.nodes[l].boundary.begin(), out.nodes[l].boundary.end(),
                                      out.nodes[r].boundary.begin(), out.nodes[r].boundary.end(),
                                      std::back_inserter(nd.boundary));
        out.nodes.push_back(std::move(nd));
        return static_cast<int>(out.nodes.size()) - 1;
    };

    // A fiber folds its groups left to right, each group first assembled as
    // its own standalone subtree: the join then cancels every edge between
    // the group and the fiber prefix at once, where feeding leaves into one
    // long caterpillar would hold the far flank open. Inside a group the
    // next member is the one gluing the most edges onto the part built so
    // far (connected growth, seeded on the outer walk for root groups and on
    // the parent attachment otherwise): a hub is consumed as soon as it
    // touches the part instead of dangling all its edges behind its tips.
    // Ties fall back to the angular sweep, as do members a degenerate
    // grouping leaves detached.
    std::vector<int> mark(n, 0);
    int epoch = 0;
    std::vector<int> cols;
    std::vector<VertexId> pool;
    for (const std::size_t r : wroots) {
        int col = -1;
        for (const std::size_t q : fiber[r]) {
            ++epoch;
            pool.assign(members[q].begin(), members[q].end());
            int sub = -1;
            while (!pool.empty()) {
                std::size_t pick = pool.size();
                std::size_t pick_glue = 0;
                for (std::size_t c = 0; c < pool.size(); ++c) {
                    const VertexId v = pool[c];
                    std::size_t glue = 0;
                    for (const std::uint32_t ue : u.rotation[v])
                        glue += mark[u.other(ue, v)] == epoch;
                    bool eligible;
                    if (sub >= 0) {
                        eligible = glue > 0;
                    } else if (qdist[q] == 0) {
                        eligible = on_walk[v];
                    } else {
                        eligible = false;
                        for (const std::uint32_t ue : u.rotation[v])
                            if (gid[u.other(ue, v)] == qpar[q]) {
                                eligible = true;
                                break;
                            }
                    }
                    if (!eligible) continue;
                    if (pick == pool.size() || glue > pick_glue ||
                        (glue == pick_glue &&
                         (angle[v] < angle[pool[pick]] ||
                          (angle[v] == angle[pool[pick]] && v < pool[pick])))) {
                        pick = c;
                        pick_glue = glue;
                    }
                }
                if (pick == pool.size()) {
                    for (std::size_t c = 0; c < pool.size(); ++c) {
                        const VertexId v = pool[c];
                        if (pick == pool.size() || angle[v] < angle[pool[pick]] ||
                            (angle[v] == angle[pool[pick]] && v < pool[pick]))
                            pick = c;
                    }
                }
                const VertexId v = pool[pick];
                pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
                mark[v] = epoch;
                const int lf = leaf(v);
                sub = sub < 0 ? lf : join(sub, lf);
            }
            col = col < 0 ? sub : join(col, sub);
        }
        cols.push_back(col);
    }

    // Second pass: fuse angle-adjacent fibers into a unit while the union's
    // boundary stays within the wider part. This can only shrink the measure
    // (every unit node is bounded by its parts, and the outer accumulation
    // runs over the same angular prefixes), and it absorbs structures that
    // straddle a single angle, e.g. a deep vertex fanning out to an arc of
    // outer ones: its tips would otherwise dangle cut edges one by one.
    std::vector<int> units;
    int unit = cols[0];
    for (std::size_t c = 1; c < cols.size(); ++c) {
        const std::size_t fused =
            symdiff_size(out.nodes[unit].boundary, out.nodes[cols[c]].boundary);
        if (fused <= std::max(out.nodes[unit].boundary.size(),
                              out.nodes[cols[c]].boundary.size())) {
            unit = join(unit, cols[c]);
        } else {
            units.push_back(unit);
            unit = cols[c];
        }
    }
    units.push_back(unit);

    if (std::getenv("PF_DEBUG")) {
        std::ostringstream os;
        os << "cols:";
        for (const int c : cols) os << " " << out.nodes[c].boundary.size();
        os << "\nunits:";
        for (const int p : units) os << " " << out.nodes[p].boundary.size();
        std::fprintf(stderr, "%s\n", os.str().c_str());
    }

    // Final accumulation by accretion: always take the unit whose join keeps
    // the running boundary smallest, falling back to angular order on ties.
    // A unit flanked by consumed neighbors cancels both flanks at once; a
    // plain angular fold would instead reopen a cut for every island left
    // over from a column the input truncates.
    std::vector<char> used(units.size(), 0);
    int acc = units[0];
    used[0] = 1;
    for (std::size_t step = 1; step < units.size(); ++step) {
        std::size_t pick = units.size();
        std::size_t pick_size = 0;
        for (std::size_t p = 0; p < units.size(); ++p) {
            if (used[p]) continue;
            const std::size_t fused =
                symdiff_size(out.nodes[acc].boundary, out.nodes[units[p]].boundary);
            if (pick == units.size() || fused < pick_size) {
                pick = p;
                pick_size = fused;
            }
        }
        used[pick] = 1;
        acc = join(acc, units[pick]);
    }
    out.root = acc;
    assert(out.nodes.size() == 2 * n - 1);
    assert(out.nodes[out.root].boundary.empty());
    return out;
}

AlphaMeasure alpha_measure(const PlaneDiGraph& g, const Reassembling& b) {
    const std::size_t n = g.rotation.size();
    const std::size_t total = b.nodes.size();
    if (n == 0 || total != 2 * n - 1)
        reject(ErrorCode::InvalidTree, "tree must have exactly 2n-1 nodes");
    if (b.root < 0 || static_cast<std::size_t>(b.root) >= total)
        reject(ErrorCode::InvalidTree, "root id out of range");

    std::vector<int> parent(total, -1);
    std::vector<char> is_leaf(total, 0);
    for (std::size_t i = 0; i < total; ++i) {
        const auto& nd = b.nodes[i];
        if (nd.left < 0 && nd.right < 0) {
            if (nd.vertex >= n) reject(ErrorCode::InvalidTree, "leaf vertex out of range");
            is_leaf[i] = 1;
            continue;
        }
        if (nd.left < 0 || nd.right < 0 || static_cast<std::size_t>(nd.left) >= total ||
            static_cast<std::size_t>(nd.right) >= total || nd.left == nd.right)
            reject(ErrorCode::InvalidTree, "malformed child links");
        for (const int c : {nd.left, nd.right}) {
            if (parent[c] != -1) reject(ErrorCode::InvalidTree, "node has two parents");
            parent[c] = static_cast<int>(i);
        }
    }
    if (parent[b.root] != -1) reject(ErrorCode::InvalidTree, "root has a parent");
    for (std::size_t i = 0; i < total; ++i)
        if (static_cast<int>(i) != b.root && parent[i] == -1)
            reject(ErrorCode::InvalidTree, "node detached from the root");

    std::vector<std::vector<EdgeId>> inc(n);
    for (EdgeId e = 0; e < g.edges.size(); ++e) {
        inc[g.edges[e].tail].push_back(e);
        inc[g.edges[e].head].push_back(e);
    }

    // Post-order recomputation; every cached boundary must match.
    std::vector<char> seen_vertex(n, 0);
    std::vector<std::vector<EdgeId>> bset(total);
    std::vector<char> done(total, 0);
    std::vector<std::pair<int, bool>> stack{{b.root, false}};
    std::size_t visited = 0;
    while (!stack.empty()) {
        const auto [id, expanded] = stack.back();
        stack.pop_back();
        const auto& nd = b.nodes[static_cast<std::size_t>(id)];
        if (!expanded) {
            if (done[id]) reject(ErrorCode::InvalidTree, "node reached twice");
            done[id] = 1;
            ++visited;
            if (is_leaf[id]) {
                if (seen_vertex[nd.vertex])
                    reject(ErrorCode::InvalidTree, "vertex appears in two leaves");
                seen_vertex[nd.vertex] = 1;
                bset[id] = inc[nd.vertex];
            } else {
                stack.push_back({id, true});
                stack.push_back({nd.left, false});
                stack.push_back({nd.right, false});
            }
            continue;
        }
        std::set_symmetric_difference(bset[nd.left].begin(), bset[nd.left].end(),
                                      bset[nd.right].begin(), bset[nd.right].end(),
                                      std::back_inserter(bset[id]));
    }
    if (visited != total) reject(ErrorCode::InvalidTree, "unreachable nodes");
    for (std::size_t v = 0; v < n; ++v)
        if (!seen_vertex[v]) reject(ErrorCode::InvalidTree, "vertex missing from the leaves");
    for (std::size_t i = 0; i < total; ++i)
        if (bset[i] != b.nodes[i].boundary)
            reject(ErrorCode::InvalidTree, "cached boundary disagrees with recomputation");

    AlphaMeasure out;
    for (std::size_t i = 0; i < total; ++i) {
        if (bset[i].size() > out.alpha) {
            out.alpha = bset[i].size();
            out.argmax_node = static_cast<int>(i);
        }
    }
    return out;
}

std::string export_tree(const Reassembling& b) {
    std::ostringstream os;
    if (b.root < 0 || b.nodes.empty()) return os.str();
    const std::size_t total = b.nodes.size();
    std::vector<std::vector<VertexId>> vset(total);
    // Debug-scale export: vertex sets are materialized per node.
    for (std::size_t i = 0; i < total; ++i) {
        if (b.nodes[i].left < 0) vset[i] = {b.nodes[i].vertex};
    }
    std::vector<int> stack{b.root};
    while (!stack.empty()) {
        const int id = stack.back();
        stack.pop_back();
        const auto& nd = b.nodes[static_cast<std::size_t>(id)];
        if (nd.left < 0) continue;
        if (vset[id].empty() && (vset[nd.left].empty() || vset[nd.right].empty())) {
            stack.push_back(id);
            stack.push_back(nd.right);
            stack.push_back(nd.left);
            continue;
        }
        if (vset[id].empty()) {
            std::merge(vset[nd.left].begin(), vset[nd.left].end(), vset[nd.right].begin(),
                       vset[nd.right].end(), std::back_inserter(vset[id]));
        }
    }
    std::vector<std::pair<int, int>> pre{{b.root, 0}};
    while (!pre.empty()) {
        const auto [id, depth] = pre.back();
        pre.pop_back();
        const auto& nd = b.nodes[static_cast<std::size_t>(id)];
        for (int d = 0; d < depth; ++d) os << "  ";
        os << "node " << id << ": vertices {";
        for (std::size_t p = 0; p < vset[id].size(); ++p)
            os << (p ? " " : "") << vset[id][p];
        os << "} boundary " << nd.boundary.size() << "\n";
        if (nd.left >= 0) {
            pre.push_back({nd.right, depth + 1});
            pre.push_back({nd.left, depth + 1});
        }
    }
    return os.str();
}

} // namespace planeflow
