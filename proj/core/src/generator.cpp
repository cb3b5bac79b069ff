#include "planeflow/generator.hpp"

#include <algorithm>
#include <random>
#include <vector>

#include "planeflow/error.hpp"
#include "planeflow/transform.hpp"

namespace planeflow {
namespace {

std::uint64_t mix_seed(GenFamily f, int k, int ell, std::uint64_t seed) {
    std::uint64_t x = seed;
    x ^= static_cast<std::uint64_t>(k) * 0x9E3779B97F4A7C15ull;
    x ^= static_cast<std::uint64_t>(ell) * 0xC2B2AE3D27D4EB4Full;
    x ^= static_cast<std::uint64_t>(f) + 0xD6E8FEB86659FD93ull;
    return x;
}

Rat draw_cap(std::mt19937_64& eng) {
    const unsigned num = static_cast<unsigned>(eng() % 13);
    const unsigned den = 1u << (eng() % 4);
    Rat r(num, den);
    r.canonicalize();
    return r;
}

} // namespace

GenFamily parse_family(const std::string& name) {
    if (name == "nested-cycles") return GenFamily::NestedCycles;
    if (name == "nested-prisms") return GenFamily::NestedPrisms;
    if (name == "random-cubic-plane") return GenFamily::RandomCubicPlane;
    reject(ErrorCode::InvalidParams, "unknown family '" + name + "'");
}

const char* family_name(GenFamily f) {
    switch (f) {
        case GenFamily::NestedCycles: return "nested-cycles";
        case GenFamily::NestedPrisms: return "nested-prisms";
        case GenFamily::RandomCubicPlane: return "random-cubic-plane";
    }
    return "?";
}

PfnFile generate_instance(GenFamily family, int k, int ell, std::uint64_t seed) {
    if (k < 1 || ell < 3) reject(ErrorCode::InvalidParams, "need k >= 1 and ell >= 3");
    std::size_t rings = 0;
    switch (family) {
        case GenFamily::NestedCycles: rings = static_cast<std::size_t>(std::max(2, k)); break;
        case GenFamily::NestedPrisms: rings = 2u * static_cast<std::size_t>(k); break;
        case GenFamily::RandomCubicPlane: rings = static_cast<std::size_t>(k) + 1; break;
    }
    const std::size_t l = static_cast<std::size_t>(ell);
    if (rings * l > 5'000'000) reject(ErrorCode::InvalidParams, "instance would be too large");
    std::mt19937_64 eng(mix_seed(family, k, ell, seed));
    const bool random = family == GenFamily::RandomCubicPlane;

    // Vertex (i, j): ring i (0 = outermost), position j counterclockwise.
    const auto vid = [&](std::size_t i, std::size_t j) {
        return static_cast<VertexId>(i * l + j);
    };

    // Spoke layer i joins (i, j) to (i+1, (j + phase[i]) mod l). A shared
    // twist per layer just rotates the next ring, so nothing crosses.
    std::vector<std::size_t> phase(rings ? rings - 1 : 0, 0);
    if (random)
        for (auto& p : phase) p = eng() % l;

    // Sparse deletions between degree-4 rings, never two at one vertex and
    // never below two survivors per layer, keep the view biconnected.
    std::vector<std::vector<bool>> drop(phase.size(), std::vector<bool>(l, false));
    if (random && rings >= 4) {
        std::vector<bool> lost(rings * l, false);
        for (std::size_t i = 1; i + 2 < rings; ++i) {
            std::size_t dropped = 0;
            for (std::size_t j = 0; j < l && dropped + 2 < l; ++j) {
                const VertexId a = vid(i, j);
                const VertexId b = vid(i + 1, (j + phase[i]) % l);
                if (eng() % 3 == 0 && !lost[a] && !lost[b]) {
                    drop[i][j] = true;
                    lost[a] = lost[b] = true;
                    ++dropped;
                }
            }
        }
    }

    // Edge direction per family; true = the edge runs with increasing j
    // (rings) or inward (spokes).
    // Every ring is a directed cycle, hence strongly connected, so one
    // inward spoke per layer keeps the sink reachable from the source.
    const auto ring_fwd = [&](std::size_t i) {
        if (random) return eng() % 2 == 0;
        if (family == GenFamily::NestedCycles) return i % 2 == 0;
        return i % 2 != 0;
    };

    std::vector<PlaneDiGraph::Edge> edges;
    std::vector<std::vector<EdgeId>> ring_edge(rings, std::vector<EdgeId>(l, kNone));
    std::vector<std::vector<EdgeId>> spoke_edge(phase.size(), std::vector<EdgeId>(l, kNone));
    bool outer_fwd = true;
    for (std::size_t i = 0; i < rings; ++i) {
        const bool fwd = ring_fwd(i);
        if (i == 0) outer_fwd = fwd;
        for (std::size_t j = 0; j < l; ++j) {
            ring_edge[i][j] = static_cast<EdgeId>(edges.size());
            const VertexId a = vid(i, j), b = vid(i, (j + 1) % l);
            edges.push_back(fwd ? PlaneDiGraph::Edge{a, b} : PlaneDiGraph::Edge{b, a});
        }
    }
    for (std::size_t i = 0; i < phase.size(); ++i) {
        std::size_t last = 0;
        for (std::size_t j = 0; j < l; ++j)
            if (!drop[i][j]) last = j;
        bool has_inward = false;
        for (std::size_t j = 0; j < l; ++j) {
            if (drop[i][j]) continue;
            const bool inward = !random || (eng() % 2 == 0) || (j == last && !has_inward);
            has_inward = has_inward || inward;
            spoke_edge[i][j] = static_cast<EdgeId>(edges.size());
            const VertexId a = vid(i, j), b = vid(i + 1, (j + phase[i]) % l);
            edges.push_back(inward ? PlaneDiGraph::Edge{a, b} : PlaneDiGraph::Edge{b, a});
        }
    }

    // Clockwise at (i, j): radially out, along the ring to j-1, radially in,
    // along the ring to j+1 (positions advance counterclockwise as drawn).
    std::vector<std::vector<EdgeId>> rot(rings * l);
    for (std::size_t i = 0; i < rings; ++i) {
        for (std::size_t j = 0; j < l; ++j) {
            auto& r = rot[vid(i, j)];
            if (i > 0) {
                const std::size_t jj = (j + l - phase[i - 1] % l) % l;
                if (spoke_edge[i - 1][jj] != kNone) r.push_back(spoke_edge[i - 1][jj]);
            }
            r.push_back(ring_edge[i][(j + l - 1) % l]);
            if (i + 1 < rings && spoke_edge[i][j] != kNone) r.push_back(spoke_edge[i][j]);
            r.push_back(ring_edge[i][j]);
        }
    }

    // The outer face lies left of the clockwise (decreasing j) dart of any
    // outer-ring edge.
    FlowNetwork net;
    net.g = build_plane_graph(std::move(edges), std::move(rot), ring_edge[0][0], outer_fwd);
    for (std::size_t e = 0; e < net.g.edge_count(); ++e) net.upper.push_back(draw_cap(eng));
    net.s = vid(0, 0);
    net.t = vid(rings - 1, l / 2);

    bool cubic = true;
    std::vector<std::size_t> deg(net.g.vertex_count(), 0);
    for (const auto& e : net.g.edges) {
        ++deg[e.tail];
        ++deg[e.head];
    }
    for (const std::size_t d : deg) cubic = cubic && d == 3;
    if (!cubic) net = to_cubic(net).net;
    return to_pfn(net);
}

} // namespace planeflow
