#include <doctest.h>

#include <planeflow/error.hpp>
#include <planeflow/faces.hpp>
#include <planeflow/outerplanarity.hpp>
#include <planeflow/preprocess.hpp>
#include <planeflow/reassembling.hpp>
#include <planeflow/transform.hpp>

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "fixtures.hpp"

using namespace planeflow;

namespace {

void check_code(const std::function<void()>& f, ErrorCode code) {
    try {
        f();
        FAIL_CHECK("expected rejection: " << error_code_name(code));
    } catch (const Error& e) {
        CHECK(e.code() == code);
    }
}

int peel_depth(const PlaneDiGraph& g) {
    const UndirectedView u = undirect(g);
    const FaceSet fs = trace_faces(u, g);
    return peel_edges(u, fs).k;
}

bool same_tree(const Reassembling& a, const Reassembling& b) {
    if (a.root != b.root || a.nodes.size() != b.nodes.size()) return false;
    for (std::size_t i = 0; i < a.nodes.size(); ++i) {
        if (a.nodes[i].left != b.nodes[i].left || a.nodes[i].right != b.nodes[i].right ||
            a.nodes[i].vertex != b.nodes[i].vertex ||
            a.nodes[i].boundary != b.nodes[i].boundary)
            return false;
    }
    return true;
}

void check_shape(const PlaneDiGraph& g, const Reassembling& b) {
    const std::size_t n = g.rotation.size();
    REQUIRE(b.nodes.size() == 2 * n - 1);
    REQUIRE(b.root == static_cast<int>(b.nodes.size()) - 1);
    std::set<VertexId> leaves;
    for (std::size_t i = 0; i < b.nodes.size(); ++i) {
        const auto& nd = b.nodes[i];
        if (nd.left < 0) {
            CHECK(nd.right < 0);
            CHECK(leaves.insert(nd.vertex).second);
        } else {
            // children are built before their parent
            CHECK(nd.left < static_cast<int>(i));
            CHECK(nd.right < static_cast<int>(i));
            CHECK(nd.vertex == kNone);
            for (const EdgeId e : nd.boundary) {
                const bool in_l = std::binary_search(b.nodes[nd.left].boundary.begin(),
                                                     b.nodes[nd.left].boundary.end(), e);
                const bool in_r = std::binary_search(b.nodes[nd.right].boundary.begin(),
                                                     b.nodes[nd.right].boundary.end(), e);
                CHECK(in_l != in_r);
            }
        }
        CHECK(std::is_sorted(nd.boundary.begin(), nd.boundary.end()));
    }
    CHECK(leaves.size() == n);
    CHECK(b.nodes[b.root].boundary.empty());
}

} // namespace

TEST_CASE("single cycle folds into a width-two caterpillar") {
    const PlaneDiGraph g = fixtures::hexagon_chain().g;
    const Reassembling b = build_reassembling(g);
    check_shape(g, b);
    CHECK(peel_depth(g) == 1);
    const AlphaMeasure am = alpha_measure(g, b);
    CHECK(am.alpha == 2);
    CHECK(b.nodes[am.argmax_node].boundary.size() == 2);
    // every column is a singleton, so each merge hangs one fresh leaf
    for (std::size_t i = 0; i < b.nodes.size(); ++i) {
        if (b.nodes[i].left >= 0) CHECK(b.nodes[b.nodes[i].right].left < 0);
    }
}

TEST_CASE("hexagonal prism stays at twice the peel depth") {
    const PlaneDiGraph g = fixtures::hex_prism();
    CHECK(peel_depth(g) == 2);
    const Reassembling b = build_reassembling(g);
    check_shape(g, b);
    const AlphaMeasure am = alpha_measure(g, b);
    CHECK(am.alpha == 4);

    // each spoke becomes its own two-leaf subtree
    std::set<std::pair<VertexId, VertexId>> pairs;
    for (const auto& nd : b.nodes) {
        if (nd.left < 0) continue;
        const auto& l = b.nodes[nd.left];
        const auto& r = b.nodes[nd.right];
        if (l.left < 0 && r.left < 0)
            pairs.insert({std::min(l.vertex, r.vertex), std::max(l.vertex, r.vertex)});
    }
    const std::set<std::pair<VertexId, VertexId>> want = {{0, 6}, {1, 7}, {2, 8},
                                                          {3, 9}, {4, 10}, {5, 11}};
    CHECK(pairs == want);
    CHECK(same_tree(b, build_reassembling(g)));
}

TEST_CASE("triangular prism pairs rings with spokes") {
    const PlaneDiGraph g = fixtures::prism();
    CHECK(peel_depth(g) == 2);
    const Reassembling b = build_reassembling(g);
    check_shape(g, b);
    CHECK(alpha_measure(g, b).alpha == 4);
}

TEST_CASE("k4 groups the center with one corner") {
    const PlaneDiGraph g = fixtures::k4();
    CHECK(peel_depth(g) == 2);
    const Reassembling b = build_reassembling(g);
    check_shape(g, b);
    CHECK(alpha_measure(g, b).alpha == 4);
}

TEST_CASE("cubic image of the double ring keeps alpha within twice the depth") {
    FlowNetwork rn;
    rn.g = fixtures::double_ring_12();
    rn.upper.assign(rn.g.edges.size(), Rat(1));
    rn.s = 0;
    rn.t = 2;
    const CubicResult cr = to_cubic(rn);
    const PlaneDiGraph& g = cr.net.g;
    const int k = peel_depth(g);
    CHECK(k == 4);
    const Reassembling b = build_reassembling(g);
    check_shape(g, b);
    const AlphaMeasure am = alpha_measure(g, b);
    CHECK(am.alpha <= 2 * static_cast<std::size_t>(k));
    CHECK(am.alpha == 8);
}

TEST_CASE("normalized diamond reassembles within the bound") {
    const Normalized nz = normalize(fixtures::diamond());
    REQUIRE(nz.segments.size() == 1);
    const PlaneDiGraph& g = nz.segments[0].net.g;
    const int k = peel_depth(g);
    const Reassembling b = build_reassembling(g);
    check_shape(g, b);
    const AlphaMeasure am = alpha_measure(g, b);
    CHECK(am.alpha <= 2 * static_cast<std::size_t>(k));
    CHECK(k == 2);
    // the terminal fans fuse with their arc of the outer walk
    CHECK(am.alpha == 4);
}

TEST_CASE("reassembling rejects bad inputs") {
    check_code([] { build_reassembling(PlaneDiGraph{}); }, ErrorCode::InvalidParams);
    check_code([] { build_reassembling(fixtures::double_ring_12()); }, ErrorCode::NotCubic);
    check_code([] { build_reassembling(fixtures::bottleneck_path().g); }, ErrorCode::NotCubic);

    // two disjoint directed triangles, assembled by hand
    PlaneDiGraph two;
    two.edges = {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}};
    two.rotation = {{2, 0}, {0, 1}, {1, 2}, {5, 3}, {3, 4}, {4, 5}};
    two.outer_edge = 2;
    check_code([&] { build_reassembling(two); }, ErrorCode::Disconnected);

    // reordering one rotation row keeps the degrees but breaks Euler
    PlaneDiGraph twisted = fixtures::prism();
    std::swap(twisted.rotation[3][0], twisted.rotation[3][1]);
    check_code([&] { build_reassembling(twisted); }, ErrorCode::NotPlane);
}

TEST_CASE("alpha_measure validates the tree before trusting it") {
    const PlaneDiGraph g = fixtures::prism();
    const Reassembling good = build_reassembling(g);
    CHECK(alpha_measure(g, good).alpha == 4);

    Reassembling b = good;
    b.nodes.pop_back();
    check_code([&] { alpha_measure(g, b); }, ErrorCode::InvalidTree);

    b = good;
    b.root = 0;
    check_code([&] { alpha_measure(g, b); }, ErrorCode::InvalidTree);

    b = good;
    b.nodes[b.root].boundary.push_back(0);
    check_code([&] { alpha_measure(g, b); }, ErrorCode::InvalidTree);

    b = good;
    for (auto& nd : b.nodes) {
        if (nd.left >= 0 && b.nodes[nd.left].left < 0 && b.nodes[nd.right].left < 0) {
            nd.right = nd.left; // same child twice
            break;
        }
    }
    check_code([&] { alpha_measure(g, b); }, ErrorCode::InvalidTree);

    b = good;
    for (auto& nd : b.nodes) {
        if (nd.left < 0) {
            nd.vertex = (nd.vertex + 1) % 6; // duplicate one leaf vertex
            break;
        }
    }
    check_code([&] { alpha_measure(g, b); }, ErrorCode::InvalidTree);

    b = good;
    for (auto& nd : b.nodes) {
        if (nd.left < 0 && nd.boundary.size() >= 2) {
            std::swap(nd.boundary[0], nd.boundary[1]); // cached set corrupted
            break;
        }
    }
    check_code([&] { alpha_measure(g, b); }, ErrorCode::InvalidTree);
}

TEST_CASE("tree export lists nodes root-first with vertex sets") {
    const PlaneDiGraph g = fixtures::hexagon_chain().g;
    const Reassembling b = build_reassembling(g);
    const std::string text = export_tree(b);
    std::istringstream in(text);
    std::string line;
    std::size_t lines = 0;
    while (std::getline(in, line)) ++lines;
    CHECK(lines == b.nodes.size());
    CHECK(text.rfind("node 10: vertices {0 1 2 3 4 5} boundary 0\n", 0) == 0);
    CHECK(text.find("boundary 2") != std::string::npos);
    CHECK(export_tree(Reassembling{}).empty());
}
