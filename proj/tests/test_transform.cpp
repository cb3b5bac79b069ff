#include <doctest.h>

#include <planeflow/error.hpp>
#include <planeflow/faces.hpp>
#include <planeflow/oracle.hpp>
#include <planeflow/outerplanarity.hpp>
#include <planeflow/preprocess.hpp>
#include <planeflow/transform.hpp>

#include <algorithm>
#include <functional>
#include <map>

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

FlowNetwork k4_net() {
    FlowNetwork n;
    n.g = fixtures::k4();
    n.upper = {Rat(1), Rat(2), Rat(3), Rat(4), Rat(5), Rat(6)};
    n.s = 1;
    n.t = 3;
    return n;
}

// k4 with one edge subdivided twice (path 1 - 5 - 4 - 0) and the middle piece
// doubled into a two-edge cycle. Every vertex has degree 3.
FlowNetwork k4_with_handle() {
    fixtures::EdgeList edges = {{1, 5}, {0, 2}, {0, 3}, {1, 2}, {1, 3},
                                {2, 3}, {5, 4}, {4, 0}, {4, 5}};
    fixtures::Rotation rot = {{1, 2, 7}, {0, 4, 3}, {3, 5, 1},
                              {5, 4, 2}, {7, 6, 8}, {0, 8, 6}};
    FlowNetwork n;
    n.g = build_plane_graph(edges, rot, 0);
    n.upper = {Rat(1), Rat(2), Rat(3), Rat(4), Rat(5), Rat(6), Rat(7), Rat(8), Rat(9)};
    n.s = 1;
    n.t = 3;
    return n;
}

// k4 with the edge 2-3 doubled: both endpoints reach degree 4.
FlowNetwork k4_doubled() {
    fixtures::EdgeList edges = {{1, 0}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 2}};
    fixtures::Rotation rot = {{1, 2, 0}, {0, 4, 3}, {3, 5, 6, 1}, {6, 5, 4, 2}};
    FlowNetwork n;
    n.g = build_plane_graph(edges, rot, 0);
    n.upper = {Rat(1), Rat(2), Rat(3), Rat(4), Rat(5), Rat(6), Rat(7)};
    n.s = 1;
    n.t = 3;
    return n;
}

FlowNetwork ring_net() {
    FlowNetwork n;
    n.g = fixtures::double_ring_12();
    n.upper.assign(24, Rat(1));
    n.s = 0;
    n.t = 2;
    return n;
}

bool cubic(const PlaneDiGraph& g) {
    return std::all_of(g.rotation.begin(), g.rotation.end(),
                       [](const auto& row) { return row.size() == 3; });
}

int antiparallel_pairs(const PlaneDiGraph& g) {
    std::map<std::pair<VertexId, VertexId>, std::pair<bool, bool>> seen;
    for (const auto& e : g.edges) {
        std::pair<VertexId, VertexId> key{std::min(e.tail, e.head), std::max(e.tail, e.head)};
        auto& dirs = seen[key];
        (e.tail < e.head ? dirs.first : dirs.second) = true;
    }
    int pairs = 0;
    for (const auto& [key, dirs] : seen) {
        if (dirs.first && dirs.second) ++pairs;
    }
    return pairs;
}

int peel_depth(const PlaneDiGraph& g) {
    UndirectedView u = undirect(g);
    FaceSet fs = trace_faces(u, g);
    return peel_edges(u, fs).k;
}

} // namespace

TEST_CASE("expand_vertex replaces a corner by a capacity ring") {
    FlowNetwork n = k4_net();
    Rat before = dinic_max_flow(n).value;
    FlowNetwork e = expand_vertex(n, 0, Rat(100));
    REQUIRE(e.g.vertex_count() == 6);
    REQUIRE(e.g.edge_count() == 9);
    CHECK(e.g.rotation[0] == std::vector<EdgeId>{1, 6, 8});
    CHECK(e.g.rotation[4] == std::vector<EdgeId>{2, 7, 6});
    CHECK(e.g.rotation[5] == std::vector<EdgeId>{0, 8, 7});
    CHECK(e.g.edges[6].tail == 0);
    CHECK(e.g.edges[6].head == 4);
    CHECK(e.g.edges[7].tail == 4);
    CHECK(e.g.edges[7].head == 5);
    CHECK(e.g.edges[8].tail == 5);
    CHECK(e.g.edges[8].head == 0);
    CHECK(e.g.edges[2].tail == 4); // 0 -> 3 now leaves from ring slot 1
    CHECK(e.g.edges[0].head == 5); // 1 -> 0 now enters ring slot 2
    CHECK(e.upper[6] == Rat(100));
    CHECK(dinic_max_flow(e).value == before);

    check_code([&] { expand_vertex(fixtures::diamond(), 0, Rat(1)); }, ErrorCode::DegreeTooSmall);
    check_code([&] { expand_vertex(n, 9, Rat(1)); }, ErrorCode::InvalidParams);
}

TEST_CASE("expanding every corner of k4 yields the cubic cage") {
    FlowNetwork n = k4_net();
    Rat before = dinic_max_flow(n).value;
    for (VertexId v = 0; v < 4; ++v) n = expand_vertex(n, v, Rat(22));
    CHECK(n.g.vertex_count() == 12);
    CHECK(n.g.edge_count() == 18);
    CHECK(cubic(n.g));
    CHECK(dinic_max_flow(n).value == before);
    CHECK(peel_depth(n.g) == peel_depth(k4_net().g));
}

TEST_CASE("to_cubic flattens the double ring to degree three") {
    FlowNetwork n = ring_net();
    CubicResult r = to_cubic(n);
    CHECK(r.net.g.vertex_count() == 48);
    CHECK(r.net.g.edge_count() == 72);
    CHECK(cubic(r.net.g));
    CHECK(r.net.g.edge_count() <= 3 * n.g.edge_count());
    CHECK(r.net.g.vertex_count() <= n.g.vertex_count() + 2 * n.g.edge_count());
    CHECK(r.net.s == 0);
    CHECK(r.net.t == 2);
    CHECK(antiparallel_pairs(r.net.g) == 0);
    CHECK(r.big == Rat(25));

    for (VertexId v = 0; v < 12; ++v) {
        CHECK(r.vertex_origin[v] == v);
        for (int i = 0; i < 3; ++i) CHECK(r.vertex_origin[12 + 3 * v + i] == v);
    }
    for (EdgeId e = 0; e < 24; ++e) CHECK(r.edge_origin[e] == e);
    for (EdgeId e = 24; e < 72; ++e) CHECK(r.edge_origin[e] == kNone);

    CHECK(dinic_max_flow(r.net).value == dinic_max_flow(n).value);

    UndirectedView u = undirect(r.net.g);
    FaceSet fs = trace_faces(u, r.net.g);
    CHECK(fs.faces[fs.outer].size() == 8);
}

TEST_CASE("to_cubic is the identity on an already cubic net") {
    FlowNetwork p;
    p.g = fixtures::prism();
    p.upper.assign(9, Rat(2));
    p.s = 0;
    p.t = 5;
    CubicResult r = to_cubic(p);
    CHECK(r.net.g.vertex_count() == 6);
    CHECK(r.net.g.edge_count() == 9);
    CHECK(r.net.upper == p.upper);
    CHECK(r.net.g.rotation == p.g.rotation);

    FlowNetwork nd = normalize(fixtures::diamond()).segments[0].net;
    CubicResult rd = to_cubic(nd);
    CHECK(rd.net.g.vertex_count() == nd.g.vertex_count());
    CHECK(rd.net.g.edge_count() == nd.g.edge_count());
}

TEST_CASE("to_cubic splits surviving two-edge cycles") {
    FlowNetwork n = k4_with_handle();
    REQUIRE(antiparallel_pairs(n.g) == 1);
    Rat before = dinic_max_flow(n).value;
    CHECK(before == Rat(10));
    CubicResult r = to_cubic(n);
    CHECK(r.net.g.vertex_count() == 10);
    CHECK(r.net.g.edge_count() == 15);
    CHECK(cubic(r.net.g));
    CHECK(antiparallel_pairs(r.net.g) == 0);
    CHECK(dinic_max_flow(r.net).value == before);
    // Stage two expanded exactly the pair endpoints 4 and 5.
    std::vector<VertexId> expect = {0, 1, 2, 3, 4, 5, 4, 4, 5, 5};
    CHECK(r.vertex_origin == expect);
    CHECK(peel_depth(r.net.g) == peel_depth(n.g));
}

TEST_CASE("stage one alone breaks pairs at expanded vertices") {
    FlowNetwork n = k4_doubled();
    REQUIRE(antiparallel_pairs(n.g) == 1);
    Rat before = dinic_max_flow(n).value;
    CHECK(before == Rat(10));
    CubicResult r = to_cubic(n);
    CHECK(r.net.g.vertex_count() == 10);
    CHECK(r.net.g.edge_count() == 15);
    CHECK(cubic(r.net.g));
    CHECK(antiparallel_pairs(r.net.g) == 0);
    CHECK(dinic_max_flow(r.net).value == before);
    // Only the degree-4 endpoints of the doubled edge get expanded.
    std::vector<VertexId> expect = {0, 1, 2, 3, 2, 2, 2, 3, 3, 3};
    CHECK(r.vertex_origin == expect);
}

TEST_CASE("ring capacity never constrains a maximum flow") {
    FlowNetwork n = k4_net();
    Rat big = to_cubic(k4_with_handle()).big;
    CHECK(big == Rat(46)); // 45 total capacity plus one
    FlowNetwork a = expand_vertex(n, 0, Rat(22));
    FlowNetwork b = expand_vertex(n, 0, Rat(44));
    CHECK(dinic_max_flow(a).value == dinic_max_flow(b).value);
}

TEST_CASE("to_cubic requires minimum degree three") {
    check_code([] { to_cubic(fixtures::diamond()); }, ErrorCode::DegreeTooSmall);
}

TEST_CASE("peel depth survives the transform on the double ring") {
    FlowNetwork n = ring_net();
    CubicResult r = to_cubic(n);
    CHECK(peel_depth(n.g) == 4);
    CHECK(peel_depth(r.net.g) == 4);
}
