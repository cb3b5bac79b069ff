#include <doctest.h>

#include <planeflow/error.hpp>
#include <planeflow/oracle.hpp>
#include <planeflow/simplex.hpp>

#include "fixtures.hpp"

using namespace planeflow;

namespace {

// Net outflow of v under flow f.
Rat excess(const FlowNetwork& n, const std::vector<Rat>& f, VertexId v) {
    Rat out = 0;
    for (std::size_t e = 0; e < n.g.edges.size(); ++e) {
        if (n.g.edges[e].tail == v) out += f[e];
        if (n.g.edges[e].head == v) out -= f[e];
    }
    return out;
}

} // namespace

TEST_CASE("dinic on the diamond") {
    FlowNetwork n = fixtures::diamond();
    MaxFlowResult r = dinic_max_flow(n);
    CHECK(r.value == Rat(5));
    for (std::size_t e = 0; e < n.upper.size(); ++e) {
        CHECK(r.flow[e] >= 0);
        CHECK(r.flow[e] <= n.upper[e]);
    }
    for (VertexId v : {1u, 2u}) CHECK(excess(n, r.flow, v) == 0);
    CHECK(excess(n, r.flow, n.s) == Rat(5));
    CHECK(r.cut_side[n.s]);
    CHECK_FALSE(r.cut_side[n.t]);
}

TEST_CASE("dinic respects the bottleneck") {
    FlowNetwork n = fixtures::bottleneck_path();
    CHECK(dinic_max_flow(n).value == Rat(4));
}

TEST_CASE("dinic handles fractional capacities") {
    FlowNetwork n = fixtures::diamond();
    for (auto& u : n.upper) u /= 2;
    CHECK(dinic_max_flow(n).value == Rat(5, 2));
}

TEST_CASE("dinic on zero capacities") {
    FlowNetwork n = fixtures::diamond();
    for (auto& u : n.upper) u = 0;
    CHECK(dinic_max_flow(n).value == 0);
}

TEST_CASE("lower bounds: circulation around a directed triangle") {
    fixtures::EdgeList edges = {{0, 1}, {1, 2}, {2, 0}};
    fixtures::Rotation rot = {{2, 0}, {0, 1}, {1, 2}};
    ExtFlowNetwork n;
    n.g = build_plane_graph(edges, rot, 2);
    n.upper = {Rat(3), Rat(3), Rat(3)};
    n.lower = {Rat(2), Rat(2), Rat(2)};
    n.sources = {0};
    n.sinks = {1};
    auto w = feasible_flow_with_lower_bounds(n, {Rat(0), Rat(0)});
    REQUIRE(w.has_value());
    for (std::size_t e = 0; e < 3; ++e) {
        CHECK((*w)[e] >= n.lower[e]);
        CHECK((*w)[e] <= n.upper[e]);
    }
    // zero excess everywhere: a genuine circulation
    FlowNetwork plain;
    plain.g = n.g;
    plain.upper = n.upper;
    plain.s = 0;
    plain.t = 1;
    for (VertexId v = 0; v < 3; ++v) CHECK(excess(plain, *w, v) == 0);
}

TEST_CASE("lower bounds: conflicting pin is infeasible") {
    fixtures::EdgeList edges = {{0, 1}, {1, 2}};
    fixtures::Rotation rot = {{0}, {0, 1}, {1}};
    ExtFlowNetwork n;
    n.g = build_plane_graph(edges, rot, 0);
    n.upper = {Rat(5), Rat(3)};
    n.lower = {Rat(5), Rat(0)};
    n.sources = {0};
    n.sinks = {2};
    CHECK_FALSE(feasible_flow_with_lower_bounds(n, {Rat(5), Rat(5)}));
    CHECK_FALSE(feasible_flow_with_lower_bounds(n, {Rat(3), Rat(3)}));
}

TEST_CASE("lower bounds: max-flow boundary is realizable") {
    FlowNetwork n = fixtures::diamond();
    MaxFlowResult r = dinic_max_flow(n);
    ExtFlowNetwork ext = to_extended(n);
    auto w = feasible_flow_with_lower_bounds(ext, {r.value, r.value});
    REQUIRE(w.has_value());
    CHECK(excess(n, *w, n.s) == r.value);
    CHECK(excess(n, *w, n.t) == -r.value);
    for (VertexId v : {1u, 2u}) CHECK(excess(n, *w, v) == 0);
}

TEST_CASE("simplex solves a small LP") {
    // max x + y st x <= 2, y <= 3, x + y <= 4
    std::vector<std::vector<Rat>> A = {{1, 0}, {0, 1}, {1, 1}};
    std::vector<Rat> b = {2, 3, 4};
    std::vector<Rat> c = {1, 1};
    SimplexResult r = simplex_maximize(A, b, c);
    REQUIRE(r.status == SimplexResult::Status::Optimal);
    CHECK(r.value == Rat(4));
    CHECK(r.x[0] + r.x[1] == Rat(4));
}

TEST_CASE("simplex detects infeasibility and unboundedness") {
    {
        std::vector<std::vector<Rat>> A = {{1}, {-1}};
        std::vector<Rat> b = {1, -3}; // x <= 1 and x >= 3
        SimplexResult r = simplex_maximize(A, b, {Rat(1)});
        CHECK(r.status == SimplexResult::Status::Infeasible);
    }
    {
        std::vector<std::vector<Rat>> A = {{-1}};
        std::vector<Rat> b = {0};
        SimplexResult r = simplex_maximize(A, b, {Rat(1)});
        CHECK(r.status == SimplexResult::Status::Unbounded);
    }
}

TEST_CASE("simplex with fractional data") {
    // max 3x st x <= 7/2
    std::vector<std::vector<Rat>> A = {{1}};
    std::vector<Rat> b = {Rat(7, 2)};
    SimplexResult r = simplex_maximize(A, b, {Rat(3)});
    REQUIRE(r.status == SimplexResult::Status::Optimal);
    CHECK(r.value == Rat(21, 2));
}

TEST_CASE("component items are edges ascending then terminals") {
    FlowNetwork n = fixtures::diamond();
    ExtFlowNetwork ext = to_extended(n);
    auto items = items_of_component(ext, {1});
    REQUIRE(items.size() == 3);
    CHECK(items[0].edge == 0);
    CHECK(items[0].sigma == 1); // inbound
    CHECK(items[1].edge == 2);
    CHECK(items[1].sigma == -1);
    CHECK(items[2].edge == 4);
    CHECK(items[2].sigma == -1);

    auto whole = items_of_component(ext, {0, 1, 2, 3});
    REQUIRE(whole.size() == 2);
    CHECK_FALSE(whole[0].is_edge);
    CHECK(whole[0].terminal == 0);
    CHECK(whole[0].sigma == 1);
    CHECK(whole[1].terminal == 3);
    CHECK(whole[1].sigma == -1);
}

TEST_CASE("projected intervals of a single inner vertex") {
    FlowNetwork n = fixtures::diamond();
    ExtFlowNetwork ext = to_extended(n);
    std::vector<VertexId> comp = {1};
    // items: e0 (+), e2 (-), e4 (-)
    auto [lo0, hi0] = project_interval(ext, comp, 0b001);
    CHECK(lo0 == Rat(0));
    CHECK(hi0 == Rat(3)); // inflow limited by e2 + e4 = 2 + 1
    auto [lo01, hi01] = project_interval(ext, comp, 0b011);
    CHECK(lo01 == Rat(0)); // f0 - f2 = f4 in [0, 1]
    CHECK(hi01 == Rat(1));
    auto [loall, hiall] = project_interval(ext, comp, 0b111);
    CHECK(loall == Rat(0)); // f0 - f2 - f4 = 0 by conservation
    CHECK(hiall == Rat(0));
}

TEST_CASE("projected interval of the whole diamond matches max flow") {
    FlowNetwork n = fixtures::diamond();
    ExtFlowNetwork ext = to_extended(n);
    std::vector<VertexId> comp = {0, 1, 2, 3};
    // items: terminal s (+), terminal t (-)
    auto [lo, hi] = project_interval(ext, comp, 0b01);
    CHECK(lo == Rat(0));
    CHECK(hi == Rat(5));
    // s and t excesses must cancel
    auto [lob, hib] = project_interval(ext, comp, 0b11);
    CHECK(lob == Rat(0));
    CHECK(hib == Rat(0));
}

TEST_CASE("projection with lower bounds shifts the interval") {
    FlowNetwork n = fixtures::bottleneck_path();
    ExtFlowNetwork ext = to_extended(n);
    ext.lower = {Rat(1), Rat(1)};
    std::vector<VertexId> comp = {1};
    // items: e0 (+), e1 (-)
    auto [lo, hi] = project_interval(ext, comp, 0b01);
    CHECK(lo == Rat(1));
    CHECK(hi == Rat(4)); // conservation: f0 = f1 <= 4
}
