#pragma once

// Hand-embedded plane graphs used across the test suite. Rotations are
// clockwise as drawn; outer witness edges point with the unbounded face on
// the left of their tail->head dart.

#include <planeflow/network.hpp>
#include <planeflow/plane_graph.hpp>

namespace fixtures {

using planeflow::EdgeId;
using planeflow::FlowNetwork;
using planeflow::PlaneDiGraph;
using planeflow::Rat;

using EdgeList = std::vector<PlaneDiGraph::Edge>;
using Rotation = std::vector<std::vector<EdgeId>>;

// Directed triangle-ish: 0->1, 1->2, 0->2.
inline PlaneDiGraph triangle() {
    EdgeList edges = {{0, 1}, {1, 2}, {0, 2}};
    Rotation rot = {{2, 0}, {0, 1}, {1, 2}};
    return planeflow::build_plane_graph(edges, rot, 2);
}

inline PlaneDiGraph k4() {
    EdgeList edges = {{1, 0}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    Rotation rot = {{1, 2, 0}, {0, 4, 3}, {3, 5, 1}, {5, 4, 2}};
    return planeflow::build_plane_graph(edges, rot, 0);
}

// Triangular prism: outer ring 0,1,2; inner ring 3,4,5; spokes i -> i+3.
inline PlaneDiGraph prism() {
    EdgeList edges = {{1, 0}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3},
                      {0, 3}, {1, 4}, {2, 5}};
    Rotation rot = {{2, 6, 0}, {0, 7, 1}, {1, 8, 2},
                    {5, 3, 6}, {7, 3, 4}, {8, 4, 5}};
    return planeflow::build_plane_graph(edges, rot, 0);
}

// Hexagonal prism: outer ring 0..5 (edges i -> i+1, ids 0..5), inner ring
// 6..11 (ids 6..11), spokes i -> 6+i (ids 12..17). Peels in two rounds.
// Triangle-free, so any one-vertex-at-a-time order exposes a 3-set with
// boundary 5; keeping each spoke inside its own subtree stays at 4.
inline PlaneDiGraph hex_prism() {
    EdgeList edges;
    Rotation rot(12);
    for (planeflow::VertexId i = 0; i < 6; ++i) edges.push_back({i, (i + 1) % 6});
    for (planeflow::VertexId i = 0; i < 6; ++i) edges.push_back({6 + i, 6 + (i + 1) % 6});
    for (planeflow::VertexId i = 0; i < 6; ++i) edges.push_back({i, 6 + i});
    for (EdgeId i = 0; i < 6; ++i) {
        rot[i] = {(i + 5) % 6, i, 12 + i};
        rot[6 + i] = {6 + (i + 5) % 6, 12 + i, 6 + i};
    }
    return planeflow::build_plane_graph(edges, rot, 0);
}

// 12-vertex 4-regular plane graph: square outer ring (0..3, drawn with bulged
// arcs), octagon middle ring (4..11), four chords forming an inner diamond.
// Vertices: 0=(6,0) 1=(12,6) 2=(6,12) 3=(0,6), octagon 4=(3,3) 5=(6,3)
// 6=(9,3) 7=(9,6) 8=(9,9) 9=(6,9) 10=(3,9) 11=(3,6).
inline PlaneDiGraph double_ring_12() {
    EdgeList edges = {
        {1, 0},  {1, 2},  {2, 3},  {3, 0},  // outer square arcs
        {0, 6},  {1, 8},  {2, 10}, {3, 4},  // corner spokes, one pair
        {4, 0},  {6, 1},  {8, 2},  {10, 3}, // corner spokes, other pair
        {4, 5},  {5, 6},  {6, 7},  {7, 8},  // octagon
        {8, 9},  {9, 10}, {10, 11}, {11, 4},
        {5, 7},  {7, 9},  {9, 11}, {11, 5}, // inner diamond chords
    };
    Rotation rot = {
        {3, 8, 4, 0},    // 0
        {0, 9, 5, 1},    // 1
        {10, 6, 2, 1},   // 2
        {7, 3, 2, 11},   // 3
        {8, 7, 19, 12},  // 4
        {12, 23, 20, 13},// 5
        {4, 13, 14, 9},  // 6
        {14, 20, 21, 15},// 7
        {5, 15, 16, 10}, // 8
        {21, 22, 17, 16},// 9
        {18, 11, 6, 17}, // 10
        {23, 19, 18, 22},// 11
    };
    return planeflow::build_plane_graph(edges, rot, 0);
}

// Classic diamond: s=0, a=1, b=2, t=3; max flow value 5. deg(s) = 2.
inline FlowNetwork diamond() {
    EdgeList edges = {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {1, 2}};
    Rotation rot = {{1, 0}, {2, 4, 0}, {1, 4, 3}, {3, 2}};
    FlowNetwork n;
    n.g = planeflow::build_plane_graph(edges, rot, 2);
    n.upper = {Rat(3), Rat(2), Rat(2), Rat(3), Rat(1)};
    n.s = 0;
    n.t = 3;
    return n;
}

// Bowtie: triangles 0,1,2 and 2,3,4 share vertex 2. s=0, t=4. Both sides
// fold to a single strand (5 and 2), so the value is 2.
inline FlowNetwork two_triangles() {
    EdgeList edges = {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}};
    Rotation rot = {{0, 2}, {1, 0}, {2, 1, 3, 5}, {4, 3}, {5, 4}};
    FlowNetwork n;
    n.g = planeflow::build_plane_graph(edges, rot, 0);
    n.upper = {Rat(4), Rat(4), Rat(1), Rat(1), Rat(1), Rat(1)};
    n.s = 0;
    n.t = 4;
    return n;
}

// Directed cycle 0 -> 1 -> 2 -> 3 -> 4 -> 5 -> 0 drawn clockwise; s=0, t=4.
// Forward arc bottleneck 2, return arc 9.
inline FlowNetwork hexagon_chain() {
    EdgeList edges;
    Rotation rot;
    for (planeflow::VertexId v = 0; v < 6; ++v) {
        edges.push_back({v, (v + 1) % 6});
        rot.push_back({(v + 5) % 6, v});
    }
    FlowNetwork n;
    n.g = planeflow::build_plane_graph(edges, rot, 0);
    n.upper = {Rat(4), Rat(2), Rat(7), Rat(5), Rat(9), Rat(9)};
    n.s = 0;
    n.t = 4;
    return n;
}

// Triangle 0,1,2 then a bridge 2 -> 3 into triangle 3,4,5. s=0, t=5.
// Segment values fold to 5, 3, 2.
inline FlowNetwork chain_of_three() {
    EdgeList edges = {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 5}};
    Rotation rot = {{2, 0}, {1, 0}, {3, 1, 2}, {6, 4, 3}, {5, 4}, {5, 6}};
    FlowNetwork n;
    n.g = planeflow::build_plane_graph(edges, rot, 3);
    n.upper = {Rat(4), Rat(4), Rat(1), Rat(3), Rat(1), Rat(1), Rat(1)};
    n.s = 0;
    n.t = 5;
    return n;
}

// s=0 -> a=1 -> t=2 with caps 7, 4.
inline FlowNetwork bottleneck_path() {
    EdgeList edges = {{0, 1}, {1, 2}};
    Rotation rot = {{0}, {0, 1}, {1}};
    FlowNetwork n;
    n.g = planeflow::build_plane_graph(edges, rot, 0);
    n.upper = {Rat(7), Rat(4)};
    n.s = 0;
    n.t = 2;
    return n;
}

} // namespace fixtures
