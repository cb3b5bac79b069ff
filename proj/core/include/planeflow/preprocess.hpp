#pragma once

#include <vector>

#include "planeflow/network.hpp"

namespace planeflow {

// Block-cut decomposition of the undirected view.
struct BiconnectedDecomposition {
    std::vector<std::vector<std::uint32_t>> blocks; // uedge ids per block
    std::vector<char> is_cut;                       // per vertex
};

BiconnectedDecomposition biconnected_components(const UndirectedView& u);

// One link of the source-to-sink block chain as a standalone network, with
// dense local ids. Two-vertex links are degenerate: they are valued directly
// (capacity from entry to exit after folding) and skip the pipeline.
struct Segment {
    FlowNetwork net;
    bool degenerate = false;
    Rat direct_value = 0;
    std::vector<VertexId> orig_vertex; // local -> input id, kNone for fresh
    std::vector<EdgeId> orig_edge;     // local -> input id, kNone for fresh
};

// Everything normalize decided, in execution order. Re-executing the same
// decisions on the same input reproduces the segments bit-exactly.
struct NormalizeAction {
    enum class Kind : std::uint8_t {
        SelectBlock, // vertices = block vertex set, a/b = entry/exit
        Contract,    // a = removed degree-2 vertex
        Gadget,      // a = degree-2 terminal
    };
    Kind kind = Kind::SelectBlock;
    int segment = -1;
    std::vector<VertexId> vertices;
    VertexId a = kNone;
    VertexId b = kNone;
};

struct NormalizationReport {
    std::vector<NormalizeAction> actions;
};

struct Normalized {
    std::vector<Segment> segments; // chain order, source side first
    NormalizationReport report;
};

// Enforce: minimum degree 3 and a biconnected undirected view (self-loops
// are already impossible structurally). The input's max-flow value is the
// minimum over segment values: every unit crosses each chain link.
Normalized normalize(const FlowNetwork& n);

// Re-execute a report's decisions against the input it came from.
std::vector<Segment> replay(const FlowNetwork& n, const NormalizationReport& report);

Rat combine_segment_values(const std::vector<Rat>& values);

// Standalone reductions (normalize composes these with block extraction).
FlowNetwork contract_degree2(const FlowNetwork& n);
FlowNetwork fix_terminal_degrees(const FlowNetwork& n);

} // namespace planeflow
