#pragma once

#include <string>

#include "planeflow/network.hpp"

namespace planeflow {

// Line-oriented text format for plane flow networks:
//
//   pfn 1
//   n <vertex count>
//   m <edge count>
//   v <id> <incident edge ids, clockwise>
//   e <id> <tail> <head> <upper> [<lower>]
//   outer <edge id> [rev]
//   s <vertex ids...>
//   t <vertex ids...>
//
// Rationals read `p` or `p/q`, optionally signed; bounds must be nonnegative.
// `rev` marks a witness edge whose head->tail dart borders the outer face: a
// boundary can run entirely against the edge directions, so an aligned
// witness need not exist. `#` starts a comment; blank lines are skipped.
struct PfnFile {
    PlaneDiGraph g;
    std::vector<Rat> upper;
    std::vector<Rat> lower; // sized like upper; zeros unless the file set any
    bool has_lower = false; // print edge lines with the fifth column
    std::vector<VertexId> sources;
    std::vector<VertexId> sinks;
};

// Rejects malformed input with ParseError naming the line; embedding problems
// (bad rotations, non-planar counts) surface under their own codes.
PfnFile parse_pfn(const std::string& text);

// Canonical form: header, counts, vertices ascending, edges ascending, outer
// witness, terminals. parse_pfn(print_pfn(f)) reproduces f byte for byte.
std::string print_pfn(const PfnFile& f);

PfnFile to_pfn(const FlowNetwork& n);
PfnFile to_pfn(const ExtFlowNetwork& n);

// Requires exactly one source, one sink, and no positive lower bound.
FlowNetwork to_network(const PfnFile& f);
ExtFlowNetwork to_extended_network(const PfnFile& f);

} // namespace planeflow
