#pragma once

#include <cstdint>
#include <vector>

#include "planeflow/network.hpp"
#include "planeflow/reassembling.hpp"

namespace planeflow {

struct Interval {
    Rat lo;
    Rat hi;
};

// Interval typing over terminal subsets. Bit i of a mask selects
// terminals[i]; terminals are sorted ascending and sigma[i] is +1 for a
// source, -1 for a sink. Only upper ends are stored: the achievable values
// of a subset and of its complement are negatives of each other (summing
// conservation over the whole graph), so lo(A) = -hi(~A).
struct Typing {
    std::vector<VertexId> terminals;
    std::vector<int> sigma;
    std::vector<Rat> hi; // indexed by subset mask, size 1 << terminals.size()

    std::uint32_t full_mask() const { return (1u << terminals.size()) - 1; }
    Interval interval(std::uint32_t mask) const {
        return {-hi[full_mask() & ~mask], hi[mask]};
    }
};

// DP state for one reassembling node X: the achievable net injection into X
// through every subset of its boundary items. Items are the dangling
// directed edges (sigma +1 when the head lies inside X) in ascending edge id
// order, then the terminals contained in X (sigma +1 for sources) in
// ascending vertex id order. As with Typing, lo(A) = -hi(~A).
struct NodeTyping {
    struct Item {
        bool is_edge = true;
        EdgeId edge = kNone;
        VertexId terminal = kNone;
        int sigma = 0;
    };

    std::vector<Item> items;
    std::vector<Rat> hi; // indexed by item-subset mask

    std::uint32_t full_mask() const { return (1u << items.size()) - 1; }
    Interval interval(std::uint32_t mask) const {
        return {-hi[full_mask() & ~mask], hi[mask]};
    }
};

// Net excess at each terminal under a total flow: outflow - inflow at
// sources, inflow - outflow at sinks. Aligned with Typing's terminal order.
struct IOAssignment {
    std::vector<VertexId> terminals;
    std::vector<int> sigma;
    std::vector<Rat> value;
};

IOAssignment induced_io(const ExtFlowNetwork& n, const std::vector<Rat>& flow);

// True iff every subset constraint holds: the signed sum of g over A lies in
// t.interval(A) for all A.
bool satisfies(const IOAssignment& g, const Typing& t);

// Exact intervals for a single vertex: box constraints per incident edge
// (and the terminal excess, bounded by the incident capacities) intersected
// with the conservation hyperplane. Never throws on an empty polytope; the
// emptiness surfaces as lo > hi and is rejected at the first merge.
NodeTyping leaf_typing(const ExtFlowNetwork& n, VertexId v);

// Joins two node typings. Matched edges (items common to both sides) carry
// the same flow with opposite orientation, so for any split of the parent's
// items the matched subset C can be charged to both children; the parent
// bound is the minimum over C of the children's bounds, and the minimum is
// attained. Throws InfeasibleComponent when some parent interval comes out
// empty (possible only with positive lower bounds).
NodeTyping merge_typings(const NodeTyping& left, const NodeTyping& right);

// Folds leaf_typing/merge_typings over the reassembling and restricts the
// root to terminal subsets. The fold runs over scaled 64-bit integers when
// the capacities fit, otherwise over exact rationals; results are identical.
Typing compute_typing(const ExtFlowNetwork& n, const Reassembling& b);

// Full pipeline on a classic network: normalize into segments, make each
// segment cubic, reassemble, type, and read the segment value from the
// source interval; segment values combine by minimum along the chain.
Rat max_flow_value(const FlowNetwork& n);

// Typing of an extended network with lower bounds and terminal sets: makes
// the graph cubic (fresh cycle edges get lower bound zero), reassembles, and
// types. Throws Infeasible when no feasible circulation exists.
Typing flow_intervals(const ExtFlowNetwork& n);

} // namespace planeflow
