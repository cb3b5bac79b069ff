#include "planeflow/network.hpp"

#include <algorithm>

namespace planeflow {

namespace {

void check_caps(const PlaneDiGraph& g, const std::vector<Rat>& upper,
                const std::vector<Rat>& lower) {
    if (upper.size() != g.edge_count())
        reject(ErrorCode::InvalidParams, "capacity vector size mismatch");
    if (lower.size() != g.edge_count())
        reject(ErrorCode::InvalidParams, "lower bound vector size mismatch");
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (lower[e] < 0)
            reject(ErrorCode::InvalidParams, "negative lower bound on edge " + std::to_string(e));
        if (upper[e] < lower[e])
            reject(ErrorCode::InvalidParams, "upper < lower on edge " + std::to_string(e));
    }
}

void check_terminals(const PlaneDiGraph& g, const std::vector<VertexId>& sources,
                     const std::vector<VertexId>& sinks) {
    if (sources.empty() || sinks.empty())
        reject(ErrorCode::InvalidParams, "source and sink sets must be nonempty");
    auto check_set = [&](const std::vector<VertexId>& set, const char* what) {
        for (std::size_t i = 0; i < set.size(); ++i) {
            if (set[i] >= g.vertex_count())
                reject(ErrorCode::InvalidParams, std::string(what) + " out of range");
            if (i > 0 && set[i - 1] >= set[i])
                reject(ErrorCode::InvalidParams, std::string(what) + " set not strictly ascending");
        }
    };
    check_set(sources, "source");
    check_set(sinks, "sink");
    for (VertexId s : sources)
        if (std::binary_search(sinks.begin(), sinks.end(), s))
            reject(ErrorCode::InvalidParams, "terminal " + std::to_string(s) + " is both source and sink");
}

} // namespace

ExtFlowNetwork to_extended(const FlowNetwork& n) {
    ExtFlowNetwork ext;
    ext.g = n.g;
    ext.upper = n.upper;
    ext.lower.assign(n.g.edge_count(), Rat(0));
    ext.sources = {n.s};
    ext.sinks = {n.t};
    return ext;
}

void validate_network(const FlowNetwork& n) {
    std::vector<Rat> zeros(n.g.edge_count(), Rat(0));
    check_caps(n.g, n.upper, zeros);
    if (n.s == n.t) reject(ErrorCode::InvalidParams, "source equals sink");
    check_terminals(n.g, {n.s}, {n.t});
}

void validate_network(const ExtFlowNetwork& n) {
    check_caps(n.g, n.upper, n.lower);
    check_terminals(n.g, n.sources, n.sinks);
}

} // namespace planeflow
