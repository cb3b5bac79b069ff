#include "planeflow/pfn_io.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <string>
#include <vector>

#include "planeflow/error.hpp"

namespace planeflow {
namespace {

[[noreturn]] void fail(int lineno, const std::string& msg) {
    reject(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": " + msg);
}

std::uint32_t parse_id(const std::string& tok, int lineno, const char* what) {
    if (tok.empty() || tok.size() > 9 ||
        tok.find_first_not_of("0123456789") != std::string::npos)
        fail(lineno, std::string("bad ") + what + " '" + tok + "'");
    return static_cast<std::uint32_t>(std::stoul(tok));
}

Rat parse_bound(const std::string& tok, int lineno) {
    const auto r = parse_rational(tok);
    if (!r) fail(lineno, "malformed rational '" + tok + "'");
    if (*r < 0) fail(lineno, "negative bound '" + tok + "'");
    return *r;
}

std::vector<VertexId> parse_terminals(const std::vector<std::string>& toks, int lineno) {
    if (toks.size() < 2) fail(lineno, "terminal line lists no vertices");
    std::vector<VertexId> ids;
    for (std::size_t i = 1; i < toks.size(); ++i)
        ids.push_back(parse_id(toks[i], lineno, "vertex id"));
    std::sort(ids.begin(), ids.end());
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
        fail(lineno, "terminal listed twice");
    return ids;
}

} // namespace

PfnFile parse_pfn(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    bool saw_header = false;
    bool saw_n = false, saw_m = false, saw_outer = false;
    std::size_t n = 0, m = 0;
    std::vector<std::vector<EdgeId>> rot;
    std::vector<bool> vseen;
    std::vector<PlaneDiGraph::Edge> edges;
    std::vector<bool> eseen;
    PfnFile f;
    EdgeId outer = kNone;
    bool flip = false;

    while (std::getline(in, raw)) {
        ++lineno;
        if (const auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
        std::istringstream ls(raw);
        std::vector<std::string> toks;
        for (std::string t; ls >> t;) toks.push_back(t);
        if (toks.empty()) continue;

        if (!saw_header) {
            if (toks.size() != 2 || toks[0] != "pfn" || toks[1] != "1")
                fail(lineno, "expected header 'pfn 1'");
            saw_header = true;
            continue;
        }
        const std::string& kind = toks[0];
        if (kind == "n" || kind == "m") {
            if (toks.size() != 2) fail(lineno, "count line takes one number");
            const std::size_t c = parse_id(toks[1], lineno, "count");
            if (kind == "n") {
                if (saw_n) fail(lineno, "duplicate n line");
                saw_n = true;
                n = c;
                rot.assign(n, {});
                vseen.assign(n, false);
            } else {
                if (saw_m) fail(lineno, "duplicate m line");
                saw_m = true;
                m = c;
                edges.assign(m, {});
                eseen.assign(m, false);
                f.upper.assign(m, Rat(0));
                f.lower.assign(m, Rat(0));
            }
        } else if (kind == "v") {
            if (!saw_n) fail(lineno, "vertex line before the n count");
            if (toks.size() < 2) fail(lineno, "vertex line missing its id");
            const VertexId v = parse_id(toks[1], lineno, "vertex id");
            if (v >= n) fail(lineno, "vertex id beyond the declared count");
            if (vseen[v]) fail(lineno, "duplicate vertex line");
            vseen[v] = true;
            for (std::size_t i = 2; i < toks.size(); ++i)
                rot[v].push_back(parse_id(toks[i], lineno, "edge id"));
        } else if (kind == "e") {
            if (!saw_m) fail(lineno, "edge line before the m count");
            if (toks.size() != 5 && toks.size() != 6)
                fail(lineno, "edge line takes id, tail, head, upper and an optional lower");
            const EdgeId e = parse_id(toks[1], lineno, "edge id");
            if (e >= m) fail(lineno, "edge id beyond the declared count");
            if (eseen[e]) fail(lineno, "duplicate edge line");
            eseen[e] = true;
            edges[e].tail = parse_id(toks[2], lineno, "vertex id");
            edges[e].head = parse_id(toks[3], lineno, "vertex id");
            f.upper[e] = parse_bound(toks[4], lineno);
            if (toks.size() == 6) {
                f.lower[e] = parse_bound(toks[5], lineno);
                f.has_lower = true;
                if (f.upper[e] < f.lower[e]) fail(lineno, "lower bound above the upper bound");
            }
        } else if (kind == "outer") {
            if (saw_outer) fail(lineno, "duplicate outer line");
            if (toks.size() != 2 && !(toks.size() == 3 && toks[2] == "rev"))
                fail(lineno, "outer line takes an edge id and an optional 'rev'");
            saw_outer = true;
            outer = parse_id(toks[1], lineno, "edge id");
            flip = toks.size() == 3;
        } else if (kind == "s") {
            if (!f.sources.empty()) fail(lineno, "duplicate s line");
            f.sources = parse_terminals(toks, lineno);
        } else if (kind == "t") {
            if (!f.sinks.empty()) fail(lineno, "duplicate t line");
            f.sinks = parse_terminals(toks, lineno);
        } else {
            fail(lineno, "unknown line kind '" + kind + "'");
        }
    }

    if (!saw_header) fail(lineno, "empty input");
    if (!saw_n || !saw_m) fail(lineno, "missing n or m count");
    for (std::size_t v = 0; v < n; ++v)
        if (!vseen[v]) fail(lineno, "vertex " + std::to_string(v) + " has no line");
    for (std::size_t e = 0; e < m; ++e)
        if (!eseen[e]) fail(lineno, "edge " + std::to_string(e) + " has no line");
    if (m > 0 && !saw_outer) fail(lineno, "missing outer line");
    if (m > 0 && outer >= m) fail(lineno, "outer witness beyond the edge count");
    if (f.sources.empty()) fail(lineno, "missing s line");
    if (f.sinks.empty()) fail(lineno, "missing t line");
    for (const VertexId v : f.sources)
        if (v >= n) fail(lineno, "source beyond the vertex count");
    for (const VertexId v : f.sinks)
        if (v >= n) fail(lineno, "sink beyond the vertex count");

    f.g = build_plane_graph(std::move(edges), std::move(rot), m > 0 ? outer : kNone, flip);
    return f;
}

std::string print_pfn(const PfnFile& f) {
    assert(f.upper.size() == f.g.edge_count());
    std::ostringstream out;
    out << "pfn 1\n";
    out << "n " << f.g.vertex_count() << "\n";
    out << "m " << f.g.edge_count() << "\n";
    for (VertexId v = 0; v < f.g.vertex_count(); ++v) {
        out << "v " << v;
        for (const EdgeId e : f.g.rotation[v]) out << " " << e;
        out << "\n";
    }
    for (EdgeId e = 0; e < f.g.edge_count(); ++e) {
        out << "e " << e << " " << f.g.edges[e].tail << " " << f.g.edges[e].head << " "
            << rational_to_string(f.upper[e]);
        if (f.has_lower) out << " " << rational_to_string(f.lower.at(e));
        out << "\n";
    }
    if (f.g.edge_count() > 0) {
        out << "outer " << f.g.outer_edge;
        if (f.g.outer_flip) out << " rev";
        out << "\n";
    }
    out << "s";
    for (const VertexId v : f.sources) out << " " << v;
    out << "\nt";
    for (const VertexId v : f.sinks) out << " " << v;
    out << "\n";
    return out.str();
}

PfnFile to_pfn(const FlowNetwork& n) {
    PfnFile f;
    f.g = n.g;
    f.upper = n.upper;
    f.lower.assign(n.upper.size(), Rat(0));
    f.sources = {n.s};
    f.sinks = {n.t};
    return f;
}

PfnFile to_pfn(const ExtFlowNetwork& n) {
    PfnFile f;
    f.g = n.g;
    f.upper = n.upper;
    f.lower = n.lower;
    for (const Rat& r : n.lower)
        if (r != 0) f.has_lower = true;
    f.sources = n.sources;
    f.sinks = n.sinks;
    return f;
}

FlowNetwork to_network(const PfnFile& f) {
    if (f.sources.size() != 1 || f.sinks.size() != 1)
        reject(ErrorCode::InvalidParams,
               "plain networks take exactly one source and one sink");
    for (const Rat& r : f.lower)
        if (r != 0)
            reject(ErrorCode::InvalidParams, "lower bounds need the extended pipeline");
    FlowNetwork n;
    n.g = f.g;
    n.upper = f.upper;
    n.s = f.sources[0];
    n.t = f.sinks[0];
    return n;
}

ExtFlowNetwork to_extended_network(const PfnFile& f) {
    ExtFlowNetwork n;
    n.g = f.g;
    n.upper = f.upper;
    n.lower = f.lower.empty() ? std::vector<Rat>(f.upper.size(), Rat(0)) : f.lower;
    n.sources = f.sources;
    n.sinks = f.sinks;
    return n;
}

} // namespace planeflow
