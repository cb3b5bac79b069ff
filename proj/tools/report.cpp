#include "report.hpp"

#include <algorithm>
#include <chrono>
#include <vector>

#include <planeflow/error.hpp>
#include <planeflow/faces.hpp>
#include <planeflow/oracle.hpp>
#include <planeflow/outerplanarity.hpp>
#include <planeflow/preprocess.hpp>
#include <planeflow/reassembling.hpp>
#include <planeflow/transform.hpp>
#include <planeflow/typing.hpp>

namespace pftool {

using namespace planeflow;

namespace {

using Clock = std::chrono::steady_clock;

long long us_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start).count();
}

Json action_json(const NormalizeAction& a) {
    Json j;
    switch (a.kind) {
        case NormalizeAction::Kind::SelectBlock: j["action"] = "select-block"; break;
        case NormalizeAction::Kind::Contract: j["action"] = "contract"; break;
        case NormalizeAction::Kind::Gadget: j["action"] = "gadget"; break;
    }
    j["segment"] = a.segment;
    if (a.a != kNone) j["a"] = a.a;
    if (a.b != kNone) j["b"] = a.b;
    if (!a.vertices.empty()) j["vertices"] = a.vertices;
    return j;
}

struct PeelStats {
    int ke = 0;
    int kv = 0;
};

PeelStats peel_stats(const PlaneDiGraph& g) {
    const UndirectedView u = undirect(g);
    const FaceSet fs = trace_faces(u, g);
    return {peel_edges(u, fs).k, peel_vertices(u, fs).k};
}

Json intervals_json(const Typing& t) {
    Json arr = Json::array();
    for (std::uint32_t m = 0; m <= t.full_mask(); ++m) {
        Json row;
        Json subset = Json::array();
        for (std::size_t i = 0; i < t.terminals.size(); ++i)
            if (m & (1u << i)) subset.push_back(t.terminals[i]);
        row["subset"] = std::move(subset);
        const Interval iv = t.interval(m);
        row["lo"] = rational_to_string(iv.lo);
        row["hi"] = rational_to_string(iv.hi);
        arr.push_back(std::move(row));
    }
    return arr;
}

// Mirrors flow_intervals stage by stage so each stage can be timed.
Json run_extended(const PfnFile& f, const PipelineOptions& opt, Json report) {
    ExtFlowNetwork e = to_extended_network(f);
    validate_network(e);
    Json timings;
    std::size_t maxdeg = 0;
    for (const auto& row : undirect(e.g).rotation) maxdeg = std::max(maxdeg, row.size());

    auto t = Clock::now();
    if (maxdeg > 3) {
        FlowNetwork plain;
        plain.g = e.g;
        plain.upper = e.upper;
        plain.s = e.sources[0];
        plain.t = e.sinks[0];
        const CubicResult cr = to_cubic(plain);
        ExtFlowNetwork w;
        w.g = cr.net.g;
        w.upper = cr.net.upper;
        w.lower.assign(w.g.edges.size(), Rat(0));
        for (EdgeId ed = 0; ed < w.g.edges.size(); ++ed)
            if (cr.edge_origin[ed] != kNone) w.lower[ed] = e.lower[cr.edge_origin[ed]];
        w.sources = e.sources;
        w.sinks = e.sinks;
        e = std::move(w);
    }
    timings["transform"] = us_since(t);

    t = Clock::now();
    const PeelStats ps = peel_stats(e.g);
    timings["outerplanarity"] = us_since(t);

    t = Clock::now();
    const Reassembling b = build_reassembling(e.g);
    const AlphaMeasure am = alpha_measure(e.g, b);
    timings["reassemble"] = us_since(t);

    t = Clock::now();
    Typing tau;
    try {
        tau = compute_typing(e, b);
    } catch (const Error& err) {
        if (err.code() == ErrorCode::InfeasibleComponent)
            reject(ErrorCode::Infeasible, "no circulation meets the lower bounds");
        throw;
    }
    timings["typing"] = us_since(t);

    report["k"] = ps.ke;
    report["k_v"] = ps.kv;
    report["alpha"] = am.alpha;
    report["terminals"] = tau.terminals;
    report["sigma"] = tau.sigma;
    report["intervals"] = intervals_json(tau);

    if (opt.verify) {
        t = Clock::now();
        const ExtFlowNetwork orig = to_extended_network(f);
        std::vector<VertexId> all(orig.g.vertex_count());
        for (VertexId v = 0; v < all.size(); ++v) all[v] = v;
        bool agree = true;
        Json diffs = Json::array();
        for (std::uint32_t m = 0; m <= tau.full_mask(); ++m) {
            const auto [lo, hi] = project_interval(orig, all, m);
            const Interval iv = tau.interval(m);
            if (iv.lo != lo || iv.hi != hi) {
                agree = false;
                Json d;
                d["mask"] = m;
                d["got"] = {rational_to_string(iv.lo), rational_to_string(iv.hi)};
                d["want"] = {rational_to_string(lo), rational_to_string(hi)};
                diffs.push_back(std::move(d));
            }
        }
        timings["oracle"] = us_since(t);
        Json o;
        o["agree"] = agree;
        if (!agree) o["diffs"] = std::move(diffs);
        report["oracle"] = std::move(o);
    }
    report["timings_us"] = std::move(timings);
    return report;
}

Json run_plain(const PfnFile& f, const PipelineOptions& opt, Json report) {
    const FlowNetwork n = to_network(f);
    Json timings;
    auto t = Clock::now();
    const Normalized nz = normalize(n);
    timings["normalize"] = us_since(t);

    long long t_transform = 0, t_peel = 0, t_reassemble = 0, t_typing = 0;
    int ke = 0, kv = 0;
    std::size_t alpha = 0;
    std::vector<Rat> vals;
    for (const Segment& seg : nz.segments) {
        if (seg.degenerate) {
            vals.push_back(seg.direct_value);
            continue;
        }
        t = Clock::now();
        const CubicResult cr = to_cubic(seg.net);
        t_transform += us_since(t);

        t = Clock::now();
        const PeelStats ps = peel_stats(cr.net.g);
        t_peel += us_since(t);
        ke = std::max(ke, ps.ke);
        kv = std::max(kv, ps.kv);

        t = Clock::now();
        const Reassembling b = build_reassembling(cr.net.g);
        const AlphaMeasure am = alpha_measure(cr.net.g, b);
        t_reassemble += us_since(t);
        alpha = std::max(alpha, am.alpha);

        t = Clock::now();
        const Typing tau = compute_typing(to_extended(cr.net), b);
        const std::uint32_t smask = tau.terminals[0] == cr.net.s ? 1u : 2u;
        vals.push_back(tau.interval(smask).hi);
        t_typing += us_since(t);
    }
    const Rat value = combine_segment_values(vals);
    timings["transform"] = t_transform;
    timings["outerplanarity"] = t_peel;
    timings["reassemble"] = t_reassemble;
    timings["typing"] = t_typing;

    report["k"] = ke;
    report["k_v"] = kv;
    report["alpha"] = alpha;
    Json segvals = Json::array();
    for (const Rat& v : vals) segvals.push_back(rational_to_string(v));
    report["segment_values"] = std::move(segvals);
    report["value"] = rational_to_string(value);
    Json actions = Json::array();
    for (const NormalizeAction& a : nz.report.actions) actions.push_back(action_json(a));
    report["normalization"] = std::move(actions);

    if (opt.verify) {
        t = Clock::now();
        const Rat oracle = dinic_max_flow(n).value;
        timings["oracle"] = us_since(t);
        Json o;
        o["value"] = rational_to_string(oracle);
        o["agree"] = oracle == value;
        report["oracle"] = std::move(o);
    }
    report["timings_us"] = std::move(timings);
    return report;
}

} // namespace

Json run_pipeline(const PfnFile& f, const PipelineOptions& opt) {
    Json report;
    report["n"] = f.g.vertex_count();
    report["m"] = f.g.edge_count();
    report["mode"] = opt.extended ? "extended" : "maxflow";
    return opt.extended ? run_extended(f, opt, std::move(report))
                        : run_plain(f, opt, std::move(report));
}

Json preprocess_report(const PfnFile& f) {
    const Normalized nz = normalize(to_network(f));
    Json report;
    report["n"] = f.g.vertex_count();
    report["m"] = f.g.edge_count();
    Json segs = Json::array();
    for (const Segment& seg : nz.segments) {
        Json s;
        s["n"] = seg.net.g.vertex_count();
        s["m"] = seg.net.g.edge_count();
        s["degenerate"] = seg.degenerate;
        if (seg.degenerate) s["value"] = rational_to_string(seg.direct_value);
        segs.push_back(std::move(s));
    }
    report["segments"] = std::move(segs);
    Json actions = Json::array();
    for (const NormalizeAction& a : nz.report.actions) actions.push_back(action_json(a));
    report["actions"] = std::move(actions);
    return report;
}

Json outerplanarity_report(const PfnFile& f, bool layers) {
    const UndirectedView u = undirect(f.g);
    const FaceSet fs = trace_faces(u, f.g);
    const EdgePeel ep = peel_edges(u, fs);
    const VertexPeel vp = peel_vertices(u, fs);
    Json report;
    report["n"] = f.g.vertex_count();
    report["m"] = f.g.edge_count();
    report["k_e"] = ep.k;
    report["k_v"] = vp.k;
    if (layers) {
        Json el = Json::array();
        for (EdgeId e = 0; e < f.g.edge_count(); ++e)
            el.push_back(ep.layer[u.uedge_of_edge[e]]);
        report["edge_layers"] = std::move(el);
        report["vertex_layers"] = vp.layer;
    }
    return report;
}

Json reassemble_report(const PfnFile& f, bool tree) {
    const Reassembling b = build_reassembling(f.g);
    const AlphaMeasure am = alpha_measure(f.g, b);
    const PeelStats ps = peel_stats(f.g);
    Json report;
    report["n"] = f.g.vertex_count();
    report["m"] = f.g.edge_count();
    report["k_e"] = ps.ke;
    report["alpha"] = am.alpha;
    report["widest_node"] = am.argmax_node;
    report["within_twice_k"] = am.alpha <= 2u * static_cast<unsigned>(ps.ke);
    if (tree) report["tree"] = export_tree(b);
    return report;
}

} // namespace pftool
