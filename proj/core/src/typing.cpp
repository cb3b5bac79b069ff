#include "planeflow/typing.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <utility>
#include <vector>

#include "planeflow/error.hpp"
#include "planeflow/preprocess.hpp"
#include "planeflow/transform.hpp"

namespace planeflow {
namespace {

constexpr std::size_t kMaxItems = 22;    // subset masks stay within uint32
constexpr std::size_t kMaxWorkBits = 28; // per-merge enumeration 2^(p+|matched|)

template <class Num>
struct NodeState {
    std::vector<EdgeId> edges; // ascending; bit i of a mask is edges[i]
    std::vector<int> esigma;   // +1 when the head lies inside
    std::vector<VertexId> terms; // ascending; bits follow the edge bits
    std::vector<int> tsigma;     // +1 source, -1 sink
    std::vector<Num> hi;

    std::size_t items() const { return edges.size() + terms.size(); }
};

// Subset-sum tables over the item boxes, then each upper end is the smaller
// of "A at its box maximum" and "the complement absorbing -sum(A) at its box
// minimum"; the conservation hyperplane makes both reachable.
template <class Num>
void box_to_intervals(const std::vector<Num>& bl, const std::vector<Num>& bh,
                      std::vector<Num>& out) {
    const std::size_t p = bl.size();
    const std::uint32_t full = static_cast<std::uint32_t>((1ull << p) - 1);
    std::vector<Num> slo(full + 1u, Num(0)), shi(full + 1u, Num(0));
    for (std::uint32_t m = 1; m <= full; ++m) {
        const unsigned b = static_cast<unsigned>(std::countr_zero(m));
        slo[m] = slo[m & (m - 1)] + bl[b];
        shi[m] = shi[m & (m - 1)] + bh[b];
    }
    out.resize(full + 1u);
    for (std::uint32_t m = 0; m <= full; ++m) {
        Num cap = -slo[full ^ m];
        if (shi[m] < cap)
            out[m] = shi[m];
        else
            out[m] = std::move(cap);
    }
}

template <class Num>
void check_nonempty(const NodeState<Num>& st) {
    const std::uint32_t full = static_cast<std::uint32_t>(st.hi.size()) - 1u;
    for (std::uint32_t m = 0; m <= full; ++m) {
        if (st.hi[m] + st.hi[full ^ m] < 0)
            reject(ErrorCode::InfeasibleComponent,
                   "no partial flow meets the lower bounds on a component");
    }
}

// Matched edges carry one flow seen with opposite signs by the two sides, so
// their joint contribution is zero and any matched subset C can be charged
// to both children at once. Minimizing over C gives the exact upper end of
// every parent subset.
template <class Num>
NodeState<Num> merge_states(const NodeState<Num>& l, const NodeState<Num>& r) {
    NodeState<Num> p;
    std::vector<std::pair<unsigned, unsigned>> matched; // bit in l, bit in r
    std::vector<int> side;                              // per parent item
    std::vector<unsigned> cbit;
    {
        std::size_t i = 0, j = 0;
        while (i < l.edges.size() || j < r.edges.size()) {
            if (j == r.edges.size() || (i < l.edges.size() && l.edges[i] < r.edges[j])) {
                p.edges.push_back(l.edges[i]);
                p.esigma.push_back(l.esigma[i]);
                side.push_back(0);
                cbit.push_back(static_cast<unsigned>(i));
                ++i;
            } else if (i == l.edges.size() || r.edges[j] < l.edges[i]) {
                p.edges.push_back(r.edges[j]);
                p.esigma.push_back(r.esigma[j]);
                side.push_back(1);
                cbit.push_back(static_cast<unsigned>(j));
                ++j;
            } else {
                if (l.esigma[i] + r.esigma[j] != 0)
                    reject(ErrorCode::InvalidParams,
                           "a shared edge must inject on one side and extract on the other");
                matched.push_back({static_cast<unsigned>(i), static_cast<unsigned>(j)});
                ++i;
                ++j;
            }
        }
    }
    {
        const unsigned loff = static_cast<unsigned>(l.edges.size());
        const unsigned roff = static_cast<unsigned>(r.edges.size());
        std::size_t i = 0, j = 0;
        while (i < l.terms.size() || j < r.terms.size()) {
            if (j == r.terms.size() || (i < l.terms.size() && l.terms[i] < r.terms[j])) {
                p.terms.push_back(l.terms[i]);
                p.tsigma.push_back(l.tsigma[i]);
                side.push_back(0);
                cbit.push_back(loff + static_cast<unsigned>(i));
                ++i;
            } else {
                if (i < l.terms.size() && l.terms[i] == r.terms[j])
                    reject(ErrorCode::InvalidParams, "a terminal cannot sit on both sides");
                p.terms.push_back(r.terms[j]);
                p.tsigma.push_back(r.tsigma[j]);
                side.push_back(1);
                cbit.push_back(roff + static_cast<unsigned>(j));
                ++j;
            }
        }
    }
    const std::size_t np = p.items();
    if (np > kMaxItems || np + matched.size() > kMaxWorkBits)
        reject(ErrorCode::DeltaTooLarge,
               "merged boundary needs " + std::to_string(np) + " items and " +
                   std::to_string(matched.size()) + " matched edges");

    const std::uint32_t full = static_cast<std::uint32_t>((1ull << np) - 1);
    std::vector<std::uint32_t> sl(full + 1u, 0), sr(full + 1u, 0);
    for (std::uint32_t m = 1; m <= full; ++m) {
        const unsigned b = static_cast<unsigned>(std::countr_zero(m));
        const std::uint32_t rest = m & (m - 1);
        sl[m] = sl[rest] | (side[b] == 0 ? (1u << cbit[b]) : 0u);
        sr[m] = sr[rest] | (side[b] == 1 ? (1u << cbit[b]) : 0u);
    }
    const std::uint32_t combos = 1u << matched.size();
    std::vector<std::uint32_t> cl(combos, 0), cr(combos, 0);
    for (std::uint32_t c = 1; c < combos; ++c) {
        const unsigned b = static_cast<unsigned>(std::countr_zero(c));
        cl[c] = cl[c & (c - 1)] | (1u << matched[b].first);
        cr[c] = cr[c & (c - 1)] | (1u << matched[b].second);
    }
    p.hi.resize(full + 1u);
    for (std::uint32_t m = 0; m <= full; ++m) {
        Num best = l.hi[sl[m]] + r.hi[sr[m]];
        for (std::uint32_t c = 1; c < combos; ++c) {
            Num cand = l.hi[sl[m] | cl[c]] + r.hi[sr[m] | cr[c]];
            if (cand < best) best = std::move(cand);
        }
        p.hi[m] = std::move(best);
    }
    check_nonempty(p);
    return p;
}

template <class Num>
struct Engine {
    const ExtFlowNetwork& net;
    std::vector<Num> up, lo;
    std::vector<std::vector<EdgeId>> inc;
    std::vector<int> tsig;

    Engine(const ExtFlowNetwork& n, std::vector<Num> u, std::vector<Num> w)
        : net(n), up(std::move(u)), lo(std::move(w)) {
        inc.assign(n.g.rotation.size(), {});
        for (EdgeId e = 0; e < n.g.edges.size(); ++e) {
            inc[n.g.edges[e].tail].push_back(e);
            inc[n.g.edges[e].head].push_back(e);
        }
        tsig.assign(n.g.rotation.size(), 0);
        for (const VertexId s : n.sources) tsig[s] = 1;
        for (const VertexId t : n.sinks) tsig[t] = -1;
    }

    NodeState<Num> leaf(VertexId v) const {
        NodeState<Num> st;
        st.edges = inc[v];
        std::vector<Num> bl, bh;
        Num ghi(0), glo(0); // terminal excess implied by the incident bounds
        for (const EdgeId e : st.edges) {
            const bool in = net.g.edges[e].head == v;
            st.esigma.push_back(in ? 1 : -1);
            if (in) {
                bl.push_back(lo[e]);
                bh.push_back(up[e]);
                ghi -= lo[e];
                glo -= up[e];
            } else {
                bl.push_back(-up[e]);
                bh.push_back(-lo[e]);
                ghi += up[e];
                glo += lo[e];
            }
        }
        if (tsig[v] > 0) {
            st.terms = {v};
            st.tsigma = {1};
            bl.push_back(Num(0));
            bh.push_back(std::move(ghi));
        } else if (tsig[v] < 0) {
            st.terms = {v};
            st.tsigma = {-1};
            bl.push_back(std::move(glo));
            bh.push_back(Num(0));
        }
        box_to_intervals(bl, bh, st.hi);
        return st;
    }

    NodeState<Num> fold(const Reassembling& b) const {
        std::vector<NodeState<Num>> st(b.nodes.size());
        std::vector<std::pair<int, bool>> stack{{b.root, false}};
        while (!stack.empty()) {
            const auto [id, expanded] = stack.back();
            stack.pop_back();
            const auto& nd = b.nodes[static_cast<std::size_t>(id)];
            if (nd.left < 0) {
                st[id] = leaf(nd.vertex);
                continue;
            }
            if (!expanded) {
                stack.push_back({id, true});
                stack.push_back({nd.left, false});
                stack.push_back({nd.right, false});
                continue;
            }
            st[id] = merge_states(st[nd.left], st[nd.right]);
            st[nd.left] = NodeState<Num>{};
            st[nd.right] = NodeState<Num>{};
        }
        check_nonempty(st[b.root]); // single-leaf trees see no merge
        return std::move(st[b.root]);
    }
};

NodeTyping to_public(NodeState<Rat>&& st) {
    NodeTyping out;
    for (std::size_t i = 0; i < st.edges.size(); ++i) {
        NodeTyping::Item it;
        it.is_edge = true;
        it.edge = st.edges[i];
        it.sigma = st.esigma[i];
        out.items.push_back(it);
    }
    for (std::size_t i = 0; i < st.terms.size(); ++i) {
        NodeTyping::Item it;
        it.is_edge = false;
        it.terminal = st.terms[i];
        it.sigma = st.tsigma[i];
        out.items.push_back(it);
    }
    out.hi = std::move(st.hi);
    return out;
}

NodeState<Rat> to_state(const NodeTyping& t) {
    NodeState<Rat> st;
    bool edges_done = false;
    for (const auto& it : t.items) {
        if (it.is_edge) {
            if (edges_done || (!st.edges.empty() && st.edges.back() >= it.edge))
                reject(ErrorCode::InvalidParams, "items must list edges ascending first");
            st.edges.push_back(it.edge);
            st.esigma.push_back(it.sigma);
        } else {
            edges_done = true;
            if (!st.terms.empty() && st.terms.back() >= it.terminal)
                reject(ErrorCode::InvalidParams, "terminal items must ascend");
            st.terms.push_back(it.terminal);
            st.tsigma.push_back(it.sigma);
        }
    }
    if (t.hi.size() != (1ull << st.items()))
        reject(ErrorCode::InvalidParams, "interval table size mismatch");
    st.hi = t.hi;
    return st;
}

std::pair<std::vector<VertexId>, std::vector<int>> terminal_order(const ExtFlowNetwork& n) {
    std::vector<VertexId> ts;
    std::vector<int> sg;
    std::size_t i = 0, j = 0;
    while (i < n.sources.size() || j < n.sinks.size()) {
        if (j == n.sinks.size() ||
            (i < n.sources.size() && n.sources[i] < n.sinks[j])) {
            ts.push_back(n.sources[i++]);
            sg.push_back(1);
        } else {
            ts.push_back(n.sinks[j++]);
            sg.push_back(-1);
        }
    }
    return {ts, sg};
}

// Scaled 64-bit path: all bounds times the common denominator, provided the
// total grosses well under the overflow line.
struct Scaled {
    bool ok = false;
    mpz_class den;
    std::vector<long long> up, lo;
};

Scaled try_scale(const ExtFlowNetwork& n) {
    Scaled sc;
    sc.den = 1;
    for (const Rat& r : n.upper) sc.den = lcm(sc.den, r.get_den());
    for (const Rat& r : n.lower) sc.den = lcm(sc.den, r.get_den());
    mpz_class tot = 0;
    const auto scaled = [&](const Rat& r) { return mpz_class(r.get_num() * (sc.den / r.get_den())); };
    for (const Rat& r : n.upper) tot += abs(scaled(r));
    for (const Rat& r : n.lower) tot += abs(scaled(r));
    mpz_class limit = 1;
    limit <<= 55;
    if (tot >= limit) return sc;
    sc.ok = true;
    sc.up.reserve(n.upper.size());
    sc.lo.reserve(n.lower.size());
    for (const Rat& r : n.upper) sc.up.push_back(scaled(r).get_si());
    for (const Rat& r : n.lower) sc.lo.push_back(scaled(r).get_si());
    return sc;
}

} // namespace

IOAssignment induced_io(const ExtFlowNetwork& n, const std::vector<Rat>& flow) {
    validate_network(n);
    if (flow.size() != n.g.edges.size())
        reject(ErrorCode::InvalidParams, "flow vector size mismatch");
    std::vector<Rat> excess(n.g.rotation.size(), Rat(0)); // outflow - inflow
    for (EdgeId e = 0; e < flow.size(); ++e) {
        excess[n.g.edges[e].tail] += flow[e];
        excess[n.g.edges[e].head] -= flow[e];
    }
    IOAssignment out;
    auto [ts, sg] = terminal_order(n);
    out.terminals = std::move(ts);
    out.sigma = std::move(sg);
    for (std::size_t i = 0; i < out.terminals.size(); ++i) {
        Rat ex = excess[out.terminals[i]];
        if (out.sigma[i] < 0) ex = -ex;
        out.value.push_back(std::move(ex));
    }
    return out;
}

bool satisfies(const IOAssignment& g, const Typing& t) {
    if (g.terminals != t.terminals)
        reject(ErrorCode::InvalidParams, "assignment and typing disagree on terminals");
    const std::uint32_t full = t.full_mask();
    std::vector<Rat> sum(full + 1u, Rat(0));
    for (std::uint32_t m = 1; m <= full; ++m) {
        const unsigned b = static_cast<unsigned>(std::countr_zero(m));
        if (g.sigma[b] > 0)
            sum[m] = sum[m & (m - 1)] + g.value[b];
        else
            sum[m] = sum[m & (m - 1)] - g.value[b];
    }
    for (std::uint32_t m = 0; m <= full; ++m) {
        const Interval iv = t.interval(m);
        if (sum[m] < iv.lo || iv.hi < sum[m]) return false;
    }
    return true;
}

NodeTyping leaf_typing(const ExtFlowNetwork& n, VertexId v) {
    validate_network(n);
    if (v >= n.g.rotation.size()) reject(ErrorCode::InvalidParams, "vertex out of range");
    Engine<Rat> eng(n, n.upper, n.lower);
    return to_public(eng.leaf(v));
}

NodeTyping merge_typings(const NodeTyping& left, const NodeTyping& right) {
    return to_public(merge_states(to_state(left), to_state(right)));
}

Typing compute_typing(const ExtFlowNetwork& n, const Reassembling& b) {
    validate_network(n);
    alpha_measure(n.g, b); // rejects trees that do not fit the graph
    Typing out;
    auto [ts, sg] = terminal_order(n);
    out.terminals = std::move(ts);
    out.sigma = std::move(sg);
    if (out.terminals.size() > kMaxItems)
        reject(ErrorCode::DeltaTooLarge, "too many terminals for subset masks");

    const Scaled sc = try_scale(n);
    if (sc.ok) {
        Engine<long long> eng(n, sc.up, sc.lo);
        NodeState<long long> root = eng.fold(b);
        assert(root.edges.empty());
        assert(root.terms == out.terminals);
        out.hi.reserve(root.hi.size());
        for (const long long h : root.hi) {
            Rat r(mpz_class(static_cast<long>(h)), sc.den);
            r.canonicalize();
            out.hi.push_back(std::move(r));
        }
        return out;
    }
    Engine<Rat> eng(n, n.upper, n.lower);
    NodeState<Rat> root = eng.fold(b);
    assert(root.edges.empty());
    assert(root.terms == out.terminals);
    out.hi = std::move(root.hi);
    return out;
}

Rat max_flow_value(const FlowNetwork& n) {
    const Normalized nz = normalize(n);
    std::vector<Rat> vals;
    for (const Segment& seg : nz.segments) {
        if (seg.degenerate) {
            vals.push_back(seg.direct_value);
            continue;
        }
        const CubicResult cr = to_cubic(seg.net);
        const Reassembling b = build_reassembling(cr.net.g);
        const Typing tau = compute_typing(to_extended(cr.net), b);
        // terminals are {s, t}; the source interval is [0, value]
        const std::uint32_t smask = tau.terminals[0] == cr.net.s ? 1u : 2u;
        vals.push_back(tau.interval(smask).hi);
    }
    return combine_segment_values(vals);
}

Typing flow_intervals(const ExtFlowNetwork& n) {
    validate_network(n);
    std::size_t maxdeg = 0;
    for (const auto& row : undirect(n.g).rotation) maxdeg = std::max(maxdeg, row.size());
    ExtFlowNetwork w;
    if (maxdeg > 3) {
        FlowNetwork f;
        f.g = n.g;
        f.upper = n.upper;
        f.s = n.sources[0];
        f.t = n.sinks[0];
        const CubicResult cr = to_cubic(f);
        w.g = cr.net.g;
        w.upper = cr.net.upper;
        w.lower.assign(w.g.edges.size(), Rat(0));
        for (EdgeId e = 0; e < w.g.edges.size(); ++e) {
            if (cr.edge_origin[e] != kNone) w.lower[e] = n.lower[cr.edge_origin[e]];
        }
        w.sources = n.sources;
        w.sinks = n.sinks;
    } else {
        w = n;
    }
    const Reassembling b = build_reassembling(w.g);
    try {
        return compute_typing(w, b);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::InfeasibleComponent)
            reject(ErrorCode::Infeasible, "no circulation meets the lower bounds");
        throw;
    }
}

} // namespace planeflow
