#include "planeflow/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <queue>

#include "planeflow/simplex.hpp"

namespace planeflow {

namespace {

// Residual graph with paired arcs: arc i and i^1 are reverses of each other.
struct ResidualGraph {
    struct Arc {
        VertexId to;
        Rat cap;
    };
    std::vector<Arc> arcs;
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<int> level;
    std::vector<std::uint32_t> iter;

    explicit ResidualGraph(std::size_t n) : out(n), level(n), iter(n) {}

    std::uint32_t add(VertexId u, VertexId v, Rat cap) {
        std::uint32_t id = static_cast<std::uint32_t>(arcs.size());
        arcs.push_back({v, std::move(cap)});
        arcs.push_back({u, Rat(0)});
        out[u].push_back(id);
        out[v].push_back(id + 1);
        return id;
    }

    bool bfs(VertexId s, VertexId t) {
        std::fill(level.begin(), level.end(), -1);
        std::queue<VertexId> q;
        level[s] = 0;
        q.push(s);
        while (!q.empty()) {
            VertexId v = q.front();
            q.pop();
            for (std::uint32_t a : out[v]) {
                if (arcs[a].cap > 0 && level[arcs[a].to] < 0) {
                    level[arcs[a].to] = level[v] + 1;
                    q.push(arcs[a].to);
                }
            }
        }
        return level[t] >= 0;
    }

    Rat dfs(VertexId v, VertexId t, Rat limit) {
        if (v == t) return limit;
        for (std::uint32_t& i = iter[v]; i < out[v].size(); ++i) {
            std::uint32_t a = out[v][i];
            Arc& arc = arcs[a];
            if (arc.cap > 0 && level[v] < level[arc.to]) {
                Rat pushed = dfs(arc.to, t, rat_min(limit, arc.cap));
                if (pushed > 0) {
                    arc.cap -= pushed;
                    arcs[a ^ 1].cap += pushed;
                    return pushed;
                }
            }
        }
        return Rat(0);
    }

    Rat max_flow(VertexId s, VertexId t, const Rat& bound) {
        Rat total(0);
        while (bfs(s, t)) {
            std::fill(iter.begin(), iter.end(), 0);
            for (;;) {
                Rat pushed = dfs(s, t, bound);
                if (pushed == 0) break;
                total += pushed;
            }
        }
        return total;
    }
};

} // namespace

MaxFlowResult dinic_max_flow(const FlowNetwork& n) {
    validate_network(n);
    const std::size_t m = n.g.edge_count();
    ResidualGraph rg(n.g.vertex_count());
    std::vector<std::uint32_t> arc_of_edge(m);
    Rat bound(1);
    for (EdgeId e = 0; e < m; ++e) bound += n.upper[e];
    for (EdgeId e = 0; e < m; ++e)
        arc_of_edge[e] = rg.add(n.g.edges[e].tail, n.g.edges[e].head, n.upper[e]);

    MaxFlowResult res;
    res.value = rg.max_flow(n.s, n.t, bound);
    res.flow.resize(m);
    for (EdgeId e = 0; e < m; ++e)
        res.flow[e] = n.upper[e] - rg.arcs[arc_of_edge[e]].cap;

    // Certificate: residual-reachable side of s forms a cut of equal capacity.
    res.cut_side.assign(n.g.vertex_count(), false);
    std::queue<VertexId> q;
    res.cut_side[n.s] = true;
    q.push(n.s);
    while (!q.empty()) {
        VertexId v = q.front();
        q.pop();
        for (std::uint32_t a : rg.out[v])
            if (rg.arcs[a].cap > 0 && !res.cut_side[rg.arcs[a].to]) {
                res.cut_side[rg.arcs[a].to] = true;
                q.push(rg.arcs[a].to);
            }
    }
    assert(!res.cut_side[n.t]);
    Rat cut(0);
    for (EdgeId e = 0; e < m; ++e)
        if (res.cut_side[n.g.edges[e].tail] && !res.cut_side[n.g.edges[e].head]) cut += n.upper[e];
    assert(cut == res.value);
    return res;
}

std::optional<std::vector<Rat>> feasible_flow_with_lower_bounds(const ExtFlowNetwork& n,
                                                                const std::vector<Rat>& g) {
    validate_network(n);
    if (g.size() != n.sources.size() + n.sinks.size())
        reject(ErrorCode::InvalidParams, "excess vector size mismatch");
    for (const Rat& x : g)
        if (x < 0) reject(ErrorCode::InvalidParams, "negative terminal excess");

    const std::size_t nv = n.g.vertex_count();
    const std::size_t m = n.g.edge_count();
    // Required net outflow per vertex after substituting f = lower + f'.
    std::vector<Rat> need(nv, Rat(0));
    for (std::size_t i = 0; i < n.sources.size(); ++i) need[n.sources[i]] += g[i];
    for (std::size_t i = 0; i < n.sinks.size(); ++i) need[n.sinks[i]] -= g[n.sources.size() + i];
    for (EdgeId e = 0; e < m; ++e) {
        need[n.g.edges[e].tail] -= n.lower[e];
        need[n.g.edges[e].head] += n.lower[e];
    }

    VertexId super_s = static_cast<VertexId>(nv);
    VertexId super_t = static_cast<VertexId>(nv + 1);
    ResidualGraph rg(nv + 2);
    std::vector<std::uint32_t> arc_of_edge(m);
    Rat bound(1);
    for (EdgeId e = 0; e < m; ++e) {
        arc_of_edge[e] = rg.add(n.g.edges[e].tail, n.g.edges[e].head, n.upper[e] - n.lower[e]);
        bound += n.upper[e];
    }
    for (const Rat& x : g) bound += x;
    Rat supply(0);
    for (VertexId v = 0; v < nv; ++v) {
        if (need[v] > 0) {
            rg.add(super_s, v, need[v]);
            supply += need[v];
        } else if (need[v] < 0) {
            rg.add(v, super_t, -need[v]);
        }
    }
    Rat pushed = rg.max_flow(super_s, super_t, bound);
    if (pushed != supply) return std::nullopt;

    std::vector<Rat> flow(m);
    for (EdgeId e = 0; e < m; ++e)
        flow[e] = n.lower[e] + (n.upper[e] - n.lower[e] - rg.arcs[arc_of_edge[e]].cap);
    return flow;
}

std::vector<ComponentItem> items_of_component(const ExtFlowNetwork& n,
                                              const std::vector<VertexId>& comp) {
    auto inside = [&](VertexId v) { return std::binary_search(comp.begin(), comp.end(), v); };
    std::vector<ComponentItem> items;
    for (EdgeId e = 0; e < n.g.edge_count(); ++e) {
        bool t_in = inside(n.g.edges[e].tail), h_in = inside(n.g.edges[e].head);
        if (t_in == h_in) continue;
        ComponentItem it;
        it.is_edge = true;
        it.edge = e;
        it.sigma = h_in ? +1 : -1;
        items.push_back(it);
    }
    auto add_terminals = [&](const std::vector<VertexId>& set, int sigma) {
        for (VertexId v : set)
            if (inside(v)) {
                ComponentItem it;
                it.is_edge = false;
                it.terminal = v;
                it.sigma = sigma;
                items.push_back(it);
            }
    };
    // Edge items are already ascending by id; terminals follow, merged by id.
    std::size_t first_term = items.size();
    add_terminals(n.sources, +1);
    add_terminals(n.sinks, -1);
    std::sort(items.begin() + first_term, items.end(),
              [](const ComponentItem& x, const ComponentItem& y) { return x.terminal < y.terminal; });
    return items;
}

std::pair<Rat, Rat> project_interval(const ExtFlowNetwork& n,
                                     const std::vector<VertexId>& comp,
                                     std::uint32_t mask) {
    auto inside = [&](VertexId v) { return std::binary_search(comp.begin(), comp.end(), v); };
    std::vector<ComponentItem> items = items_of_component(n, comp);
    assert(items.size() < 32 && mask < (1u << items.size()));

    // Variables: shifted flows f' = f - lower for every edge touching the
    // component, then one excess variable per contained terminal.
    std::vector<EdgeId> vars;
    std::vector<std::uint32_t> var_of_edge(n.g.edge_count(), kNone);
    for (EdgeId e = 0; e < n.g.edge_count(); ++e) {
        if (inside(n.g.edges[e].tail) || inside(n.g.edges[e].head)) {
            var_of_edge[e] = static_cast<std::uint32_t>(vars.size());
            vars.push_back(e);
        }
    }
    std::vector<VertexId> terms;
    std::vector<int> term_sigma;
    for (const ComponentItem& it : items)
        if (!it.is_edge) {
            terms.push_back(it.terminal);
            term_sigma.push_back(it.sigma);
        }
    const std::size_t ne = vars.size();
    const std::size_t nvar = ne + terms.size();

    Rat total_cap(1);
    for (EdgeId e = 0; e < n.g.edge_count(); ++e) total_cap += n.upper[e];

    std::vector<std::vector<Rat>> A;
    std::vector<Rat> b;
    auto add_row = [&](std::vector<Rat> row, Rat rhs) {
        A.push_back(std::move(row));
        b.push_back(std::move(rhs));
    };
    for (std::size_t j = 0; j < ne; ++j) {
        std::vector<Rat> row(nvar, Rat(0));
        row[j] = 1;
        add_row(std::move(row), n.upper[vars[j]] - n.lower[vars[j]]);
    }
    for (std::size_t j = 0; j < terms.size(); ++j) {
        std::vector<Rat> row(nvar, Rat(0));
        row[ne + j] = 1;
        add_row(std::move(row), total_cap);
    }
    // Conservation with terminal excess folded in: net outflow of v equals
    // +g at sources, -g at sinks, 0 elsewhere.
    for (VertexId v : comp) {
        std::vector<Rat> row(nvar, Rat(0));
        Rat shift(0);
        for (EdgeId e = 0; e < n.g.edge_count(); ++e) {
            if (n.g.edges[e].tail == v) {
                row[var_of_edge[e]] += 1;
                shift -= n.lower[e];
            }
            if (n.g.edges[e].head == v) {
                row[var_of_edge[e]] -= 1;
                shift += n.lower[e];
            }
        }
        for (std::size_t j = 0; j < terms.size(); ++j)
            if (terms[j] == v) row[ne + j] = Rat(-term_sigma[j]);
        std::vector<Rat> neg(nvar);
        for (std::size_t j = 0; j < nvar; ++j) neg[j] = -row[j];
        add_row(std::move(row), shift);
        add_row(std::move(neg), -shift);
    }

    // Objective for the subset, in shifted variables plus a constant.
    std::vector<Rat> c(nvar, Rat(0));
    Rat offset(0);
    std::size_t term_idx = 0;
    for (std::size_t i = 0; i < items.size(); ++i) {
        const ComponentItem& it = items[i];
        if (it.is_edge) {
            if (mask & (1u << i)) {
                c[var_of_edge[it.edge]] += it.sigma;
                offset += Rat(it.sigma) * n.lower[it.edge];
            }
        } else {
            if (mask & (1u << i)) c[ne + term_idx] += it.sigma;
            ++term_idx;
        }
    }

    auto solve = [&](bool maximize) {
        std::vector<Rat> obj(c);
        if (!maximize)
            for (Rat& x : obj) x = -x;
        SimplexResult r = simplex_maximize(A, b, obj);
        if (r.status == SimplexResult::Status::Infeasible)
            reject(ErrorCode::InfeasibleComponent, "component admits no partial flow");
        assert(r.status == SimplexResult::Status::Optimal);
        return maximize ? r.value : -r.value;
    };
    Rat hi = solve(true) + offset;
    Rat lo = solve(false) + offset;
    return {lo, hi};
}

} // namespace planeflow
