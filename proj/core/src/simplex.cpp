#include "planeflow/simplex.hpp"

#include <cassert>
#include <cstdint>

namespace planeflow {

namespace {

// Dictionary: x_B[i] = b[i] - sum_j A[i][j] * x_N[j]; z = v + sum_j c[j] * x_N[j].
struct Dictionary {
    std::vector<std::uint32_t> N, B;
    std::vector<std::vector<Rat>> A;
    std::vector<Rat> b, c;
    Rat v;

    void pivot(std::size_t l, std::size_t e) {
        const Rat inv = Rat(1) / A[l][e];
        const std::size_t rows = B.size(), cols = N.size();
        std::vector<Rat> newRow(cols);
        for (std::size_t j = 0; j < cols; ++j)
            newRow[j] = (j == e) ? inv : A[l][j] * inv;
        Rat newB = b[l] * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == l) continue;
            const Rat k = A[i][e];
            if (k == 0) continue;
            b[i] -= k * newB;
            for (std::size_t j = 0; j < cols; ++j) {
                if (j == e)
                    A[i][j] = -k * inv;
                else
                    A[i][j] -= k * newRow[j];
            }
        }
        const Rat ck = c[e];
        if (ck != 0) {
            v += ck * newB;
            for (std::size_t j = 0; j < cols; ++j) {
                if (j == e)
                    c[j] = -ck * inv;
                else
                    c[j] -= ck * newRow[j];
            }
        }
        A[l] = std::move(newRow);
        b[l] = std::move(newB);
        std::swap(B[l], N[e]);
    }

    // Bland's rule; returns false on unbounded.
    bool optimize() {
        for (;;) {
            std::size_t e = N.size();
            for (std::size_t j = 0; j < N.size(); ++j)
                if (c[j] > 0 && (e == N.size() || N[j] < N[e])) e = j;
            if (e == N.size()) return true;
            std::size_t l = B.size();
            for (std::size_t i = 0; i < B.size(); ++i) {
                if (A[i][e] <= 0) continue;
                if (l == B.size()) {
                    l = i;
                    continue;
                }
                const Rat cur = b[i] * A[l][e], best = b[l] * A[i][e];
                if (cur < best || (cur == best && B[i] < B[l])) l = i;
            }
            if (l == B.size()) return false;
            pivot(l, e);
        }
    }
};

} // namespace

SimplexResult simplex_maximize(const std::vector<std::vector<Rat>>& A,
                               const std::vector<Rat>& b,
                               const std::vector<Rat>& c) {
    const std::size_t m = A.size(), n = c.size();
    Dictionary d;
    d.N.resize(n);
    d.B.resize(m);
    d.A = A;
    d.b = b;
    d.v = 0;
    for (std::size_t j = 0; j < n; ++j) d.N[j] = static_cast<std::uint32_t>(j);
    for (std::size_t i = 0; i < m; ++i) d.B[i] = static_cast<std::uint32_t>(n + i);

    std::size_t worst = m;
    for (std::size_t i = 0; i < m; ++i)
        if (worst == m ? b[i] < 0 : b[i] < d.b[worst]) worst = i;

    if (worst != m && d.b[worst] < 0) {
        // Phase 1: auxiliary variable (largest id) enters every row with -1.
        const std::uint32_t aux = static_cast<std::uint32_t>(n + m);
        for (std::size_t i = 0; i < m; ++i) d.A[i].push_back(Rat(-1));
        d.N.push_back(aux);
        d.c.assign(n + 1, Rat(0));
        d.c[n] = -1;
        d.pivot(worst, n);
        bool ok = d.optimize();
        assert(ok);
        (void)ok;
        if (d.v != 0) return {SimplexResult::Status::Infeasible, Rat(0), {}};
        for (std::size_t i = 0; i < m; ++i) {
            if (d.B[i] != aux) continue;
            // Degenerate: aux basic at zero; pivot it out through any column.
            std::size_t e = d.N.size();
            for (std::size_t j = 0; j < d.N.size(); ++j)
                if (d.A[i][j] != 0) {
                    e = j;
                    break;
                }
            assert(e != d.N.size());
            d.pivot(i, e);
            break;
        }
        std::size_t drop = d.N.size();
        for (std::size_t j = 0; j < d.N.size(); ++j)
            if (d.N[j] == aux) drop = j;
        assert(drop != d.N.size());
        d.N.erase(d.N.begin() + drop);
        for (auto& row : d.A) row.erase(row.begin() + drop);
        // Restore the real objective in terms of the current basis.
        d.c.assign(d.N.size(), Rat(0));
        d.v = 0;
        for (std::uint32_t id = 0; id < n; ++id) {
            if (c[id] == 0) continue;
            bool placed = false;
            for (std::size_t j = 0; j < d.N.size(); ++j)
                if (d.N[j] == id) {
                    d.c[j] += c[id];
                    placed = true;
                    break;
                }
            if (placed) continue;
            for (std::size_t i = 0; i < m; ++i)
                if (d.B[i] == id) {
                    d.v += c[id] * d.b[i];
                    for (std::size_t j = 0; j < d.N.size(); ++j)
                        d.c[j] -= c[id] * d.A[i][j];
                    break;
                }
        }
    } else {
        d.c = c;
    }

    if (!d.optimize()) return {SimplexResult::Status::Unbounded, Rat(0), {}};

    SimplexResult res;
    res.status = SimplexResult::Status::Optimal;
    res.value = d.v;
    res.x.assign(n, Rat(0));
    for (std::size_t i = 0; i < m; ++i)
        if (d.B[i] < n) res.x[d.B[i]] = d.b[i];
    return res;
}

} // namespace planeflow
