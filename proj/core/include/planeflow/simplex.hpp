#pragma once

#include <vector>

#include "planeflow/rational.hpp"

namespace planeflow {

// Exact two-phase simplex over rationals with Bland's rule. Intended for
// oracle-scale problems only (tens of variables); never on the hot path.
//
// Maximizes c.x subject to A x <= b, x >= 0.
struct SimplexResult {
    enum class Status { Optimal, Infeasible, Unbounded };
    Status status = Status::Infeasible;
    Rat value;
    std::vector<Rat> x;
};

SimplexResult simplex_maximize(const std::vector<std::vector<Rat>>& A,
                               const std::vector<Rat>& b,
                               const std::vector<Rat>& c);

} // namespace planeflow
