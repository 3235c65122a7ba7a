#pragma once

#include <vector>

namespace essmod {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    double objective = 0.0;
    std::vector<double> x;
};

// Dense two-phase simplex for   maximize c.x  s.t.  A x <= b,  x >= 0.
// Self-contained, no external solver. Feasibility tolerance 1e-9; callers
// needing a tighter optimality statement compare against an independent
// formula. Small problems only (hundreds of rows/columns).
LpResult solve_lp_max(const std::vector<std::vector<double>>& a,
                      const std::vector<double>& b, const std::vector<double>& c);

}  // namespace essmod
