#include "essmod/simplex.hpp"

#include <cmath>
#include <limits>
#include <utility>

namespace essmod {

namespace {

constexpr double kEps = 1e-9;

// Classic dense two-phase simplex on the tableau
//   D is (m+2) x (n+2); row m holds the objective, row m+1 the phase-1
//   objective; column n is the artificial column, column n+1 the constants.
// Pivot selection breaks ties on (coefficient, variable index) pairs, which
// keeps the method deterministic and cycling-free in practice.
struct Tableau {
    int m, n;
    std::vector<int> basic, nonbasic;
    std::vector<std::vector<double>> d;

    Tableau(const std::vector<std::vector<double>>& a, const std::vector<double>& b,
            const std::vector<double>& c)
        : m(static_cast<int>(b.size())),
          n(static_cast<int>(c.size())),
          basic(m),
          nonbasic(n + 1),
          d(m + 2, std::vector<double>(n + 2, 0.0)) {
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j) d[i][j] = a[i][j];
        for (int i = 0; i < m; ++i) {
            basic[i] = n + i;
            d[i][n] = -1.0;
            d[i][n + 1] = b[i];
        }
        for (int j = 0; j < n; ++j) {
            nonbasic[j] = j;
            d[m][j] = -c[j];
        }
        nonbasic[n] = -1;
        d[m + 1][n] = 1.0;
    }

    void pivot(int r, int s) {
        double* a = d[r].data();
        const double inv = 1.0 / a[s];
        for (int i = 0; i < m + 2; ++i) {
            if (i == r || std::fabs(d[i][s]) <= kEps) continue;
            double* row = d[i].data();
            const double factor = row[s] * inv;
            for (int j = 0; j < n + 2; ++j) row[j] -= a[j] * factor;
            row[s] = a[s] * factor;
        }
        for (int j = 0; j < n + 2; ++j)
            if (j != s) d[r][j] *= inv;
        for (int i = 0; i < m + 2; ++i)
            if (i != r) d[i][s] *= -inv;
        d[r][s] = inv;
        std::swap(basic[r], nonbasic[s]);
    }

    bool run(int phase) {
        const int obj_row = m + phase - 1;
        for (;;) {
            int s = -1;
            for (int j = 0; j <= n; ++j) {
                if (nonbasic[j] == -phase) continue;
                if (s == -1 || std::pair(d[obj_row][j], nonbasic[j]) <
                                   std::pair(d[obj_row][s], nonbasic[s]))
                    s = j;
            }
            if (d[obj_row][s] >= -kEps) return true;
            int r = -1;
            for (int i = 0; i < m; ++i) {
                if (d[i][s] <= kEps) continue;
                if (r == -1 || std::pair(d[i][n + 1] / d[i][s], basic[i]) <
                                   std::pair(d[r][n + 1] / d[r][s], basic[r]))
                    r = i;
            }
            if (r == -1) return false;  // unbounded in this direction
            pivot(r, s);
        }
    }
};

}  // namespace

LpResult solve_lp_max(const std::vector<std::vector<double>>& a,
                      const std::vector<double>& b, const std::vector<double>& c) {
    Tableau t(a, b, c);
    LpResult result;
    result.x.assign(c.size(), 0.0);

    int r = 0;
    for (int i = 1; i < t.m; ++i)
        if (t.d[i][t.n + 1] < t.d[r][t.n + 1]) r = i;
    if (t.m > 0 && t.d[r][t.n + 1] < -kEps) {
        t.pivot(r, t.n);
        if (!t.run(2) || t.d[t.m + 1][t.n + 1] < -kEps) {
            result.status = LpStatus::Infeasible;
            return result;
        }
        for (int i = 0; i < t.m; ++i) {
            if (t.basic[i] != -1) continue;
            int s = 0;
            for (int j = 1; j <= t.n; ++j)
                if (std::pair(t.d[i][j], t.nonbasic[j]) <
                    std::pair(t.d[i][s], t.nonbasic[s]))
                    s = j;
            t.pivot(i, s);
        }
    }
    const bool bounded = t.run(1);
    for (int i = 0; i < t.m; ++i)
        if (t.basic[i] < t.n && t.basic[i] >= 0)
            result.x[t.basic[i]] = t.d[i][t.n + 1];
    if (!bounded) {
        result.status = LpStatus::Unbounded;
        result.objective = std::numeric_limits<double>::infinity();
        return result;
    }
    result.status = LpStatus::Optimal;
    result.objective = t.d[t.m][t.n + 1];
    return result;
}

}  // namespace essmod
