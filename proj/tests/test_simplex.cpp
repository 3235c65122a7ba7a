#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "essmod/simplex.hpp"

using namespace essmod;

namespace {
using Rows = std::vector<std::vector<double>>;
using Vec = std::vector<double>;
}  // namespace

TEST_CASE("two-variable maximum lands on the right corner") {
    // max 3x + 2y  s.t. x + y <= 4, x <= 2, y <= 3; optimum 10 at (2, 2).
    Rows a{{1, 1}, {1, 0}, {0, 1}};
    auto r = solve_lp_max(a, Vec{4, 2, 3}, Vec{3, 2});
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(r.objective == doctest::Approx(10.0).epsilon(1e-12));
    CHECK(r.x[0] == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(r.x[1] == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("binding constraints saturate exactly at the reported point") {
    // max x + y  s.t. 2x + y <= 4, x + 3y <= 6; optimum at (6/5, 8/5) = 14/5.
    Rows a{{2, 1}, {1, 3}};
    auto r = solve_lp_max(a, Vec{4, 6}, Vec{1, 1});
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(r.objective == doctest::Approx(14.0 / 5.0).epsilon(1e-12));
    CHECK(2 * r.x[0] + r.x[1] == doctest::Approx(4.0).epsilon(1e-9));
    CHECK(r.x[0] + 3 * r.x[1] == doctest::Approx(6.0).epsilon(1e-9));
}

TEST_CASE("negative right-hand side forces phase one") {
    // max -t  s.t. -rho <= -1, rho - t <= 0: minimize the bound on a
    // single mass-1 constraint; optimum t = 1, rho = 1.
    Rows a{{-1, 0}, {1, -1}};
    auto r = solve_lp_max(a, Vec{-1, 0}, Vec{0, -1});
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(r.objective == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(r.x[0] == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(r.x[1] == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("minimax shape with two masses picks the larger reciprocal") {
    // Two "curves" of mass 2 and 3 against one density value rho with bound t:
    // max -t  s.t. -2rho <= -1, -3rho <= -1, rho - t <= 0  =>  t = 1/2.
    Rows a{{-2, 0}, {-3, 0}, {1, -1}};
    auto r = solve_lp_max(a, Vec{-1, -1, 0}, Vec{0, -1});
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(-r.objective == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("infeasible system is reported as such") {
    // x <= 1 and -x <= -2 cannot both hold.
    Rows a{{1}, {-1}};
    auto r = solve_lp_max(a, Vec{1, -2}, Vec{1});
    CHECK(r.status == LpStatus::Infeasible);
}

TEST_CASE("unbounded objective is reported as such") {
    // max x + y with only x <= 1: y is free to grow.
    Rows a{{1, 0}};
    auto r = solve_lp_max(a, Vec{1}, Vec{1, 1});
    CHECK(r.status == LpStatus::Unbounded);
}

TEST_CASE("redundant constraints do not disturb the optimum") {
    // Same optimum with the binding constraint repeated three times plus a slack one.
    Rows a{{1, 1}, {1, 1}, {1, 1}, {1, 0}};
    auto r = solve_lp_max(a, Vec{2, 2, 2, 100}, Vec{1, 1});
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(r.objective == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("degenerate vertex does not cycle") {
    // Three constraints meeting at (1, 1); classic degeneracy trigger.
    Rows a{{1, 0}, {0, 1}, {1, 1}};
    auto r = solve_lp_max(a, Vec{1, 1, 2}, Vec{2, 1});
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(r.objective == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("zero objective returns any feasible point") {
    Rows a{{1, 1}};
    auto r = solve_lp_max(a, Vec{1}, Vec{0, 0});
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(r.objective == doctest::Approx(0.0));
    CHECK(r.x[0] >= -1e-9);
    CHECK(r.x[1] >= -1e-9);
    CHECK(r.x[0] + r.x[1] <= 1 + 1e-9);
}

TEST_CASE("empty constraint set with negative costs stays at the origin") {
    auto r = solve_lp_max(Rows{}, Vec{}, Vec{-1, -2});
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(r.objective == doctest::Approx(0.0));
}

TEST_CASE("five-variable problem against a hand-solved optimum") {
    // max 2a + 3b + c + 4d + e
    // a+b+c+d+e <= 10; a+2b <= 6; 3d+e <= 9; c+d <= 5; b+e <= 7
    // Exhaustive vertex enumeration gives 25 at (4, 1, 2, 3, 0).
    Rows a{{1, 1, 1, 1, 1}, {1, 2, 0, 0, 0}, {0, 0, 0, 3, 1}, {0, 0, 1, 1, 0}, {0, 1, 0, 0, 1}};
    auto r = solve_lp_max(a, Vec{10, 6, 9, 5, 7}, Vec{2, 3, 1, 4, 1});
    REQUIRE(r.status == LpStatus::Optimal);
    double obj = 2 * r.x[0] + 3 * r.x[1] + r.x[2] + 4 * r.x[3] + r.x[4];
    CHECK(obj == doctest::Approx(r.objective).epsilon(1e-9));
    CHECK(r.objective == doctest::Approx(25.0).epsilon(1e-9));
    const Vec b{10, 6, 9, 5, 7};
    for (std::size_t i = 0; i < a.size(); ++i) {
        double lhs = 0;
        for (std::size_t j = 0; j < 5; ++j) lhs += a[i][j] * r.x[j];
        CHECK(lhs <= b[i] + 1e-7);
    }
}
