#include "fixtures.hpp"

#include "polyfacet/edge_detect.hpp"
#include "polyfacet/error.hpp"
#include "polyfacet/lp.hpp"
#include "polyfacet/oracle.hpp"

#include <gtest/gtest.h>

#include <random>

namespace polyfacet {
namespace {

using testing::rows_of;
using testing::vec;

LinearProgram one_variable(double lo, double hi) {
    auto lp = LinearProgram::free_variables(1);
    lp.objective = vec({1});
    lp.lower = vec({lo});
    lp.upper = vec({hi});
    return lp;
}

TEST(Simplex, BoundTightMinimum) {
    const auto sol = solve(one_variable(1, 3));
    ASSERT_EQ(sol.status, LpStatus::Optimal);
    EXPECT_NEAR(sol.x[0], 1, 1e-12);
    EXPECT_NEAR(sol.objective_value, 1, 1e-12);
}

TEST(Simplex, EqualityForcesValue) {
    // Variables (y, f): min f, -y <= f, y <= f, y = 5.
    auto lp = LinearProgram::free_variables(2);
    lp.objective = vec({0, 1});
    lp.ineq = rows_of({{-1, -1}, {1, -1}});
    lp.ineq_rhs = vec({0, 0});
    lp.eq = rows_of({{1, 0}});
    lp.eq_rhs = vec({5});
    const auto sol = solve(lp);
    ASSERT_EQ(sol.status, LpStatus::Optimal);
    EXPECT_NEAR(sol.x[1], 5, 1e-12);
    EXPECT_NEAR(sol.objective_value, 5, 1e-12);
}

TEST(Simplex, PrismEdgeProgram) {
    const auto P = center_vertices(testing::load("prism.ext"));
    const auto lp = edge_lp(P, 0, 1);
    EXPECT_EQ(lp.ineq.rows(), 10);
    EXPECT_EQ(lp.eq.rows(), 1);
    EXPECT_TRUE(lp.lower.head(3).isApprox(vec({0, -1, -1})));
    EXPECT_TRUE(lp.upper.head(3).isApprox(vec({2, 1, 1})));
    const auto sol = solve(lp);
    ASSERT_EQ(sol.status, LpStatus::Optimal);
    EXPECT_NEAR(sol.objective_value, -0.5, 1e-9);
    // The optimum is unique.
    EXPECT_LE((sol.x.head(3) - vec({2, 0.75, 0})).cwiseAbs().maxCoeff(), 1e-9);
}

TEST(Simplex, DegenerateEdgeProgram) {
    // Every row is tight at y = m, f = 0; the optimum below it came from an
    // independent interior-point/simplex solver.
    const auto P = rescale_unit(center_vertices(sample_polytope(60, 3, 1)));
    const auto lp = edge_lp(P, 8, 13);
    const auto sol = solve(lp);
    ASSERT_EQ(sol.status, LpStatus::Optimal);
    EXPECT_NEAR(sol.objective_value, -0.03783855928960282, 1e-9);
    EXPECT_LE((lp.ineq * sol.x - lp.ineq_rhs).maxCoeff(), 1e-9);
}

TEST(Simplex, Infeasible) {
    auto lp = one_variable(-kInfinity, kInfinity);
    lp.ineq = rows_of({{1}, {-1}});
    lp.ineq_rhs = vec({1, -2});
    EXPECT_EQ(solve(lp).status, LpStatus::Infeasible);
    EXPECT_EQ(solve(one_variable(3, 1)).status, LpStatus::Infeasible);
}

TEST(Simplex, Unbounded) {
    auto lp = one_variable(0, kInfinity);
    lp.objective = vec({-1});
    EXPECT_EQ(solve(lp).status, LpStatus::Unbounded);
    EXPECT_EQ(solve(one_variable(-kInfinity, 4)).status, LpStatus::Unbounded);
}

TEST(Simplex, ShapeErrors) {
    auto lp = one_variable(0, 1);
    lp.ineq = rows_of({{1, 1}});
    lp.ineq_rhs = vec({1});
    try {
        solve(lp);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::DimensionMismatch);
    }
}

TEST(Simplex, NonzeroCap) {
    auto lp = LinearProgram::free_variables(200);
    lp.objective = Vector::Ones(200);
    lp.ineq = Matrix::Ones(60, 200);
    lp.ineq_rhs = Vector::Ones(60);
    try {
        solve(lp);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::CapExceeded);
    }
}

// Brute-force optimum of a 2-variable LP inside a box: the minimum over all
// feasible intersections of two constraint boundaries.
std::optional<double> brute_force_2d(const Matrix& A, const Vector& rhs, const Vector& c, double tol) {
    const auto m = A.rows();
    std::optional<double> best;
    for (Eigen::Index p = 0; p < m; ++p) {
        for (Eigen::Index q = p + 1; q < m; ++q) {
            Eigen::Matrix2d M;
            M << A(p, 0), A(p, 1), A(q, 0), A(q, 1);
            if (std::abs(M.determinant()) < 1e-9) continue;
            const Eigen::Vector2d x = M.inverse() * (Eigen::Vector2d(rhs[p], rhs[q]));
            if (((A * x) - rhs).maxCoeff() > tol) continue;
            const double value = c.dot(x);
            if (!best || value < *best) best = value;
        }
    }
    return best;
}

TEST(Simplex, MatchesBruteForceOnRandomPrograms) {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> unif(-1, 1);
    int feasible = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const int rows = 1 + trial % 8;
        auto lp = LinearProgram::free_variables(2);
        lp.objective = vec({unif(rng), unif(rng)});
        lp.lower = vec({-2, -2});
        lp.upper = vec({2, 2});
        lp.ineq.resize(rows, 2);
        lp.ineq_rhs.resize(rows);
        for (int r = 0; r < rows; ++r) {
            lp.ineq(r, 0) = unif(rng);
            lp.ineq(r, 1) = unif(rng);
            lp.ineq_rhs[r] = unif(rng);
        }
        Matrix all(rows + 4, 2);
        all << lp.ineq, rows_of({{1, 0}, {-1, 0}, {0, 1}, {0, -1}});
        Vector rhs(rows + 4);
        rhs << lp.ineq_rhs, vec({2, 2, 2, 2});

        const auto expected = brute_force_2d(all, rhs, lp.objective, 1e-9);
        const auto sol = solve(lp);
        if (!expected) {
            EXPECT_EQ(sol.status, LpStatus::Infeasible) << "trial " << trial;
            continue;
        }
        ++feasible;
        ASSERT_EQ(sol.status, LpStatus::Optimal) << "trial " << trial;
        EXPECT_NEAR(sol.objective_value, *expected, 1e-9) << "trial " << trial;
        EXPECT_LE((lp.ineq * sol.x - lp.ineq_rhs).maxCoeff(), 1e-9);
        EXPECT_NEAR(lp.objective.dot(sol.x), sol.objective_value, 1e-12);
    }
    EXPECT_GT(feasible, 100);
}

TEST(Simplex, DeterministicAndScaleEquivariant) {
    const auto P = center_vertices(testing::load("prism.ext"));
    for (Index i = 0; i < P.count(); ++i) {
        for (Index j = i + 1; j < P.count(); ++j) {
            auto lp = edge_lp(P, i, j);
            const auto a = solve(lp);
            const auto b = solve(lp);
            ASSERT_EQ(a.status, LpStatus::Optimal);
            EXPECT_EQ(a.x, b.x);
            EXPECT_EQ(a.pivots, b.pivots);
            lp.objective *= 3.0;
            const auto c = solve(lp);
            EXPECT_NEAR(c.objective_value, 3.0 * a.objective_value, 1e-9);
        }
    }
}

TEST(Simplex, ReusedSolverMatchesFresh) {
    LpSolver solver;
    const auto P = center_vertices(testing::load("octahedron.ext"));
    for (Index j = 1; j < P.count(); ++j) {
        const auto lp = edge_lp(P, 0, j);
        EXPECT_EQ(solver.solve(lp).x, solve(lp).x);
    }
}

}  // namespace
}  // namespace polyfacet
