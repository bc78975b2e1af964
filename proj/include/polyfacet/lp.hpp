#pragma once

#include "polyfacet/geometry.hpp"

#include <limits>
#include <vector>

namespace polyfacet {

/// min objective . x  s.t.  ineq x <= ineq_rhs,  eq x = eq_rhs,  lower <= x <= upper.
/// Infinite bounds mean "unbounded on that side".
struct LinearProgram {
    Vector objective;
    Matrix ineq;
    Vector ineq_rhs;
    Matrix eq;
    Vector eq_rhs;
    Vector lower;
    Vector upper;

    /// A program over `variables` free variables with no constraints.
    static LinearProgram free_variables(Index variables);

    Index variable_count() const noexcept { return static_cast<Index>(objective.size()); }
    /// Throws DimensionMismatch on inconsistent shapes.
    void check() const;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    Vector x;
    double objective_value = 0.0;
    Index pivots = 0;
};

struct LpOptions {
    Index max_nonzeros = 10'000;
    /// Pivot budget is iteration_factor * (rows + cols) of the internal standard form.
    Index iteration_factor = 50;
};

/// Dense two-phase simplex on a condensed (dictionary) tableau with Bland's
/// smallest-index rule for both entering and leaving variables.
///
/// Bounds are shifted or reflected to x >= 0, free variables are split, finite
/// upper bounds and both halves of each equality become <= rows. Phase one adds
/// a single auxiliary variable to every row. The tableau only carries nonbasic
/// columns, so a pivot costs O(rows * variables).
///
/// An instance owns its scratch buffers; use one instance per thread.
class LpSolver {
public:
    explicit LpSolver(LpOptions options = {}) : options_(options) {}

    /// Throws DimensionMismatch, CapExceeded, or IterationLimit.
    LpSolution solve(const LinearProgram& lp, const Tolerances& tol = {});

private:
    enum class Phase { One, Two };

    double& at(Index row, Index col) { return tableau_[row * stride_ + col]; }
    double at(Index row, Index col) const { return tableau_[row * stride_ + col]; }

    void pivot(Index row, Index col);
    // Returns false on unboundedness.
    bool iterate(Phase phase, const Tolerances& tol, Index budget);
    Index choose_leaving(Index col, bool prefer_auxiliary) const;

    LpOptions options_;
    Index rows_ = 0;
    Index cols_ = 0;
    Index stride_ = 0;
    Index auxiliary_ = 0;
    Index pivots_ = 0;
    std::vector<double> tableau_;
    std::vector<Index> basic_;
    std::vector<Index> nonbasic_;
};

/// Convenience wrapper using a fresh solver.
LpSolution solve(const LinearProgram& lp, const Tolerances& tol = {}, LpOptions options = {});

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

}  // namespace polyfacet
