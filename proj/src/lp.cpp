#include "polyfacet/lp.hpp"

#include "polyfacet/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace polyfacet {

namespace {

constexpr double kPivotEps = 1e-9;
constexpr double kZeroRhs = 1e-12;

enum class VarKind { Shifted, Reflected, Split };

// Original variable j expressed through internal nonnegative columns.
struct VarMap {
    VarKind kind;
    double offset;  // lower bound (Shifted) or upper bound (Reflected)
    Index col;
    Index neg_col;  // Split only
};

}  // namespace

LinearProgram LinearProgram::free_variables(Index variables) {
    const auto n = static_cast<Eigen::Index>(variables);
    LinearProgram lp;
    lp.objective = Vector::Zero(n);
    lp.ineq = Matrix(0, n);
    lp.ineq_rhs = Vector(0);
    lp.eq = Matrix(0, n);
    lp.eq_rhs = Vector(0);
    lp.lower = Vector::Constant(n, -kInfinity);
    lp.upper = Vector::Constant(n, kInfinity);
    return lp;
}

void LinearProgram::check() const {
    const auto n = objective.size();
    auto fail = [](const std::string& what) { throw Error(ErrorCode::DimensionMismatch, what); };
    if (ineq.cols() != n || eq.cols() != n) fail("constraint column count differs from objective length");
    if (ineq.rows() != ineq_rhs.size()) fail("inequality rows differ from rhs length");
    if (eq.rows() != eq_rhs.size()) fail("equality rows differ from rhs length");
    if (lower.size() != n || upper.size() != n) fail("bound vectors differ from objective length");
}

LpSolution solve(const LinearProgram& lp, const Tolerances& tol, LpOptions options) {
    LpSolver solver(options);
    return solver.solve(lp, tol);
}

void LpSolver::pivot(Index row, Index col) {
    const double p = at(row, col);
    const Index width = cols_ + 1;
    for (Index j = 0; j < width; ++j) {
        if (j != col) at(row, j) /= p;
    }
    at(row, col) = 1.0 / p;
    for (Index i = 0; i <= rows_; ++i) {
        if (i == row) continue;
        const double factor = at(i, col);
        if (factor == 0.0) continue;
        for (Index j = 0; j < width; ++j) {
            if (j != col) at(i, j) -= factor * at(row, j);
        }
        at(i, col) = -factor / p;
    }
    // Snap round-off on degenerate rows back to zero; Bland's rule only
    // terminates if degenerate ratios stay exactly tied.
    for (Index i = 0; i < rows_; ++i) {
        if (std::abs(at(i, cols_)) <= kZeroRhs) at(i, cols_) = 0.0;
    }
    std::swap(basic_[row], nonbasic_[col]);
    ++pivots_;
}

Index LpSolver::choose_leaving(Index col, bool prefer_auxiliary) const {
    Index best = rows_;
    double best_ratio = 0.0;
    for (Index i = 0; i < rows_; ++i) {
        const double a = at(i, col);
        if (a <= kPivotEps) continue;
        const double ratio = std::max(at(i, cols_), 0.0) / a;
        if (best == rows_ || ratio < best_ratio - 1e-14) {
            best = i;
            best_ratio = ratio;
        } else if (ratio <= best_ratio + 1e-14) {
            const bool aux_here = prefer_auxiliary && basic_[i] == auxiliary_;
            const bool aux_best = prefer_auxiliary && basic_[best] == auxiliary_;
            if (aux_here || (!aux_best && basic_[i] < basic_[best])) {
                best = i;
                best_ratio = std::min(best_ratio, ratio);
            }
        }
    }
    return best;
}

bool LpSolver::iterate(Phase phase, const Tolerances& tol, Index budget) {
    for (;;) {
        Index entering = cols_;
        for (Index j = 0; j < cols_; ++j) {
            if (phase == Phase::Two && nonbasic_[j] == auxiliary_) continue;
            if (at(rows_, j) < -tol.tol_lp && (entering == cols_ || nonbasic_[j] < nonbasic_[entering])) {
                entering = j;
            }
        }
        if (entering == cols_) return true;
        const Index leaving = choose_leaving(entering, phase == Phase::One);
        if (leaving == rows_) return false;
        if (pivots_ >= budget) {
            throw Error(ErrorCode::IterationLimit, "simplex exceeded " + std::to_string(budget) + " pivots");
        }
        pivot(leaving, entering);
    }
}

LpSolution LpSolver::solve(const LinearProgram& lp, const Tolerances& tol) {
    lp.check();
    const Index n = lp.variable_count();
    const Index nonzeros = static_cast<Index>((lp.ineq.array() != 0.0).count() + (lp.eq.array() != 0.0).count());
    if (nonzeros > options_.max_nonzeros) {
        throw Error(ErrorCode::CapExceeded, "LP has " + std::to_string(nonzeros) + " nonzeros, cap is " +
                                                std::to_string(options_.max_nonzeros));
    }

    if ((lp.lower.array() > lp.upper.array()).any()) return LpSolution{};

    // Map every original variable onto nonnegative internal columns.
    std::vector<VarMap> maps(n);
    Index internal = 0;
    std::vector<Index> bounded;  // variables needing an upper-bound row
    for (Index j = 0; j < n; ++j) {
        const double lo = lp.lower[static_cast<Eigen::Index>(j)];
        const double hi = lp.upper[static_cast<Eigen::Index>(j)];
        if (std::isfinite(lo)) {
            maps[j] = {VarKind::Shifted, lo, internal++, 0};
            if (std::isfinite(hi)) bounded.push_back(j);
        } else if (std::isfinite(hi)) {
            maps[j] = {VarKind::Reflected, hi, internal++, 0};
        } else {
            maps[j] = {VarKind::Split, 0.0, internal, internal + 1};
            internal += 2;
        }
    }

    const Index n_ineq = static_cast<Index>(lp.ineq.rows());
    const Index n_eq = static_cast<Index>(lp.eq.rows());
    rows_ = n_ineq + 2 * n_eq + bounded.size();
    cols_ = internal + 1;  // + auxiliary column
    stride_ = cols_ + 1;
    auxiliary_ = internal + rows_;
    pivots_ = 0;
    tableau_.assign((rows_ + 1) * stride_, 0.0);
    basic_.resize(rows_);
    nonbasic_.resize(cols_);
    for (Index j = 0; j < cols_; ++j) nonbasic_[j] = j < internal ? j : auxiliary_;
    for (Index i = 0; i < rows_; ++i) basic_[i] = internal + i;

    // Writes sign * (a . x <= rhs) into tableau row `row`.
    auto emit = [&](Index row, const auto& coeffs, double rhs, double sign) {
        double shifted = rhs;
        for (Index j = 0; j < n; ++j) {
            const double a = coeffs[static_cast<Eigen::Index>(j)];
            if (a == 0.0) continue;
            const VarMap& m = maps[j];
            switch (m.kind) {
                case VarKind::Shifted:
                    at(row, m.col) += sign * a;
                    shifted -= a * m.offset;
                    break;
                case VarKind::Reflected:
                    at(row, m.col) -= sign * a;
                    shifted -= a * m.offset;
                    break;
                case VarKind::Split:
                    at(row, m.col) += sign * a;
                    at(row, m.neg_col) -= sign * a;
                    break;
            }
        }
        at(row, cols_ - 1) = -1.0;  // auxiliary
        at(row, cols_) = sign * shifted;
    };

    Index row = 0;
    for (Index i = 0; i < n_ineq; ++i) emit(row++, lp.ineq.row(static_cast<Eigen::Index>(i)), lp.ineq_rhs[static_cast<Eigen::Index>(i)], 1.0);
    for (Index i = 0; i < n_eq; ++i) {
        const auto coeffs = lp.eq.row(static_cast<Eigen::Index>(i));
        const double rhs = lp.eq_rhs[static_cast<Eigen::Index>(i)];
        emit(row++, coeffs, rhs, 1.0);
        emit(row++, coeffs, rhs, -1.0);
    }
    for (Index j : bounded) {
        at(row, maps[j].col) = 1.0;
        at(row, cols_ - 1) = -1.0;
        at(row, cols_) = lp.upper[static_cast<Eigen::Index>(j)] - lp.lower[static_cast<Eigen::Index>(j)];
        ++row;
    }

    const Index budget = options_.iteration_factor * (rows_ + cols_);
    const double rhs_scale = 1.0 + (rows_ ? Eigen::Map<const Eigen::VectorXd, 0, Eigen::InnerStride<>>(
                                                 tableau_.data() + cols_, static_cast<Eigen::Index>(rows_),
                                                 Eigen::InnerStride<>(static_cast<Eigen::Index>(stride_)))
                                                 .cwiseAbs()
                                                 .maxCoeff()
                                           : 0.0);

    // Phase one: minimize the auxiliary variable when the slack basis is infeasible.
    Index most_negative = rows_;
    for (Index i = 0; i < rows_; ++i) {
        if (at(i, cols_) < 0.0 && (most_negative == rows_ || at(i, cols_) < at(most_negative, cols_))) {
            most_negative = i;
        }
    }
    if (most_negative != rows_) {
        at(rows_, cols_ - 1) = 1.0;
        pivot(most_negative, cols_ - 1);
        if (!iterate(Phase::One, tol, budget)) {
            throw Error(ErrorCode::LpFailure, "phase one reported unbounded");
        }
        // Objective row stores -z0 in the rhs column.
        const double infeasibility = -at(rows_, cols_);
        if (infeasibility > tol.tol_lp * rhs_scale) {
            LpSolution out;
            out.status = LpStatus::Infeasible;
            out.pivots = pivots_;
            return out;
        }
        for (Index i = 0; i < rows_; ++i) {
            if (basic_[i] != auxiliary_) continue;
            Index col = cols_;
            for (Index j = 0; j < cols_; ++j) {
                if (std::abs(at(i, j)) > kPivotEps && (col == cols_ || nonbasic_[j] < nonbasic_[col])) col = j;
            }
            // A row with no usable column is redundant; the auxiliary stays basic at zero.
            if (col != cols_) pivot(i, col);
            break;
        }
        for (Index i = 0; i < rows_; ++i) {
            if (basic_[i] == auxiliary_) at(i, cols_) = 0.0;
        }
    }

    // Phase two objective in terms of the current nonbasic columns.
    std::vector<double> cost(internal, 0.0);
    for (Index j = 0; j < n; ++j) {
        const double c = lp.objective[static_cast<Eigen::Index>(j)];
        const VarMap& m = maps[j];
        switch (m.kind) {
            case VarKind::Shifted: cost[m.col] += c; break;
            case VarKind::Reflected: cost[m.col] -= c; break;
            case VarKind::Split: cost[m.col] += c; cost[m.neg_col] -= c; break;
        }
    }
    for (Index j = 0; j <= cols_; ++j) at(rows_, j) = 0.0;
    for (Index j = 0; j < cols_; ++j) {
        if (nonbasic_[j] < internal) at(rows_, j) = cost[nonbasic_[j]];
    }
    for (Index i = 0; i < rows_; ++i) {
        if (basic_[i] >= internal) continue;
        const double cb = cost[basic_[i]];
        if (cb == 0.0) continue;
        for (Index j = 0; j <= cols_; ++j) at(rows_, j) -= cb * at(i, j);
    }

    LpSolution out;
    if (!iterate(Phase::Two, tol, budget)) {
        out.status = LpStatus::Unbounded;
        out.pivots = pivots_;
        return out;
    }

    std::vector<double> value(internal, 0.0);
    for (Index i = 0; i < rows_; ++i) {
        if (basic_[i] < internal) value[basic_[i]] = std::max(0.0, at(i, cols_));
    }
    out.status = LpStatus::Optimal;
    out.x = Vector(static_cast<Eigen::Index>(n));
    for (Index j = 0; j < n; ++j) {
        const VarMap& m = maps[j];
        double x = 0.0;
        switch (m.kind) {
            case VarKind::Shifted: x = m.offset + value[m.col]; break;
            case VarKind::Reflected: x = m.offset - value[m.col]; break;
            case VarKind::Split: x = value[m.col] - value[m.neg_col]; break;
        }
        out.x[static_cast<Eigen::Index>(j)] = x;
    }
    out.objective_value = lp.objective.dot(out.x);
    out.pivots = pivots_;
    return out;
}

}  // namespace polyfacet
