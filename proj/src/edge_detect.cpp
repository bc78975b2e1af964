#include "polyfacet/edge_detect.hpp"

#include "polyfacet/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace polyfacet {

const char* to_string(Verdict verdict) noexcept {
    switch (verdict) {
        case Verdict::Edge: return "Edge";
        case Verdict::NonEdge: return "NonEdge";
        case Verdict::EdgeWithFacet: return "EdgeWithFacet";
        case Verdict::NonEdgeWithFacet: return "NonEdgeWithFacet";
    }
    return "?";
}

const char* to_string(Method method) noexcept {
    return method == Method::QuickTest ? "QuickTest" : "LpTest";
}

namespace {

void check_pair(const CenteredPolytope& P, Index i, Index j) {
    if (i == j || i >= P.count() || j >= P.count()) {
        throw Error(ErrorCode::InvalidArgument,
                    "invalid vertex pair (" + std::to_string(i) + ", " + std::to_string(j) + ")");
    }
}

// A tight set only bounds a facet when it affinely spans the hyperplane.
std::optional<HarvestedFacet> harvest(const Hyperplane& h, std::vector<Index> tight, const CenteredPolytope& P,
                                      const Tolerances& tol) {
    if (tight.size() < P.dim() || vertex_rank(P, tight, tol.tol_face) < P.dim()) {
        return std::nullopt;
    }
    return HarvestedFacet{h, std::move(tight)};
}

Verdict with_facet(bool edge, bool facet) {
    if (edge) return facet ? Verdict::EdgeWithFacet : Verdict::Edge;
    return facet ? Verdict::NonEdgeWithFacet : Verdict::NonEdge;
}

}  // namespace

QuickTestResult quick_edge_test(const CenteredPolytope& P, Index i, Index j, const Tolerances& tol) {
    check_pair(P, i, j);
    QuickTestResult out;
    const auto foot = perpendicular_foot(P.vertex(i).transpose(), P.vertex(j).transpose(), tol);
    if (!foot) {
        out.verdict = Verdict::NonEdge;
        out.at_origin = true;
        return out;
    }
    const Hyperplane h = hyperplane_through_foot(*foot, tol);
    if (max_support(h, P) > 1.0 + tol.tol_face) {
        return out;
    }
    auto tight = tight_set(h, P, tol.tol_face);
    const bool two = tight.size() == 2;
    out.facet = harvest(h, std::move(tight), P, tol);
    if (two) {
        out.verdict = with_facet(true, out.facet.has_value());
    }
    return out;
}

LinearProgram edge_lp(const CenteredPolytope& P, Index i, Index j) {
    check_pair(P, i, j);
    const auto d = static_cast<Eigen::Index>(P.dim());
    const auto n = static_cast<Eigen::Index>(P.count());
    const Vector u_i = P.vertex(i).transpose();
    const Vector u_j = P.vertex(j).transpose();
    const Vector mid = 0.5 * (u_i + u_j);

    LinearProgram lp = LinearProgram::free_variables(static_cast<Index>(d + 1));
    lp.objective[d] = 1.0;

    lp.ineq = Matrix::Zero(n - 2, d + 1);
    lp.ineq_rhs = Vector(n - 2);
    Eigen::Index row = 0;
    for (Eigen::Index k = 0; k < n; ++k) {
        if (k == static_cast<Eigen::Index>(i) || k == static_cast<Eigen::Index>(j)) continue;
        const Vector offset = P.vertices.row(k).transpose() - mid;
        lp.ineq.row(row).head(d) = offset.transpose();
        lp.ineq(row, d) = -1.0;
        lp.ineq_rhs[row] = offset.dot(mid);
        ++row;
    }

    const Vector direction = u_j - u_i;
    lp.eq = Matrix::Zero(1, d + 1);
    lp.eq.row(0).head(d) = direction.transpose();
    lp.eq_rhs = Vector::Constant(1, 0.5 * (u_j + u_i).dot(direction));

    lp.lower.head(d) = mid.array() - 1.0;
    lp.upper.head(d) = mid.array() + 1.0;
    return lp;
}

PairClassification lp_edge_test(const CenteredPolytope& P, Index i, Index j, const Tolerances& tol,
                                LpSolver& solver) {
    check_pair(P, i, j);
    PairClassification out;
    out.method = Method::LpTest;
    const Vector mid = 0.5 * (P.vertex(i) + P.vertex(j)).transpose();
    if (mid.norm() <= tol.tol_eq) {
        out.verdict = Verdict::NonEdge;
        return out;
    }

    const LpSolution sol = solver.solve(edge_lp(P, i, j), tol);
    if (sol.status != LpStatus::Optimal) {
        throw Error(ErrorCode::LpFailure, std::string("edge LP for pair (") + std::to_string(i) + ", " +
                                              std::to_string(j) + ") is " +
                                              (sol.status == LpStatus::Infeasible ? "infeasible" : "unbounded"));
    }

    const auto d = static_cast<Eigen::Index>(P.dim());
    const Vector y = sol.x.head(d);
    const Vector normal = y - mid;
    const double f = sol.x[d];
    const double c = normal.dot(mid);
    out.lp_objective = f;
    out.lp_offset = c;
    out.lp_point = y;

    const double band = tol.tol_lp * (1.0 + std::abs(c));
    if (f < -band) {
        out.verdict = Verdict::Edge;
        return out;
    }
    out.verdict = Verdict::NonEdge;
    out.coplanar_tie = std::abs(f) <= band;
    if (out.coplanar_tie && normal.norm() > tol.tol_eq && c > tol.tol_eq) {
        const Hyperplane h{normal / c};
        if (max_support(h, P) <= 1.0 + tol.tol_face) {
            auto tight = tight_set(h, P, tol.tol_face);
            for (Index k : {i, j}) {
                if (!std::binary_search(tight.begin(), tight.end(), k)) {
                    tight.insert(std::lower_bound(tight.begin(), tight.end(), k), k);
                }
            }
            out.facet = harvest(h, std::move(tight), P, tol);
            out.verdict = with_facet(false, out.facet.has_value());
        }
    }
    return out;
}

PairClassification lp_edge_test(const CenteredPolytope& P, Index i, Index j, const Tolerances& tol) {
    LpSolver solver;
    return lp_edge_test(P, i, j, tol, solver);
}

PairClassification classify_pair(const CenteredPolytope& P, Index i, Index j, const Tolerances& tol,
                                 LpSolver& solver) {
    QuickTestResult quick = quick_edge_test(P, i, j, tol);
    if (!quick.indeterminate()) {
        PairClassification out;
        out.verdict = *quick.verdict;
        out.method = Method::QuickTest;
        out.at_origin = quick.at_origin;
        out.facet = std::move(quick.facet);
        return out;
    }
    PairClassification out = lp_edge_test(P, i, j, tol, solver);
    if (!out.facet && quick.facet) {
        out.facet = std::move(quick.facet);
    }
    out.verdict = with_facet(out.is_edge(), out.facet.has_value());
    return out;
}

PairClassification classify_pair(const CenteredPolytope& P, Index i, Index j, const Tolerances& tol) {
    LpSolver solver;
    return classify_pair(P, i, j, tol, solver);
}

}  // namespace polyfacet
