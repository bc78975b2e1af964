#pragma once

#include "polyfacet/geometry.hpp"
#include "polyfacet/lp.hpp"

#include <optional>
#include <vector>

namespace polyfacet {

enum class Verdict { Edge, NonEdge, EdgeWithFacet, NonEdgeWithFacet };
enum class Method { QuickTest, LpTest };

const char* to_string(Verdict verdict) noexcept;
const char* to_string(Method method) noexcept;

/// A supporting hyperplane found while classifying a pair, with its tight vertices.
struct HarvestedFacet {
    Hyperplane plane;
    std::vector<Index> tight;
};

struct PairClassification {
    Verdict verdict = Verdict::NonEdge;
    Method method = Method::QuickTest;
    std::optional<HarvestedFacet> facet;

    // Filled in when the LP test ran.
    std::optional<double> lp_objective;  // f*
    std::optional<double> lp_offset;     // c = h . m
    std::optional<Vector> lp_point;      // y*
    /// f* sat inside the equality band: every other vertex is on or below a
    /// plane through the pair, but some lie on it.
    bool coplanar_tie = false;
    /// The line through the pair passes the centroid.
    bool at_origin = false;

    bool is_edge() const noexcept { return verdict == Verdict::Edge || verdict == Verdict::EdgeWithFacet; }
};

/// Outcome of the perpendicular-foot test. An empty verdict means the test
/// could not decide and the pair must go to the LP test; a harvested facet may
/// be attached either way.
struct QuickTestResult {
    std::optional<Verdict> verdict;
    std::optional<HarvestedFacet> facet;
    bool at_origin = false;

    bool indeterminate() const noexcept { return !verdict.has_value(); }
};

QuickTestResult quick_edge_test(const CenteredPolytope& P, Index i, Index j, const Tolerances& tol = {});

/// The edge-separation LP for pair (i, j) over variables (y_1..y_d, f):
///   min f  s.t.  (y - m) . (u_k - m) <= f  for k not in {i, j},
///               y . (u_j - u_i) = (u_j + u_i) . (u_j - u_i) / 2,
///               m - 1 <= y <= m + 1,
/// with m the midpoint of u_i and u_j.
LinearProgram edge_lp(const CenteredPolytope& P, Index i, Index j);

/// Pair (i, j) is an edge iff the optimum f* is strictly negative: some plane
/// through the segment has every other vertex strictly on one side.
PairClassification lp_edge_test(const CenteredPolytope& P, Index i, Index j, const Tolerances& tol,
                                LpSolver& solver);
PairClassification lp_edge_test(const CenteredPolytope& P, Index i, Index j, const Tolerances& tol = {});

/// Quick test first, LP test only when the quick test is indeterminate.
PairClassification classify_pair(const CenteredPolytope& P, Index i, Index j, const Tolerances& tol,
                                 LpSolver& solver);
PairClassification classify_pair(const CenteredPolytope& P, Index i, Index j, const Tolerances& tol = {});

}  // namespace polyfacet
