#include "polyfacet/error.hpp"
#include "polyfacet/facet_search.hpp"

#include <exception>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace polyfacet {

std::vector<Index> AdjacencyMatrix::neighbors(Index i) const {
    std::vector<Index> out;
    for (Index j = 0; j < size(); ++j) {
        if (bits_(i, j)) out.push_back(j);
    }
    return out;
}

std::vector<std::pair<Index, Index>> AdjacencyMatrix::edges() const {
    std::vector<std::pair<Index, Index>> out;
    for (Index i = 0; i < size(); ++i) {
        for (Index j = i + 1; j < size(); ++j) {
            if (bits_(i, j)) out.emplace_back(i, j);
        }
    }
    return out;
}

bool AdjacencyMatrix::symmetric() const {
    for (Index i = 0; i < size(); ++i) {
        if (bits_(i, i)) return false;
        for (Index j = i + 1; j < size(); ++j) {
            if (bits_(i, j) != bits_(j, i)) return false;
        }
    }
    return true;
}

namespace {

std::vector<std::pair<Index, Index>> all_pairs(Index n) {
    std::vector<std::pair<Index, Index>> pairs;
    pairs.reserve(n * (n - 1) / 2);
    for (Index i = 0; i < n; ++i) {
        for (Index j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    }
    return pairs;
}

AdjacencyResult merge(const CenteredPolytope& P, const Tolerances& tol,
                      const std::vector<std::pair<Index, Index>>& pairs,
                      std::vector<PairClassification>& verdicts, bool check_degree) {
    AdjacencyResult out{AdjacencyMatrix(P.count()), FacetRegistry(P.count(), tol.tol_face), {}, {}};
    AdjacencyStats& stats = out.stats;
    stats.pairs = pairs.size();
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        const auto [i, j] = pairs[p];
        PairClassification& c = verdicts[p];
        if (c.method == Method::QuickTest) {
            ++stats.quick_decided;
        } else if (c.lp_objective) {
            ++stats.lp_invocations;
        }
        if (c.coplanar_tie) ++stats.coplanar_ties;
        if (c.at_origin) ++stats.at_origin;
        if (c.is_edge()) {
            out.adjacency.connect(i, j);
            out.edges.push_back({i, j, c.method});
            ++(c.method == Method::QuickTest ? stats.quick_edges : stats.lp_edges);
        }
        if (c.facet && !out.registry.find(c.facet->plane)) {
            out.registry.add(c.facet->plane, std::move(c.facet->tight),
                             c.method == Method::QuickTest ? FacetSource::QuickHarvest : FacetSource::LpHarvest);
            ++stats.harvested;
        }
    }
    if (check_degree) {
        for (Index k = 0; k < P.count(); ++k) {
            if (out.adjacency.degree(k) < P.dim()) {
                throw Error(ErrorCode::DegeneratePolytope,
                            "vertex " + std::to_string(k + 1) + " has degree " +
                                std::to_string(out.adjacency.degree(k)) + " < d = " + std::to_string(P.dim()));
            }
        }
    }
    return out;
}

}  // namespace

AdjacencyResult build_adjacency_serial(const CenteredPolytope& P, const Tolerances& tol, bool check_degree) {
    const auto pairs = all_pairs(P.count());
    std::vector<PairClassification> verdicts(pairs.size());
    LpSolver solver;
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        verdicts[p] = classify_pair(P, pairs[p].first, pairs[p].second, tol, solver);
    }
    return merge(P, tol, pairs, verdicts, check_degree);
}

AdjacencyResult build_adjacency(const CenteredPolytope& P, const Tolerances& tol, bool check_degree) {
    const auto pairs = all_pairs(P.count());
    const auto count = static_cast<std::ptrdiff_t>(pairs.size());
    std::vector<PairClassification> verdicts(pairs.size());
    // Lowest failing pair wins so the reported error does not depend on scheduling.
    std::ptrdiff_t failed_at = count;
    std::exception_ptr failure;

#pragma omp parallel
    {
        LpSolver solver;
#pragma omp for schedule(dynamic, 32)
        for (std::ptrdiff_t p = 0; p < count; ++p) {
            try {
                verdicts[static_cast<std::size_t>(p)] =
                    classify_pair(P, pairs[static_cast<std::size_t>(p)].first,
                                  pairs[static_cast<std::size_t>(p)].second, tol, solver);
            } catch (...) {
#pragma omp critical(polyfacet_adjacency_failure)
                if (p < failed_at) {
                    failed_at = p;
                    failure = std::current_exception();
                }
            }
        }
    }
    if (failure) std::rethrow_exception(failure);
    return merge(P, tol, pairs, verdicts, check_degree);
}

}  // namespace polyfacet
