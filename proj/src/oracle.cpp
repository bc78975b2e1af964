#include "polyfacet/oracle.hpp"

#include "polyfacet/error.hpp"
#include "polyfacet/hyperplane_index.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace polyfacet {

namespace {

std::vector<std::vector<Index>> all_subsets(Index n, Index k) {
    std::vector<std::vector<Index>> out;
    std::vector<Index> pick(k);
    for (Index t = 0; t < k; ++t) pick[t] = t;
    if (k > n) return out;
    for (;;) {
        out.push_back(pick);
        Index t = k;
        while (t > 0 && pick[t - 1] == n - k + (t - 1)) --t;
        if (t == 0) break;
        ++pick[t - 1];
        for (Index s = t; s < k; ++s) pick[s] = pick[s - 1] + 1;
    }
    return out;
}

std::optional<Vector> supporting_normal(const CenteredPolytope& P, const std::vector<Index>& subset,
                                        const Tolerances& tol) {
    const auto d = static_cast<Eigen::Index>(P.dim());
    Matrix A(d, d);
    for (Eigen::Index r = 0; r < d; ++r) A.row(r) = P.vertex(subset[static_cast<std::size_t>(r)]);
    Eigen::FullPivLU<Matrix> lu(A);
    lu.setThreshold(tol.tol_eq);
    if (lu.rank() < d) return std::nullopt;
    Vector h = lu.solve(Vector::Ones(d));
    if (!h.allFinite()) return std::nullopt;
    if ((P.vertices * h).maxCoeff() > 1.0 + tol.tol_face) return std::nullopt;
    return h;
}

}  // namespace

std::vector<OracleFacet> oracle_facets(const CenteredPolytope& P, const Tolerances& tol, OracleOptions options) {
    const Index n = P.count();
    if (n > options.max_vertices) {
        throw Error(ErrorCode::CapExceeded, "oracle is limited to " + std::to_string(options.max_vertices) +
                                                " vertices, got " + std::to_string(n));
    }
    const auto subsets = all_subsets(n, P.dim());
    const auto count = static_cast<std::ptrdiff_t>(subsets.size());
    std::vector<std::optional<Vector>> normals(subsets.size());
    if (options.parallel) {
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t s = 0; s < count; ++s) {
            normals[static_cast<std::size_t>(s)] = supporting_normal(P, subsets[static_cast<std::size_t>(s)], tol);
        }
    } else {
        for (std::ptrdiff_t s = 0; s < count; ++s) {
            normals[static_cast<std::size_t>(s)] = supporting_normal(P, subsets[static_cast<std::size_t>(s)], tol);
        }
    }

    std::vector<OracleFacet> facets;
    HyperplaneIndex seen(tol.tol_face);
    for (auto& h : normals) {
        if (!h || seen.find(*h)) continue;
        seen.insert(*h);
        OracleFacet f{Hyperplane{std::move(*h)}, {}};
        const Vector values = P.vertices * f.plane.normal;
        for (Index k = 0; k < n; ++k) {
            if (std::abs(values[static_cast<Eigen::Index>(k)] - 1.0) <= tol.tol_face) f.tight.push_back(k);
        }
        facets.push_back(std::move(f));
    }
    return facets;
}

std::set<std::pair<Index, Index>> oracle_edges(const std::vector<OracleFacet>& facets, Index n) {
    std::vector<std::vector<char>> member(facets.size(), std::vector<char>(n, 0));
    for (std::size_t f = 0; f < facets.size(); ++f) {
        for (Index k : facets[f].tight) member[f][k] = 1;
    }
    std::set<std::pair<Index, Index>> edges;
    for (Index i = 0; i < n; ++i) {
        for (Index j = i + 1; j < n; ++j) {
            std::vector<char> common(n, 1);
            bool any = false;
            for (std::size_t f = 0; f < facets.size(); ++f) {
                if (!member[f][i] || !member[f][j]) continue;
                any = true;
                for (Index k = 0; k < n; ++k) common[k] = common[k] && member[f][k];
            }
            if (!any) continue;
            const auto size = std::count(common.begin(), common.end(), 1);
            if (size == 2) edges.emplace(i, j);
        }
    }
    return edges;
}

OracleResult run_oracle(const CenteredPolytope& P, const Tolerances& tol, OracleOptions options) {
    OracleResult out;
    out.facets = oracle_facets(P, tol, options);
    out.edges = oracle_edges(out.facets, P.count());
    return out;
}

VertexMatrix sample_polytope(Index n, Index d, std::uint64_t seed) {
    if (d < 2 || n < d + 1) {
        throw Error(ErrorCode::InvalidArgument, "sample_polytope needs d >= 2 and n >= d + 1");
    }
    for (std::uint64_t sub = 0;; ++sub) {
        std::mt19937_64 rng(seed + sub * 0x9e3779b97f4a7c15ULL);
        std::normal_distribution<double> normal(0.0, 1.0);
        Matrix pts(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(d));
        for (Eigen::Index r = 0; r < pts.rows(); ++r) {
            for (Eigen::Index c = 0; c < pts.cols(); ++c) pts(r, c) = normal(rng);
            const double len = pts.row(r).norm();
            if (len == 0.0) {
                pts(r, 0) = 1.0;
            } else {
                pts.row(r) /= len;
            }
        }
        const Matrix centered = pts.rowwise() - pts.colwise().mean();
        Eigen::FullPivLU<Matrix> lu(centered);
        lu.setThreshold(1e-9);
        if (static_cast<Index>(lu.rank()) == d) return VertexMatrix(std::move(pts));
    }
}

}  // namespace polyfacet
