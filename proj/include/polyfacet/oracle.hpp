#pragma once

#include "polyfacet/geometry.hpp"

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

namespace polyfacet {

/// Brute-force ground truth for small polytopes.
struct OracleFacet {
    Hyperplane plane;
    std::vector<Index> tight;
};

struct OracleResult {
    std::vector<OracleFacet> facets;
    std::set<std::pair<Index, Index>> edges;
};

struct OracleOptions {
    Index max_vertices = 20;
    bool parallel = true;
};

/// Tries every d-subset of vertices: solves U_S h = 1 with a rank-revealing LU
/// and keeps h when no vertex exceeds 1 + tol_face. Throws CapExceeded.
std::vector<OracleFacet> oracle_facets(const CenteredPolytope& P, const Tolerances& tol = {},
                                       OracleOptions options = {});

/// {i, j} is an edge iff the facets containing both have common vertex set
/// exactly {i, j}.
std::set<std::pair<Index, Index>> oracle_edges(const std::vector<OracleFacet>& facets, Index n);

OracleResult run_oracle(const CenteredPolytope& P, const Tolerances& tol = {}, OracleOptions options = {});

/// n points on the unit sphere in R^d (normalised standard normals) from a
/// seeded generator; redrawn with the next sub-seed until they span R^d.
VertexMatrix sample_polytope(Index n, Index d, std::uint64_t seed);

}  // namespace polyfacet
