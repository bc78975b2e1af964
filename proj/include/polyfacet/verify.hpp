#pragma once

#include "polyfacet/facet_search.hpp"
#include "polyfacet/oracle.hpp"

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace polyfacet {

struct SetComparison {
    Index matched = 0;
    Index only_engine = 0;
    Index only_oracle = 0;

    bool equal() const noexcept { return only_engine == 0 && only_oracle == 0; }
};

/// Matches hyperplane normals through the shared canonical index.
SetComparison compare_facets(const std::vector<Hyperplane>& engine, const std::vector<OracleFacet>& oracle,
                             double tol_face);
SetComparison compare_edges(const std::vector<std::pair<Index, Index>>& engine,
                            const std::set<std::pair<Index, Index>>& oracle);

/// Checks the output invariants of an H-representation against its input
/// vertices: containment, per-row support, per-vertex tightness on >= d rows.
/// Returns human-readable violations (empty when all hold).
std::vector<std::string> check_hrep(const HRepresentation& hrep, const VertexMatrix& V, double tol);

/// True when every row of `a` matches a distinct row of `b` (H and b entries)
/// within `tol`.
bool same_rows_up_to_permutation(const Matrix& Ha, const Vector& ba, const Matrix& Hb, const Vector& bb, double tol);

}  // namespace polyfacet
