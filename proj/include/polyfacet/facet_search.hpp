#pragma once

#include "polyfacet/edge_detect.hpp"
#include "polyfacet/geometry.hpp"
#include "polyfacet/hyperplane_index.hpp"

#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace polyfacet {

/// Symmetric vertex/edge matrix with zero diagonal.
class AdjacencyMatrix {
public:
    AdjacencyMatrix() = default;
    explicit AdjacencyMatrix(Index n) : bits_(n, n) {}

    Index size() const noexcept { return bits_.rows(); }
    bool operator()(Index i, Index j) const { return bits_(i, j); }
    void connect(Index i, Index j) {
        bits_.set(i, j);
        bits_.set(j, i);
    }

    Index degree(Index i) const { return bits_.row_count(i); }
    Index edge_count() const { return bits_.total() / 2; }
    std::vector<Index> neighbors(Index i) const;
    /// Unordered pairs (i < j) in lexicographic order.
    std::vector<std::pair<Index, Index>> edges() const;
    bool symmetric() const;

    friend bool operator==(const AdjacencyMatrix&, const AdjacencyMatrix&) = default;

private:
    BitMatrix bits_;
};

enum class FacetSource { QuickHarvest, LpHarvest, Branch, Repair };

/// Accepted facet hyperplanes (centered coordinates), their tight vertex sets
/// and the facet/vertex incidence matrix.
class FacetRegistry {
public:
    FacetRegistry(Index vertex_count, double tol_face);

    std::optional<Index> find(const Hyperplane& h) const { return index_.find(h.normal); }
    Index add(const Hyperplane& h, std::vector<Index> tight, FacetSource source);

    Index size() const noexcept { return static_cast<Index>(planes_.size()); }
    const Hyperplane& plane(Index id) const { return planes_[id]; }
    const std::vector<Index>& tight(Index id) const { return tight_[id]; }
    FacetSource source(Index id) const { return sources_[id]; }
    const BitMatrix& incidence() const noexcept { return incidence_; }
    const HyperplaneIndex& index() const noexcept { return index_; }

    /// Facets whose tight set contains vertex k.
    const std::vector<Index>& facets_of(Index k) const { return vertex_facets_[k]; }
    /// Number of registered facets whose tight set contains every listed vertex.
    Index containing(std::span<const Index> vertices) const;

private:
    HyperplaneIndex index_;
    std::vector<Hyperplane> planes_;
    std::vector<std::vector<Index>> tight_;
    std::vector<FacetSource> sources_;
    std::vector<std::vector<Index>> vertex_facets_;
    BitMatrix incidence_;
};

struct EdgeRecord {
    Index i;
    Index j;
    Method method;
};

struct AdjacencyStats {
    Index pairs = 0;
    Index at_origin = 0;
    Index quick_decided = 0;
    Index lp_invocations = 0;
    Index quick_edges = 0;
    Index lp_edges = 0;
    Index harvested = 0;
    Index coplanar_ties = 0;
};

struct AdjacencyResult {
    AdjacencyMatrix adjacency;
    FacetRegistry registry;
    std::vector<EdgeRecord> edges;
    AdjacencyStats stats;
};

/// Classifies every unordered pair in parallel and merges the verdicts and
/// harvested facets in (i, j) lexicographic order. Throws DegeneratePolytope
/// when a vertex ends with fewer than d neighbours and `check_degree` is set.
AdjacencyResult build_adjacency(const CenteredPolytope& P, const Tolerances& tol = {}, bool check_degree = true);
/// Single-threaded reference for build_adjacency; identical output.
AdjacencyResult build_adjacency_serial(const CenteredPolytope& P, const Tolerances& tol = {},
                                       bool check_degree = true);

/// Calls `visit` for every branch under `root` in lexicographic order. A
/// branch is a simple path root = b_1, ..., b_d along edges in which each
/// interior vertex b_k (1 < k < d) is adjacent, among the path's vertices,
/// only to b_{k-1} and b_{k+1}.
void for_each_branch(const AdjacencyMatrix& D, Index root, Index d,
                     const std::function<void(std::span<const Index>)>& visit);
std::vector<std::vector<Index>> enumerate_branches(const AdjacencyMatrix& D, Index root, Index d);

/// Solves U_branch h = 1 by Gaussian elimination with partial pivoting.
/// std::nullopt when a pivot falls below tol_eq or the pivot ratio exceeds 1/tol_eq.
std::optional<Hyperplane> hyperplane_from_branch(const CenteredPolytope& P, std::span<const Index> branch,
                                                 const Tolerances& tol = {});

enum class Validation { Accept, RejectViolated, RejectDuplicate, RejectOrientation };

const char* to_string(Validation v) noexcept;

/// On Accept the facet is appended to `registry` with its full tight set.
Validation validate_hyperplane(const Hyperplane& h, const CenteredPolytope& P, FacetRegistry& registry,
                               std::optional<Index> root, const Tolerances& tol = {},
                               FacetSource source = FacetSource::Branch);

/// Facets of the facet `id`, as vertex-index sets (its ridges).
std::vector<std::vector<Index>> facet_ridges(const CenteredPolytope& P, const FacetRegistry& registry, Index id,
                                             const Tolerances& tol = {});

struct EnumerateOptions {
    /// Fill gaps left by the branch search (restricted brute force around
    /// under-covered vertices, then wrapping across uncovered ridges).
    bool repair = true;
    bool parallel = true;
};

struct EnumerateStats {
    Index vertices = 0;
    Index dimension = 0;
    Index facets = 0;
    Index edges = 0;
    AdjacencyStats adjacency;
    Index branches = 0;
    Index pruned_branches = 0;
    Index singular_branches = 0;
    Index rejected_violated = 0;
    Index rejected_duplicate = 0;
    Index rejected_orientation = 0;
    Index facets_from_search = 0;
    Index facets_from_repair = 0;
    Index rounds = 0;
    double adjacency_seconds = 0.0;
    double total_seconds = 0.0;
};

struct FacetEnumeration {
    HRepresentation hrep;
    CenteredPolytope polytope;  // rescaled, as used by the search
    AdjacencyMatrix adjacency;
    std::vector<EdgeRecord> edges;
    std::vector<Hyperplane> planes;  // centered and rescaled, row-aligned with hrep
    EnumerateStats stats;
};

/// Full pipeline: centering, adjacency, breadth-first facet search, optional
/// repair, verification, and the shift back to original coordinates.
/// Throws NotFullDimensional, DegeneratePolytope, IncompleteEnumeration.
FacetEnumeration enumerate_facets(const VertexMatrix& V, const Tolerances& tol = {}, EnumerateOptions options = {});

}  // namespace polyfacet
