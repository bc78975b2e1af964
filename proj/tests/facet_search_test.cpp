#include "fixtures.hpp"

#include "polyfacet/error.hpp"
#include "polyfacet/facet_search.hpp"
#include "polyfacet/oracle.hpp"
#include "polyfacet/verify.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

namespace polyfacet {
namespace {

using testing::load;
using testing::rows_of;
using testing::vec;

CenteredPolytope prepared(const std::string& name) { return rescale_unit(center_vertices(load(name))); }

ErrorCode enumerate_error(const VertexMatrix& V, EnumerateOptions options = {}) {
    try {
        enumerate_facets(V, {}, options);
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "enumeration succeeded";
    return ErrorCode::InvalidArgument;
}

TEST(Adjacency, Cube) {
    const auto r = build_adjacency(prepared("cube.ext"));
    EXPECT_EQ(r.adjacency.edge_count(), 12u);
    EXPECT_TRUE(r.adjacency.symmetric());
    for (Index i = 0; i < 8; ++i) EXPECT_EQ(r.adjacency.degree(i), 3u);
    EXPECT_EQ(r.stats.pairs, 28u);
    EXPECT_EQ(r.stats.at_origin, 4u);
}

TEST(Adjacency, PrismAndTriangle) {
    const auto prism = build_adjacency(prepared("prism.ext"));
    EXPECT_EQ(prism.adjacency.edge_count(), 18u);
    EXPECT_EQ(prism.stats.quick_edges, 14u);
    EXPECT_EQ(prism.stats.lp_edges, 4u);

    const auto tri = build_adjacency(prepared("triangle.ext"));
    EXPECT_EQ(tri.adjacency.edges(), (std::vector<std::pair<Index, Index>>{{0, 1}, {0, 2}, {1, 2}}));
}

TEST(Adjacency, SerialMatchesParallel) {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        const auto P = rescale_unit(center_vertices(sample_polytope(30, 2 + seed % 3, seed)));
        const auto a = build_adjacency(P);
        const auto b = build_adjacency_serial(P);
        EXPECT_EQ(a.adjacency, b.adjacency);
        EXPECT_EQ(a.registry.size(), b.registry.size());
        ASSERT_EQ(a.edges.size(), b.edges.size());
        for (std::size_t k = 0; k < a.edges.size(); ++k) {
            EXPECT_EQ(a.edges[k].i, b.edges[k].i);
            EXPECT_EQ(a.edges[k].j, b.edges[k].j);
            EXPECT_EQ(a.edges[k].method, b.edges[k].method);
        }
        for (Index f = 0; f < a.registry.size(); ++f) {
            EXPECT_EQ(a.registry.plane(f).normal, b.registry.plane(f).normal);
        }
    }
}

TEST(Branches, TriangleRoot) {
    const auto D = build_adjacency(prepared("triangle.ext")).adjacency;
    EXPECT_EQ(enumerate_branches(D, 0, 2), (std::vector<std::vector<Index>>{{0, 1}, {0, 2}}));
}

TEST(Branches, TwoDimensionalBranchesAreEdges) {
    const auto P = rescale_unit(center_vertices(sample_polytope(9, 2, 3)));
    const auto D = build_adjacency(P).adjacency;
    for (Index r = 0; r < P.count(); ++r) {
        std::vector<std::vector<Index>> expected;
        for (Index s : D.neighbors(r)) expected.push_back({r, s});
        EXPECT_EQ(enumerate_branches(D, r, 2), expected);
    }
}

TEST(Branches, CubeCornerBranchesAreCoplanar) {
    const auto P = prepared("cube.ext");
    const auto D = build_adjacency(P).adjacency;
    const auto branches = enumerate_branches(D, 0, 3);
    EXPECT_EQ(branches.size(), 6u);
    for (const auto& b : branches) {
        ASSERT_EQ(b.size(), 3u);
        EXPECT_EQ(b[0], 0u);
        const auto h = hyperplane_from_branch(P, b);
        ASSERT_TRUE(h);
        // The plane through the three vertices also holds the fourth corner of the face.
        EXPECT_EQ(tight_set(*h, P, 1e-8).size(), 4u);
        EXPECT_LE(max_support(*h, P), 1 + 1e-8);
    }
}

TEST(Branches, InteriorVerticesHaveNoChords) {
    const auto P = rescale_unit(center_vertices(sample_polytope(14, 3, 21)));
    const auto D = build_adjacency(P).adjacency;
    for (Index r = 0; r < P.count(); ++r) {
        for (const auto& b : enumerate_branches(D, r, 3)) {
            EXPECT_TRUE(D(b[0], b[1]) && D(b[1], b[2]));
            EXPECT_NE(b[0], b[2]);
        }
    }
}

TEST(BranchPlane, Examples) {
    const auto cube = center_vertices(load("cube.ext"));
    // (0.5,-0.5,-0.5), (0.5,0.5,-0.5), (0.5,0.5,0.5)
    const std::vector<Index> face{3, 6, 7};
    const auto h = hyperplane_from_branch(cube, face);
    ASSERT_TRUE(h);
    EXPECT_LE((h->normal - vec({2, 0, 0})).cwiseAbs().maxCoeff(), 1e-12);

    const auto octa = center_vertices(load("octahedron.ext"));
    const std::vector<Index> top{0, 3, 4};
    const auto g = hyperplane_from_branch(octa, top);
    ASSERT_TRUE(g);
    EXPECT_LE((g->normal - vec({1, 1, 1})).cwiseAbs().maxCoeff(), 1e-12);

    CenteredPolytope line;
    line.vertices = rows_of({{0, 0, 1}, {0, 0, 2}, {0, 0, 3}, {1, 0, 0}});
    line.centroid = Vector::Zero(3);
    const std::vector<Index> collinear{0, 1, 2};
    EXPECT_FALSE(hyperplane_from_branch(line, collinear));
}

TEST(Validate, Rules) {
    const auto cube = center_vertices(load("cube.ext"));
    FacetRegistry registry(cube.count(), 1e-8);
    const Hyperplane face{vec({2, 0, 0})};
    EXPECT_EQ(validate_hyperplane(face, cube, registry, 3), Validation::Accept);
    ASSERT_EQ(registry.size(), 1u);
    EXPECT_EQ(registry.tight(0), (std::vector<Index>{3, 5, 6, 7}));
    EXPECT_EQ(registry.facets_of(5), std::vector<Index>{0});
    EXPECT_EQ(validate_hyperplane(face, cube, registry, 3), Validation::RejectDuplicate);

    const auto octa = center_vertices(load("octahedron.ext"));
    FacetRegistry other(octa.count(), 1e-8);
    EXPECT_EQ(validate_hyperplane(Hyperplane{vec({2, 2, 2})}, octa, other, 0), Validation::RejectViolated);
    EXPECT_EQ(validate_hyperplane(Hyperplane{vec({-1, -1, -1})}, octa, other, 0), Validation::RejectOrientation);
    EXPECT_EQ(validate_hyperplane(Hyperplane{vec({-1, -1, -1})}, octa, other, std::nullopt), Validation::Accept);
    EXPECT_EQ(other.tight(0), (std::vector<Index>{1, 2, 5}));
}

TEST(Ridges, CubeFaceAndSimplexFacet) {
    const auto cube = prepared("cube.ext");
    FacetRegistry registry(cube.count(), 1e-8);
    const double s = cube.vertex(7)[0];
    validate_hyperplane(Hyperplane{vec({1 / s, 0, 0})}, cube, registry, std::nullopt);
    auto ridges = facet_ridges(cube, registry, 0);
    std::sort(ridges.begin(), ridges.end());
    EXPECT_EQ(ridges, (std::vector<std::vector<Index>>{{3, 5}, {3, 6}, {5, 7}, {6, 7}}));

    const auto octa = prepared("octahedron.ext");
    FacetRegistry tri(octa.count(), 1e-8);
    const double t = octa.vertex(0)[2];
    validate_hyperplane(Hyperplane{vec({1 / t, 1 / t, 1 / t})}, octa, tri, std::nullopt);
    EXPECT_EQ(facet_ridges(octa, tri, 0).size(), 3u);
}

TEST(Enumerate, GoldenFixtures) {
    for (const auto& g : testing::golden_fixtures()) {
        SCOPED_TRACE(g.file);
        const auto V = load(g.file);
        const auto result = enumerate_facets(V);
        EXPECT_EQ(result.hrep.facet_count(), static_cast<Index>(g.H.rows()));
        EXPECT_TRUE(same_rows_up_to_permutation(result.hrep.H, result.hrep.b, g.H, g.b, 1e-8));
        EXPECT_TRUE(check_hrep(result.hrep, V, 1e-8).empty());
        EXPECT_EQ(result.stats.facets, static_cast<Index>(g.H.rows()));
    }
}

TEST(Enumerate, SerialMatchesParallel) {
    const auto V = sample_polytope(40, 3, 17);
    const auto a = enumerate_facets(V, {}, {.repair = true, .parallel = true});
    const auto b = enumerate_facets(V, {}, {.repair = true, .parallel = false});
    EXPECT_EQ(a.hrep.H, b.hrep.H);
    EXPECT_EQ(a.hrep.b, b.hrep.b);
    EXPECT_EQ(a.hrep.incidence, b.hrep.incidence);
}

TEST(Enumerate, ThreeDimensionalWithoutRepair) {
    for (const char* name : {"cube.ext", "octahedron.ext", "prism.ext"}) {
        const auto r = enumerate_facets(load(name), {}, {.repair = false});
        EXPECT_EQ(r.stats.facets_from_repair, 0u) << name;
    }
}

TEST(Enumerate, CrossPolytopeNeedsRepair) {
    EXPECT_EQ(enumerate_error(load("cross4.ext"), {.repair = false}), ErrorCode::IncompleteEnumeration);
    const auto r = enumerate_facets(load("cross4.ext"));
    EXPECT_EQ(r.stats.facets, 16u);
    EXPECT_GT(r.stats.facets_from_repair, 0u);
}

TEST(Enumerate, InputErrors) {
    EXPECT_EQ(enumerate_error(VertexMatrix(rows_of({{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}}))),
              ErrorCode::NotFullDimensional);
    // A point in the middle of an edge is not a vertex.
    EXPECT_EQ(enumerate_error(VertexMatrix(rows_of({{0, 0}, {2, 0}, {2, 2}, {0, 2}, {1, 0}}))),
              ErrorCode::DegeneratePolytope);
    EXPECT_EQ(enumerate_error(VertexMatrix(rows_of({{0}, {1}}))), ErrorCode::InvalidArgument);
}

TEST(Enumerate, PermutationAndTranslationInvariant) {
    const auto V = sample_polytope(13, 3, 5);
    const auto base = enumerate_facets(V);
    std::vector<Eigen::Index> order(V.count());
    std::iota(order.begin(), order.end(), 0);
    std::mt19937_64 rng(3);
    std::shuffle(order.begin(), order.end(), rng);
    Matrix permuted(V.count(), V.dim());
    for (std::size_t k = 0; k < order.size(); ++k) permuted.row(static_cast<Eigen::Index>(k)) = V.rows().row(order[k]);
    const auto p = enumerate_facets(VertexMatrix(permuted));
    EXPECT_TRUE(same_rows_up_to_permutation(base.hrep.H, base.hrep.b, p.hrep.H, p.hrep.b, 1e-8));

    const Vector w = vec({3.5, -2, 10});
    const auto t = enumerate_facets(VertexMatrix(Matrix(V.rows().rowwise() + w.transpose())));
    const Vector shifted_b = base.hrep.b + base.hrep.H * w;
    EXPECT_TRUE(same_rows_up_to_permutation(base.hrep.H, shifted_b, t.hrep.H, t.hrep.b, 1e-8));
}

Matrix hypercube(int d) {
    Matrix M(1 << d, d);
    for (int k = 0; k < (1 << d); ++k) {
        for (int j = 0; j < d; ++j) M(k, j) = (k >> j) & 1;
    }
    return M;
}

struct Counts {
    Index facets;
    Index edges;
};

Counts counts_of(const Matrix& M) {
    const VertexMatrix V(M);
    const auto r = enumerate_facets(V);
    EXPECT_TRUE(check_hrep(r.hrep, V, 1e-8).empty());
    return {r.hrep.facet_count(), r.adjacency.edge_count()};
}

TEST(Enumerate, DegenerateClassics) {
    for (int d = 2; d <= 5; ++d) {
        const auto c = counts_of(hypercube(d));
        EXPECT_EQ(c.facets, static_cast<Index>(2 * d)) << d;
        EXPECT_EQ(c.edges, static_cast<Index>(d << (d - 1))) << d;
    }

    // 24-cell: all permutations of (+-1, +-1, 0, 0).
    Matrix cell(24, 4);
    Eigen::Index row = 0;
    for (int a = 0; a < 4; ++a) {
        for (int b = a + 1; b < 4; ++b) {
            for (int sa : {-1, 1}) {
                for (int sb : {-1, 1}) {
                    cell.row(row).setZero();
                    cell(row, a) = sa;
                    cell(row, b) = sb;
                    ++row;
                }
            }
        }
    }
    const auto c24 = counts_of(cell);
    EXPECT_EQ(c24.facets, 24u);
    EXPECT_EQ(c24.edges, 96u);

    // Permutohedron of order 4, projected to 3D.
    std::vector<int> perm{1, 2, 3, 4};
    Matrix perm3(24, 3);
    row = 0;
    do {
        perm3.row(row++) << perm[0] - perm[3], perm[1] - perm[3], perm[2] - perm[3];
    } while (std::next_permutation(perm.begin(), perm.end()));
    const auto cp = counts_of(perm3);
    EXPECT_EQ(cp.facets, 14u);
    EXPECT_EQ(cp.edges, 36u);
}

TEST(Registry, ContainingCountsFacets) {
    const auto P = prepared("cube.ext");
    const auto r = enumerate_facets(load("cube.ext"));
    FacetRegistry registry(P.count(), 1e-8);
    for (const auto& h : r.planes) validate_hyperplane(h, P, registry, std::nullopt);
    const std::vector<Index> corner{7};
    const std::vector<Index> edge{6, 7};
    const std::vector<Index> diagonal{0, 7};
    EXPECT_EQ(registry.containing(corner), 3u);
    EXPECT_EQ(registry.containing(edge), 2u);
    EXPECT_EQ(registry.containing(diagonal), 0u);
}

}  // namespace
}  // namespace polyfacet
