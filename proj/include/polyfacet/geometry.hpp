#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace polyfacet {

using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vector = Eigen::VectorXd;
using Index = std::size_t;

/// Comparison bands. All geometry runs on inputs rescaled to unit magnitude,
/// so these are absolute.
struct Tolerances {
    double tol_eq = 1e-9;
    double tol_face = 1e-8;
    double tol_lp = 1e-9;

    /// Throws InvalidArgument unless all bands are positive and tol_face >= tol_eq.
    void validate() const;
};

/// Dense row-major boolean matrix. Used for the vertex adjacency matrix and
/// the facet/vertex incidence matrix.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(Index rows, Index cols) : rows_(rows), cols_(cols), bits_(rows * cols, 0) {}

    Index rows() const noexcept { return rows_; }
    Index cols() const noexcept { return cols_; }

    bool operator()(Index r, Index c) const { return bits_[r * cols_ + c] != 0; }
    void set(Index r, Index c, bool value = true) { bits_[r * cols_ + c] = value ? 1 : 0; }

    Index row_count(Index r) const;
    Index total() const;

    /// Appends a row whose set bits are `members`. Requires cols() to be fixed.
    void append_row(std::span<const Index> members);

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
    Index rows_ = 0;
    Index cols_ = 0;
    std::vector<std::uint8_t> bits_;
};

/// Polytope vertices in original coordinates, one per row.
class VertexMatrix {
public:
    VertexMatrix() = default;
    /// Throws DegenerateInput unless d >= 1 and n >= d + 1, and every entry is finite.
    explicit VertexMatrix(Matrix rows);

    Index count() const noexcept { return static_cast<Index>(rows_.rows()); }
    Index dim() const noexcept { return static_cast<Index>(rows_.cols()); }
    const Matrix& rows() const noexcept { return rows_; }
    Vector row(Index i) const { return rows_.row(static_cast<Eigen::Index>(i)).transpose(); }

private:
    Matrix rows_;
};

/// Vertices translated so their mean sits at the origin, then multiplied by
/// `scale`: vertex(i) == scale * (v_i - centroid).
struct CenteredPolytope {
    Matrix vertices;
    Vector centroid;
    double scale = 1.0;

    Index count() const noexcept { return static_cast<Index>(vertices.rows()); }
    Index dim() const noexcept { return static_cast<Index>(vertices.cols()); }
    auto vertex(Index i) const { return vertices.row(static_cast<Eigen::Index>(i)); }
};

/// The hyperplane {x : normal . x = 1} in centered coordinates.
struct Hyperplane {
    Vector normal;

    double at(const Eigen::Ref<const Vector>& x) const { return normal.dot(x); }
};

/// H x <= b in original coordinates, with the facet/vertex incidence F.
struct HRepresentation {
    Matrix H;
    Vector b;
    BitMatrix incidence;

    Index facet_count() const noexcept { return static_cast<Index>(H.rows()); }
};

/// Centroid = vertex mean. Throws DegenerateInput if two vertices coincide
/// within tol_eq.
CenteredPolytope center_vertices(const VertexMatrix& V, const Tolerances& tol = {});

/// Rescales by a power of two so that the largest |coordinate| lies in (0.5, 1].
CenteredPolytope rescale_unit(const CenteredPolytope& P);

/// Point on the line through u_i and u_j closest to the origin. Returns
/// std::nullopt when that point is the origin (the line passes through the
/// centroid, so the pair cannot be an edge). Throws IdenticalVertices.
std::optional<Vector> perpendicular_foot(const Eigen::Ref<const Vector>& u_i,
                                         const Eigen::Ref<const Vector>& u_j,
                                         const Tolerances& tol = {});

/// h = z / |z|^2, the hyperplane through z orthogonal to z. Throws ZeroFoot.
Hyperplane hyperplane_through_foot(const Eigen::Ref<const Vector>& z, const Tolerances& tol = {});

/// Indices k with |h . u_k - 1| <= tol_face.
std::vector<Index> tight_set(const Hyperplane& h, const CenteredPolytope& P, double tol_face);

/// Largest h . u_k over all vertices.
double max_support(const Hyperplane& h, const CenteredPolytope& P);

/// Numerical rank of the listed vertices as vectors (rows of U).
Index vertex_rank(const CenteredPolytope& P, std::span<const Index> members, double tol);

/// Converts a centered-coordinate facet normal to an original-coordinate row
/// (H_j, b_j) with H_j x <= b_j.
std::pair<Vector, double> to_original(const Hyperplane& h, const CenteredPolytope& P);

}  // namespace polyfacet
