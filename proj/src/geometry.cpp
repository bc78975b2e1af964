#include "polyfacet/geometry.hpp"

#include "polyfacet/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace polyfacet {

void Tolerances::validate() const {
    if (!(tol_eq > 0.0) || !(tol_face > 0.0) || !(tol_lp > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "tolerances must be strictly positive");
    }
    if (tol_face < tol_eq) {
        throw Error(ErrorCode::InvalidArgument, "tol_face must not be smaller than tol_eq");
    }
}

Index BitMatrix::row_count(Index r) const {
    auto first = bits_.begin() + static_cast<std::ptrdiff_t>(r * cols_);
    return static_cast<Index>(std::count(first, first + static_cast<std::ptrdiff_t>(cols_), 1));
}

Index BitMatrix::total() const {
    return static_cast<Index>(std::count(bits_.begin(), bits_.end(), 1));
}

void BitMatrix::append_row(std::span<const Index> members) {
    bits_.resize(bits_.size() + cols_, 0);
    for (Index c : members) {
        bits_[rows_ * cols_ + c] = 1;
    }
    ++rows_;
}

VertexMatrix::VertexMatrix(Matrix rows) : rows_(std::move(rows)) {
    const auto n = rows_.rows();
    const auto d = rows_.cols();
    if (d < 1) {
        throw Error(ErrorCode::DegenerateInput, "dimension must be at least 1");
    }
    if (n < d + 1) {
        throw Error(ErrorCode::DegenerateInput,
                    "need at least d+1 = " + std::to_string(d + 1) + " vertices, got " + std::to_string(n));
    }
    if (!rows_.allFinite()) {
        throw Error(ErrorCode::DegenerateInput, "non-finite coordinate");
    }
}

CenteredPolytope center_vertices(const VertexMatrix& V, const Tolerances& tol) {
    const Matrix& rows = V.rows();
    CenteredPolytope P;
    P.centroid = rows.colwise().mean().transpose();
    P.vertices = rows.rowwise() - P.centroid.transpose();
    P.scale = 1.0;

    const auto n = rows.rows();
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i + 1; j < n; ++j) {
            if ((rows.row(i) - rows.row(j)).cwiseAbs().maxCoeff() <= tol.tol_eq) {
                throw Error(ErrorCode::DegenerateInput, "vertices " + std::to_string(i + 1) + " and " +
                                                            std::to_string(j + 1) + " coincide");
            }
        }
    }
    return P;
}

CenteredPolytope rescale_unit(const CenteredPolytope& P) {
    const double largest = P.vertices.cwiseAbs().maxCoeff();
    if (!(largest > 0.0)) {
        return P;
    }
    // largest = f * 2^e with f in [0.5, 1); choose factor 2^-e, or 2^-(e-1) when f == 0.5.
    int exponent = 0;
    const double mantissa = std::frexp(largest, &exponent);
    if (mantissa == 0.5) {
        --exponent;
    }
    const double factor = std::ldexp(1.0, -exponent);
    CenteredPolytope out = P;
    out.vertices *= factor;
    out.scale = P.scale * factor;
    return out;
}

std::optional<Vector> perpendicular_foot(const Eigen::Ref<const Vector>& u_i, const Eigen::Ref<const Vector>& u_j,
                                         const Tolerances& tol) {
    const Vector direction = u_j - u_i;
    const double length2 = direction.squaredNorm();
    if (std::sqrt(length2) <= tol.tol_eq) {
        throw Error(ErrorCode::IdenticalVertices, "perpendicular foot of a degenerate segment");
    }
    const double t = -u_i.dot(direction) / length2;
    Vector z = u_i + t * direction;
    if (z.norm() <= tol.tol_eq) {
        return std::nullopt;
    }
    return z;
}

Hyperplane hyperplane_through_foot(const Eigen::Ref<const Vector>& z, const Tolerances& tol) {
    const double norm2 = z.squaredNorm();
    if (std::sqrt(norm2) <= tol.tol_eq) {
        throw Error(ErrorCode::ZeroFoot, "foot point at the origin defines no hyperplane");
    }
    return Hyperplane{z / norm2};
}

std::vector<Index> tight_set(const Hyperplane& h, const CenteredPolytope& P, double tol_face) {
    std::vector<Index> members;
    const Vector values = P.vertices * h.normal;
    for (Index k = 0; k < P.count(); ++k) {
        if (std::abs(values[static_cast<Eigen::Index>(k)] - 1.0) <= tol_face) {
            members.push_back(k);
        }
    }
    return members;
}

double max_support(const Hyperplane& h, const CenteredPolytope& P) {
    return (P.vertices * h.normal).maxCoeff();
}

Index vertex_rank(const CenteredPolytope& P, std::span<const Index> members, double tol) {
    if (members.empty()) {
        return 0;
    }
    Matrix block(static_cast<Eigen::Index>(members.size()), P.vertices.cols());
    for (std::size_t r = 0; r < members.size(); ++r) {
        block.row(static_cast<Eigen::Index>(r)) = P.vertex(members[r]);
    }
    Eigen::FullPivLU<Matrix> lu(block);
    lu.setThreshold(tol);
    return static_cast<Index>(lu.rank());
}

std::pair<Vector, double> to_original(const Hyperplane& h, const CenteredPolytope& P) {
    Vector row = P.scale * h.normal;
    const double rhs = 1.0 + row.dot(P.centroid);
    return {std::move(row), rhs};
}

}  // namespace polyfacet
