#include "polyfacet/verify.hpp"

#include "polyfacet/hyperplane_index.hpp"

#include <cmath>

namespace polyfacet {

SetComparison compare_facets(const std::vector<Hyperplane>& engine, const std::vector<OracleFacet>& oracle,
                             double tol_face) {
    HyperplaneIndex index(tol_face);
    for (const auto& f : oracle) index.insert(f.plane.normal);
    std::vector<char> hit(oracle.size(), 0);
    SetComparison out;
    for (const auto& h : engine) {
        if (auto id = index.find(h.normal); id && !hit[*id]) {
            hit[*id] = 1;
            ++out.matched;
        } else {
            ++out.only_engine;
        }
    }
    out.only_oracle = oracle.size() - out.matched;
    return out;
}

SetComparison compare_edges(const std::vector<std::pair<Index, Index>>& engine,
                            const std::set<std::pair<Index, Index>>& oracle) {
    SetComparison out;
    for (const auto& e : engine) {
        if (oracle.count(e)) {
            ++out.matched;
        } else {
            ++out.only_engine;
        }
    }
    out.only_oracle = oracle.size() - out.matched;
    return out;
}

std::vector<std::string> check_hrep(const HRepresentation& hrep, const VertexMatrix& V, double tol) {
    std::vector<std::string> problems;
    const Matrix residual = (V.rows() * hrep.H.transpose()).rowwise() - hrep.b.transpose();  // n x m
    const auto n = residual.rows();
    const auto m = residual.cols();
    const auto d = static_cast<Eigen::Index>(V.dim());
    for (Eigen::Index j = 0; j < m; ++j) {
        Eigen::Index tight = 0;
        for (Eigen::Index i = 0; i < n; ++i) {
            if (residual(i, j) > tol) {
                problems.push_back("vertex " + std::to_string(i + 1) + " violates row " + std::to_string(j + 1));
            }
            if (std::abs(residual(i, j)) <= tol) ++tight;
        }
        if (tight < d) {
            problems.push_back("row " + std::to_string(j + 1) + " is tight for only " + std::to_string(tight) +
                               " vertices");
        }
        if (hrep.incidence.rows() == static_cast<Index>(m)) {
            for (Eigen::Index i = 0; i < n; ++i) {
                const bool marked = hrep.incidence(static_cast<Index>(j), static_cast<Index>(i));
                if (marked != (std::abs(residual(i, j)) <= tol)) {
                    problems.push_back("incidence mismatch at row " + std::to_string(j + 1) + ", vertex " +
                                       std::to_string(i + 1));
                }
            }
        }
    }
    for (Eigen::Index i = 0; i < n; ++i) {
        Eigen::Index rows = 0;
        for (Eigen::Index j = 0; j < m; ++j) {
            if (std::abs(residual(i, j)) <= tol) ++rows;
        }
        if (rows < d) {
            problems.push_back("vertex " + std::to_string(i + 1) + " is tight on only " + std::to_string(rows) + " rows");
        }
    }
    return problems;
}

bool same_rows_up_to_permutation(const Matrix& Ha, const Vector& ba, const Matrix& Hb, const Vector& bb, double tol) {
    if (Ha.rows() != Hb.rows() || Ha.cols() != Hb.cols()) return false;
    std::vector<char> used(static_cast<std::size_t>(Hb.rows()), 0);
    for (Eigen::Index r = 0; r < Ha.rows(); ++r) {
        bool found = false;
        for (Eigen::Index s = 0; s < Hb.rows() && !found; ++s) {
            if (used[static_cast<std::size_t>(s)]) continue;
            if ((Ha.row(r) - Hb.row(s)).cwiseAbs().maxCoeff() <= tol && std::abs(ba[r] - bb[s]) <= tol) {
                used[static_cast<std::size_t>(s)] = 1;
                found = true;
            }
        }
        if (!found) return false;
    }
    return true;
}

}  // namespace polyfacet
