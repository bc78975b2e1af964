#pragma once

#include "polyfacet/geometry.hpp"

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

namespace polyfacet {

/// Set of hyperplane normals with duplicate detection.
///
/// Each normal is keyed by its coordinates rounded to ceil(-log10 tol_face)
/// decimals. A lookup probes the rounded key, plus the neighbouring key for any
/// coordinate that sits close to a rounding boundary, and confirms candidates
/// with |h_a - h_b|_inf <= tol_face. The engine's facet registry and the
/// brute-force oracle share this type so their facet sets compare exactly.
class HyperplaneIndex {
public:
    using Key = std::vector<std::int64_t>;

    explicit HyperplaneIndex(double tol_face);

    std::optional<Index> find(const Vector& normal) const;
    /// Inserts unconditionally and returns the new id.
    Index insert(const Vector& normal);

    Index size() const noexcept { return static_cast<Index>(normals_.size()); }
    const Vector& normal(Index id) const { return normals_[id]; }

    Key key(const Vector& normal) const;
    int digits() const noexcept { return digits_; }

private:
    struct KeyHash {
        std::size_t operator()(const Key& key) const noexcept;
    };

    bool matches(Index id, const Vector& normal) const;

    double tol_face_;
    int digits_;
    double grid_;
    std::vector<Vector> normals_;
    std::unordered_map<Key, std::vector<Index>, KeyHash> buckets_;
};

}  // namespace polyfacet
