#include "polyfacet/hyperplane_index.hpp"

#include <cmath>

namespace polyfacet {

namespace {

// Coordinates within this many grid units of a rounding boundary also probe
// the other side.
constexpr double kBoundaryMargin = 0.25;
constexpr std::size_t kMaxProbeBits = 10;

}  // namespace

HyperplaneIndex::HyperplaneIndex(double tol_face)
    : tol_face_(tol_face),
      digits_(static_cast<int>(std::ceil(-std::log10(tol_face)))),
      grid_(std::pow(10.0, digits_)) {}

HyperplaneIndex::Key HyperplaneIndex::key(const Vector& normal) const {
    Key out(static_cast<std::size_t>(normal.size()));
    for (Eigen::Index c = 0; c < normal.size(); ++c) {
        out[static_cast<std::size_t>(c)] = std::llround(normal[c] * grid_);
    }
    return out;
}

std::size_t HyperplaneIndex::KeyHash::operator()(const Key& key) const noexcept {
    std::size_t seed = key.size();
    for (std::int64_t v : key) {
        seed ^= std::hash<std::int64_t>{}(v) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
    }
    return seed;
}

bool HyperplaneIndex::matches(Index id, const Vector& normal) const {
    return (normals_[id] - normal).cwiseAbs().maxCoeff() <= tol_face_;
}

std::optional<Index> HyperplaneIndex::find(const Vector& normal) const {
    const Key base = key(normal);
    std::vector<std::size_t> ambiguous;
    std::vector<std::int64_t> alternate;
    for (Eigen::Index c = 0; c < normal.size(); ++c) {
        const double scaled = normal[c] * grid_;
        const double offset = scaled - std::floor(scaled);
        if (std::abs(offset - 0.5) <= kBoundaryMargin) {
            ambiguous.push_back(static_cast<std::size_t>(c));
            // the other neighbour of the rounding boundary
            const auto rounded = base[static_cast<std::size_t>(c)];
            alternate.push_back(rounded == static_cast<std::int64_t>(std::floor(scaled)) ? rounded + 1 : rounded - 1);
        }
    }

    if (ambiguous.size() > kMaxProbeBits) {
        for (Index id = 0; id < normals_.size(); ++id) {
            if (matches(id, normal)) {
                return id;
            }
        }
        return std::nullopt;
    }

    const std::size_t combos = std::size_t{1} << ambiguous.size();
    Key probe = base;
    for (std::size_t mask = 0; mask < combos; ++mask) {
        for (std::size_t b = 0; b < ambiguous.size(); ++b) {
            probe[ambiguous[b]] = (mask >> b) & 1U ? alternate[b] : base[ambiguous[b]];
        }
        if (auto it = buckets_.find(probe); it != buckets_.end()) {
            for (Index id : it->second) {
                if (matches(id, normal)) {
                    return id;
                }
            }
        }
    }
    return std::nullopt;
}

Index HyperplaneIndex::insert(const Vector& normal) {
    const Index id = normals_.size();
    normals_.push_back(normal);
    buckets_[key(normal)].push_back(id);
    return id;
}

}  // namespace polyfacet
