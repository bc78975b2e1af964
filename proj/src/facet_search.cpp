#include "polyfacet/facet_search.hpp"

#include "polyfacet/error.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <deque>
#include <string>

namespace polyfacet {

const char* to_string(Validation v) noexcept {
    switch (v) {
        case Validation::Accept: return "Accept";
        case Validation::RejectViolated: return "RejectViolated";
        case Validation::RejectDuplicate: return "RejectDuplicate";
        case Validation::RejectOrientation: return "RejectOrientation";
    }
    return "?";
}

FacetRegistry::FacetRegistry(Index vertex_count, double tol_face)
    : index_(tol_face), vertex_facets_(vertex_count), incidence_(0, vertex_count) {}

Index FacetRegistry::add(const Hyperplane& h, std::vector<Index> tight, FacetSource source) {
    const Index id = index_.insert(h.normal);
    incidence_.append_row(tight);
    for (Index k : tight) vertex_facets_[k].push_back(id);
    planes_.push_back(h);
    tight_.push_back(std::move(tight));
    sources_.push_back(source);
    return id;
}

Index FacetRegistry::containing(std::span<const Index> vertices) const {
    if (vertices.empty()) return size();
    Index count = 0;
    for (Index id : vertex_facets_[vertices.front()]) {
        const bool all = std::all_of(vertices.begin() + 1, vertices.end(),
                                     [&](Index k) { return incidence_(id, k); });
        if (all) ++count;
    }
    return count;
}

namespace {

struct BranchWalker {
    const AdjacencyMatrix& D;
    Index d;
    const std::function<void(std::span<const Index>)>& visit;
    std::vector<Index> path;
    std::vector<char> used;

    void extend() {
        if (path.size() == d) {
            visit(path);
            return;
        }
        const Index tail = path.back();
        const Index position = path.size();  // 0-based slot of the candidate
        for (Index w = 0; w < D.size(); ++w) {
            if (used[w] || !D(tail, w)) continue;
            // w may touch earlier path vertices only as root-to-endpoint closure.
            bool ok = true;
            for (Index slot = 0; slot + 1 < position && ok; ++slot) {
                if (D(path[slot], w) && !(slot == 0 && position == d - 1)) ok = false;
            }
            if (!ok) continue;
            used[w] = 1;
            path.push_back(w);
            extend();
            path.pop_back();
            used[w] = 0;
        }
    }
};

// Gaussian elimination with partial pivoting on a small dense system.
std::optional<Vector> solve_small(Matrix A, Vector rhs, double tol_eq) {
    const Eigen::Index n = A.rows();
    double largest = 0.0;
    double smallest = std::numeric_limits<double>::infinity();
    for (Eigen::Index col = 0; col < n; ++col) {
        Eigen::Index pivot = col;
        for (Eigen::Index r = col + 1; r < n; ++r) {
            if (std::abs(A(r, col)) > std::abs(A(pivot, col))) pivot = r;
        }
        const double p = std::abs(A(pivot, col));
        if (p < tol_eq) return std::nullopt;
        largest = std::max(largest, p);
        smallest = std::min(smallest, p);
        if (pivot != col) {
            A.row(pivot).swap(A.row(col));
            std::swap(rhs[pivot], rhs[col]);
        }
        for (Eigen::Index r = col + 1; r < n; ++r) {
            const double factor = A(r, col) / A(col, col);
            if (factor == 0.0) continue;
            A.row(r).tail(n - col) -= factor * A.row(col).tail(n - col);
            rhs[r] -= factor * rhs[col];
        }
    }
    if (largest > smallest / tol_eq) return std::nullopt;
    Vector x(n);
    for (Eigen::Index r = n - 1; r >= 0; --r) {
        x[r] = (rhs[r] - A.row(r).tail(n - r - 1).dot(x.tail(n - r - 1))) / A(r, r);
    }
    return x;
}

// Every k-subset of `pool` (sorted), in lexicographic order.
template <typename Fn>
void for_each_subset(const std::vector<Index>& pool, Index k, Fn&& fn) {
    if (k > pool.size()) return;
    std::vector<Index> pick(k);
    std::vector<Index> chosen(k);
    for (Index t = 0; t < k; ++t) pick[t] = t;
    for (;;) {
        for (Index t = 0; t < k; ++t) chosen[t] = pool[pick[t]];
        fn(std::span<const Index>(chosen));
        Index t = k;
        while (t > 0 && pick[t - 1] == pool.size() - k + (t - 1)) --t;
        if (t == 0) return;
        ++pick[t - 1];
        for (Index s = t; s < k; ++s) pick[s] = pick[s - 1] + 1;
    }
}

// A full-rank subset of `members` of size `want`, chosen greedily in index order.
std::vector<Index> independent_subset(const CenteredPolytope& P, const std::vector<Index>& members, Index want,
                                      double tol) {
    std::vector<Index> basis;
    for (Index k : members) {
        basis.push_back(k);
        if (vertex_rank(P, basis, tol) < basis.size()) basis.pop_back();
        if (basis.size() == want) break;
    }
    return basis;
}

}  // namespace

void for_each_branch(const AdjacencyMatrix& D, Index root, Index d,
                     const std::function<void(std::span<const Index>)>& visit) {
    if (root >= D.size() || d == 0) return;
    BranchWalker walker{D, d, visit, {root}, std::vector<char>(D.size(), 0)};
    walker.used[root] = 1;
    walker.extend();
}

std::vector<std::vector<Index>> enumerate_branches(const AdjacencyMatrix& D, Index root, Index d) {
    std::vector<std::vector<Index>> out;
    for_each_branch(D, root, d, [&](std::span<const Index> b) { out.emplace_back(b.begin(), b.end()); });
    return out;
}

std::optional<Hyperplane> hyperplane_from_branch(const CenteredPolytope& P, std::span<const Index> branch,
                                                 const Tolerances& tol) {
    const auto d = static_cast<Eigen::Index>(P.dim());
    if (static_cast<Eigen::Index>(branch.size()) != d) {
        throw Error(ErrorCode::DimensionMismatch,
                    "branch has " + std::to_string(branch.size()) + " vertices, expected " + std::to_string(d));
    }
    Matrix A(d, d);
    for (Eigen::Index r = 0; r < d; ++r) A.row(r) = P.vertex(branch[static_cast<std::size_t>(r)]);
    auto h = solve_small(std::move(A), Vector::Ones(d), tol.tol_eq);
    if (!h) return std::nullopt;
    return Hyperplane{std::move(*h)};
}

Validation validate_hyperplane(const Hyperplane& h, const CenteredPolytope& P, FacetRegistry& registry,
                               std::optional<Index> root, const Tolerances& tol, FacetSource source) {
    if (max_support(h, P) > 1.0 + tol.tol_face) return Validation::RejectViolated;
    if (registry.find(h)) return Validation::RejectDuplicate;
    if (root && h.at(P.vertex(*root).transpose()) < 0.0) return Validation::RejectOrientation;
    registry.add(h, tight_set(h, P, tol.tol_face), source);
    return Validation::Accept;
}

std::vector<std::vector<Index>> facet_ridges(const CenteredPolytope& P, const FacetRegistry& registry, Index id,
                                             const Tolerances& tol) {
    const std::vector<Index>& members = registry.tight(id);
    const Index d = P.dim();
    std::vector<std::vector<Index>> ridges;
    if (members.size() == d) {
        // simplex facet
        for (Index skip = 0; skip < d; ++skip) {
            std::vector<Index> r;
            for (Index t = 0; t < d; ++t) {
                if (t != skip) r.push_back(members[t]);
            }
            ridges.push_back(std::move(r));
        }
        return ridges;
    }

    // Express the facet's vertices in an orthonormal basis of the hyperplane,
    // centred on their mean, and find the facets of that (d-1)-polytope.
    const Vector& normal = registry.plane(id).normal;
    const auto dd = static_cast<Eigen::Index>(d);
    Eigen::HouseholderQR<Matrix> qr(Matrix(normal.normalized()));
    const Matrix Q = qr.householderQ();
    const Matrix basis = Q.rightCols(dd - 1);
    const auto m = static_cast<Eigen::Index>(members.size());
    Matrix local(m, dd);
    for (Eigen::Index r = 0; r < m; ++r) local.row(r) = P.vertex(members[static_cast<std::size_t>(r)]);
    const Vector mean = local.colwise().mean().transpose();
    CenteredPolytope face;
    face.vertices = (local.rowwise() - mean.transpose()) * basis;
    face.centroid = Vector::Zero(dd - 1);

    std::vector<Index> local_ids(members.size());
    for (Index t = 0; t < members.size(); ++t) local_ids[t] = t;
    HyperplaneIndex seen(tol.tol_face);
    for_each_subset(local_ids, d - 1, [&](std::span<const Index> subset) {
        auto g = hyperplane_from_branch(face, subset, tol);
        if (!g || max_support(*g, face) > 1.0 + tol.tol_face || seen.find(g->normal)) return;
        seen.insert(g->normal);
        std::vector<Index> ridge;
        for (Index t : tight_set(*g, face, tol.tol_face)) ridge.push_back(members[t]);
        ridges.push_back(std::move(ridge));
    });
    return ridges;
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

class Search {
public:
    Search(const CenteredPolytope& P, AdjacencyResult& adj, const Tolerances& tol, EnumerateStats& stats)
        : P_(P), D_(adj.adjacency), registry_(adj.registry), tol_(tol), stats_(stats) {}

    // Breadth-first over vertices, depth-first over branches.
    void run() {
        const Index n = P_.count();
        enum class State : char { Untouched, Frontier, Done };
        std::vector<State> state(n, State::Untouched);
        std::deque<Index> frontier{0};
        state[0] = State::Frontier;
        Index done = 0;

        while (done < n) {
            if (frontier.empty()) {
                const auto next = std::find(state.begin(), state.end(), State::Untouched);
                const auto k = static_cast<Index>(next - state.begin());
                state[k] = State::Frontier;
                frontier.push_back(k);
            }
            ++stats_.rounds;
            const Index before = registry_.size();
            std::deque<Index> entered;
            for (Index root : frontier) {
                explore(root, [&](Index facet) {
                    for (Index k : registry_.tight(facet)) {
                        if (state[k] == State::Untouched) {
                            state[k] = State::Frontier;
                            entered.push_back(k);
                        }
                    }
                });
            }
            for (Index root : frontier) {
                state[root] = State::Done;
                ++done;
            }
            frontier = std::move(entered);

            // Stop early once nothing new appears and every untouched vertex
            // already sits on at least d facets.
            if (registry_.size() == before && frontier.empty()) {
                bool covered = true;
                for (Index k = 0; k < n && covered; ++k) {
                    if (state[k] == State::Untouched && registry_.facets_of(k).size() < P_.dim()) covered = false;
                }
                if (covered) break;
            }
        }
    }

    // Restricted brute force: all d-subsets of {v} + N(v) that contain v.
    void repair_vertices() {
        std::vector<Index> weak;
        for (Index k = 0; k < P_.count(); ++k) {
            if (registry_.facets_of(k).size() < P_.dim()) weak.push_back(k);
        }
        for (Index v : weak) {
            const std::vector<Index> pool = D_.neighbors(v);
            for_each_subset(pool, P_.dim() - 1, [&](std::span<const Index> rest) {
                std::vector<Index> subset{v};
                subset.insert(subset.end(), rest.begin(), rest.end());
                if (registry_.containing(subset) > 0) return;
                auto h = hyperplane_from_branch(P_, subset, tol_);
                if (h) record(validate_hyperplane(*h, P_, registry_, v, tol_, FacetSource::Repair), true);
            });
        }
    }

    // Every ridge must be shared by two facets; wrap around ridges that are not.
    // Returns false if some ridge stays uncovered.
    bool close_ridges(bool repair) {
        bool closed = true;
        for (Index id = 0; id < registry_.size(); ++id) {
            const auto ridges = facet_ridges(P_, registry_, id, tol_);
            for (const auto& ridge : ridges) {
                if (registry_.containing(ridge) >= 2) continue;
                if (!repair || !wrap(id, ridge)) closed = false;
            }
        }
        return closed;
    }

private:
    template <typename OnAccept>
    void explore(Index root, OnAccept&& on_accept) {
        for_each_branch(D_, root, P_.dim(), [&](std::span<const Index> branch) {
            ++stats_.branches;
            if (registry_.containing(branch) > 0) {
                ++stats_.pruned_branches;
                return;
            }
            auto h = hyperplane_from_branch(P_, branch, tol_);
            if (!h) {
                ++stats_.singular_branches;
                return;
            }
            if (record(validate_hyperplane(*h, P_, registry_, root, tol_, FacetSource::Branch), false)) {
                on_accept(registry_.size() - 1);
            }
        });
    }

    bool wrap(Index facet, const std::vector<Index>& ridge) {
        const std::vector<Index> basis = independent_subset(P_, ridge, P_.dim() - 1, tol_.tol_face);
        if (basis.size() + 1 != P_.dim()) return false;
        const std::vector<Index>& own = registry_.tight(facet);
        std::vector<Index> rows = basis;
        rows.push_back(0);
        for (Index k = 0; k < P_.count(); ++k) {
            if (std::binary_search(own.begin(), own.end(), k)) continue;
            rows.back() = k;
            auto h = hyperplane_from_branch(P_, rows, tol_);
            if (!h) continue;
            if (record(validate_hyperplane(*h, P_, registry_, basis.front(), tol_, FacetSource::Repair), true)) {
                return true;
            }
        }
        return false;
    }

    bool record(Validation v, bool repair) {
        switch (v) {
            case Validation::Accept: ++(repair ? stats_.facets_from_repair : stats_.facets_from_search); return true;
            case Validation::RejectViolated: ++stats_.rejected_violated; break;
            case Validation::RejectDuplicate: ++stats_.rejected_duplicate; break;
            case Validation::RejectOrientation: ++stats_.rejected_orientation; break;
        }
        return false;
    }

    const CenteredPolytope& P_;
    const AdjacencyMatrix& D_;
    FacetRegistry& registry_;
    const Tolerances& tol_;
    EnumerateStats& stats_;
};

}  // namespace

FacetEnumeration enumerate_facets(const VertexMatrix& V, const Tolerances& tol, EnumerateOptions options) {
    tol.validate();
    const auto start = Clock::now();
    if (V.dim() < 2) {
        throw Error(ErrorCode::InvalidArgument, "facet enumeration needs dimension d >= 2");
    }
    const CenteredPolytope P = rescale_unit(center_vertices(V, tol));
    const Index d = P.dim();
    const Index n = P.count();
    {
        std::vector<Index> all(n);
        for (Index k = 0; k < n; ++k) all[k] = k;
        if (vertex_rank(P, all, tol.tol_eq) < d) {
            throw Error(ErrorCode::NotFullDimensional, "vertices span fewer than " + std::to_string(d) + " dimensions");
        }
    }

    FacetEnumeration out;
    EnumerateStats& stats = out.stats;
    stats.vertices = n;
    stats.dimension = d;

    const auto adjacency_start = Clock::now();
    AdjacencyResult adj = options.parallel ? build_adjacency(P, tol) : build_adjacency_serial(P, tol);
    stats.adjacency_seconds = seconds_since(adjacency_start);
    stats.adjacency = adj.stats;

    Search search(P, adj, tol, stats);
    search.run();
    if (options.repair) search.repair_vertices();
    const bool closed = search.close_ridges(options.repair);

    const FacetRegistry& registry = adj.registry;
    for (Index k = 0; k < n; ++k) {
        if (registry.facets_of(k).size() < d) {
            throw Error(ErrorCode::IncompleteEnumeration, "vertex " + std::to_string(k + 1) + " is tight on only " +
                                                              std::to_string(registry.facets_of(k).size()) +
                                                              " facets");
        }
    }
    if (!closed) {
        throw Error(ErrorCode::IncompleteEnumeration, "some ridge is covered by a single facet");
    }

    const Index m = registry.size();
    const auto rows = static_cast<Eigen::Index>(m);
    out.hrep.H = Matrix(rows, static_cast<Eigen::Index>(d));
    out.hrep.b = Vector(rows);
    for (Index id = 0; id < m; ++id) {
        const Hyperplane& h = registry.plane(id);
        if (registry.tight(id).size() < d || max_support(h, P) > 1.0 + tol.tol_face) {
            throw Error(ErrorCode::IncompleteEnumeration, "facet " + std::to_string(id + 1) + " failed verification");
        }
        auto [row, rhs] = to_original(h, P);
        out.hrep.H.row(static_cast<Eigen::Index>(id)) = row.transpose();
        out.hrep.b[static_cast<Eigen::Index>(id)] = rhs;
        out.planes.push_back(h);
    }
    out.hrep.incidence = registry.incidence();
    stats.facets = m;
    stats.edges = adj.adjacency.edge_count();
    out.adjacency = std::move(adj.adjacency);
    out.edges = std::move(adj.edges);
    out.polytope = P;
    stats.total_seconds = seconds_since(start);
    return out;
}

}  // namespace polyfacet
