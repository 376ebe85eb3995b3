#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "antipod/lp.hpp"
#include "antipod/vec.hpp"

namespace antipod {

// A hyperplane a.x = rhs known to contain every point of a vertex set; used
// to keep subspace-embedded inputs in their original ambient coordinates.
struct AffineConstraint {
    Vec coeffs;
    Scalar rhs;
};

namespace detail {
struct VsCache;
}

// Finite labeled point set; the polytope under study is its convex hull.
// Points are pairwise distinct; affine dimension is computed on construction.
// Immutable; copies share the lazily filled face cache.
class VertexSet {
public:
    explicit VertexSet(std::vector<Vec> points,
                       std::vector<AffineConstraint> constraints = {});

    std::size_t size() const { return points_.size(); }
    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t affine_dim() const { return affine_dim_; }
    const Vec& point(std::size_t i) const { return points_.at(i); }
    const std::vector<Vec>& points() const { return points_; }
    const std::vector<AffineConstraint>& affine_constraints() const { return constraints_; }

private:
    std::vector<Vec> points_;
    std::vector<AffineConstraint> constraints_;
    std::size_t ambient_dim_ = 0;
    std::size_t affine_dim_ = 0;

    std::shared_ptr<detail::VsCache> cache_;
    friend bool in_convex_position(const VertexSet&);
    friend const std::vector<std::pair<std::size_t, std::size_t>>& edges(const VertexSet&);
};

// Exposed face: every face vertex sits exactly at `level`, all other points
// strictly below. `face` may be all labels when the supporting hyperplane
// contains the whole set (possible for lower-dimensional hulls).
struct FaceWitness {
    Vec functional;
    Scalar level;
    std::vector<std::size_t> face;
};

struct CaratheodoryDecomposition {
    std::vector<std::pair<std::size_t, Scalar>> support;  // label -> positive weight
};

struct VertexCheck {
    bool vertex = false;
    std::optional<FaceWitness> witness;
};

struct EdgeCheck {
    bool edge = false;
    std::optional<FaceWitness> witness;
};

struct MembershipResult {
    bool inside = false;
    std::optional<CaratheodoryDecomposition> decomposition;
};

// Segment x + t(y-x), t in [t_min, t_max], clipped to the hull; the witness
// is a supporting hyperplane at the entry point x + t_min (y-x).
struct SegmentEntry {
    Scalar t_min;
    Scalar t_max;
    FaceWitness entry_witness;
};

// True iff p_i is a vertex of conv(V); the witness separates it strictly.
VertexCheck is_vertex(const VertexSet& v, std::size_t i);

// True iff the segment p_i p_j is a 1-face. Requires convex position.
EdgeCheck is_edge(const VertexSet& v, std::size_t i, std::size_t j);

// All 1-faces, cached on the vertex set. Requires convex position.
const std::vector<std::pair<std::size_t, std::size_t>>& edges(const VertexSet& v);

bool in_convex_position(const VertexSet& v);

MembershipResult membership(const Vec& x, const VertexSet& v);

// nullopt when the segment misses the hull entirely.
std::optional<SegmentEntry> segment_entry(const Vec& x, const Vec& y, const VertexSet& v);

// {p_i - p_j : i, j}, deduplicated; spans the difference body of conv(V).
VertexSet difference_generators(const VertexSet& v);

// Drops points that are not vertices of the hull; keeps label order.
VertexSet reduce_to_vertices(const VertexSet& v);

}  // namespace antipod
