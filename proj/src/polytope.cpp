#include "antipod/polytope.hpp"

#include <algorithm>
#include <mutex>
#include <set>

namespace antipod {

namespace detail {

struct VsCache {
    std::mutex mu;
    std::optional<bool> convex_position;
    std::optional<std::vector<std::pair<std::size_t, std::size_t>>> edges;
};

}  // namespace detail

VertexSet::VertexSet(std::vector<Vec> points, std::vector<AffineConstraint> constraints)
    : points_(std::move(points)),
      constraints_(std::move(constraints)),
      cache_(std::make_shared<detail::VsCache>()) {
    if (points_.empty()) {
        throw PreconditionError("VertexSet: empty point set");
    }
    ambient_dim_ = points_[0].size();
    std::set<Vec> seen;
    for (const auto& p : points_) {
        if (p.size() != ambient_dim_) {
            throw PreconditionError("VertexSet: inconsistent point dimensions");
        }
        if (!seen.insert(p).second) {
            throw PreconditionError("VertexSet: duplicate point");
        }
    }
    for (const auto& c : constraints_) {
        if (c.coeffs.size() != ambient_dim_) {
            throw PreconditionError("VertexSet: affine constraint dimension mismatch");
        }
        for (const auto& p : points_) {
            if (dot(c.coeffs, p) != c.rhs) {
                throw PreconditionError("VertexSet: point violates declared affine constraint");
            }
        }
    }
    std::vector<Vec> diffs;
    for (std::size_t i = 1; i < points_.size(); ++i) {
        diffs.push_back(sub(points_[i], points_[0]));
    }
    affine_dim_ = rank(diffs);
}

namespace {

// Pins the functional to the affine hull's direction space when the hull is
// declared via constraint rows, so witnesses stay canonical for
// subspace-embedded inputs. Feasibility is unaffected.
void add_canonical_rows(LinearProgram& lp, const VertexSet& v, std::size_t total_vars) {
    for (const auto& c : v.affine_constraints()) {
        Vec row(total_vars, Scalar(0));
        for (std::size_t r = 0; r < v.ambient_dim(); ++r) {
            row[r] = c.coeffs[r];
        }
        lp.add(std::move(row), Rel::Eq, Scalar(0));
    }
}

std::vector<std::size_t> face_of(const VertexSet& v, const Vec& functional, const Scalar& level) {
    std::vector<std::size_t> face;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (dot(functional, v.point(k)) == level) {
            face.push_back(k);
        }
    }
    return face;
}

}  // namespace

VertexCheck is_vertex(const VertexSet& v, std::size_t i) {
    if (i >= v.size()) {
        throw PreconditionError("is_vertex: label out of range");
    }
    const std::size_t n = v.ambient_dim();
    // Variables: functional f (n) and threshold c; p_i beats every other
    // point by margin >= 1 iff p_i lies outside the hull of the rest.
    LinearProgram lp = LinearProgram::feasibility(n + 1);
    for (std::size_t k = 0; k < v.size(); ++k) {
        Vec row(n + 1, Scalar(0));
        for (std::size_t r = 0; r < n; ++r) {
            row[r] = v.point(k)[r];
        }
        row[n] = -1;
        lp.add(std::move(row), k == i ? Rel::Ge : Rel::Le, k == i ? Scalar(1) : Scalar(0));
    }
    add_canonical_rows(lp, v, n + 1);

    const LpOutcome out = solve_lp(lp);
    VertexCheck res;
    res.vertex = out.status == LpStatus::Optimal;
    if (res.vertex) {
        Vec f(out.primal->begin(), out.primal->begin() + n);
        const Scalar level = dot(f, v.point(i));
        res.witness = FaceWitness{std::move(f), level, {i}};
    }
    return res;
}

EdgeCheck is_edge(const VertexSet& v, std::size_t i, std::size_t j) {
    if (i >= v.size() || j >= v.size() || i == j) {
        throw PreconditionError("is_edge: invalid label pair");
    }
    if (!in_convex_position(v)) {
        throw PreconditionError("is_edge: point set not in convex position");
    }
    const std::size_t n = v.ambient_dim();
    LinearProgram lp = LinearProgram::feasibility(n + 1);
    for (std::size_t k = 0; k < v.size(); ++k) {
        Vec row(n + 1, Scalar(0));
        for (std::size_t r = 0; r < n; ++r) {
            row[r] = v.point(k)[r];
        }
        row[n] = -1;
        if (k == i || k == j) {
            lp.add(std::move(row), Rel::Eq, Scalar(0));
        } else {
            lp.add(std::move(row), Rel::Le, Scalar(-1));
        }
    }
    add_canonical_rows(lp, v, n + 1);

    const LpOutcome out = solve_lp(lp);
    EdgeCheck res;
    res.edge = out.status == LpStatus::Optimal;
    if (res.edge) {
        Vec f(out.primal->begin(), out.primal->begin() + n);
        const Scalar level = dot(f, v.point(i));
        std::vector<std::size_t> face{std::min(i, j), std::max(i, j)};
        res.witness = FaceWitness{std::move(f), level, std::move(face)};
    }
    return res;
}

bool in_convex_position(const VertexSet& v) {
    auto& cache = *v.cache_;
    {
        std::lock_guard<std::mutex> lock(cache.mu);
        if (cache.convex_position) {
            return *cache.convex_position;
        }
    }
    bool ok = true;
    for (std::size_t i = 0; i < v.size() && ok; ++i) {
        ok = is_vertex(v, i).vertex;
    }
    std::lock_guard<std::mutex> lock(cache.mu);
    cache.convex_position = ok;
    return ok;
}

const std::vector<std::pair<std::size_t, std::size_t>>& edges(const VertexSet& v) {
    auto& cache = *v.cache_;
    {
        std::lock_guard<std::mutex> lock(cache.mu);
        if (cache.edges) {
            return *cache.edges;
        }
    }
    std::vector<std::pair<std::size_t, std::size_t>> found;
    for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = i + 1; j < v.size(); ++j) {
            if (is_edge(v, i, j).edge) {
                found.emplace_back(i, j);
            }
        }
    }
    std::lock_guard<std::mutex> lock(cache.mu);
    if (!cache.edges) {
        cache.edges = std::move(found);
    }
    return *cache.edges;
}

MembershipResult membership(const Vec& x, const VertexSet& v) {
    if (x.size() != v.ambient_dim()) {
        throw PreconditionError("membership: dimension mismatch");
    }
    const std::size_t m = v.size();
    LinearProgram lp = LinearProgram::feasibility(m);
    for (std::size_t k = 0; k < m; ++k) {
        lp.set_lower(k, Scalar(0));
    }
    for (std::size_t r = 0; r < v.ambient_dim(); ++r) {
        Vec row(m);
        for (std::size_t k = 0; k < m; ++k) {
            row[k] = v.point(k)[r];
        }
        lp.add(std::move(row), Rel::Eq, x[r]);
    }
    lp.add(Vec(m, Scalar(1)), Rel::Eq, Scalar(1));

    const LpOutcome out = solve_lp(lp);
    MembershipResult res;
    res.inside = out.status == LpStatus::Optimal;
    if (res.inside) {
        CaratheodoryDecomposition dec;
        for (std::size_t k = 0; k < m; ++k) {
            if ((*out.primal)[k] != 0) {
                dec.support.emplace_back(k, (*out.primal)[k]);
            }
        }
        // Basic solution: positive weights fit inside one affine basis.
        if (dec.support.size() > v.affine_dim() + 1) {
            throw Error("internal: membership decomposition exceeds Caratheodory bound");
        }
        res.decomposition = std::move(dec);
    }
    return res;
}

std::optional<SegmentEntry> segment_entry(const Vec& x, const Vec& y, const VertexSet& v) {
    if (x.size() != v.ambient_dim() || y.size() != v.ambient_dim()) {
        throw PreconditionError("segment_entry: dimension mismatch");
    }
    if (x == y) {
        throw PreconditionError("segment_entry: degenerate segment");
    }
    const std::size_t m = v.size();
    const std::size_t n = v.ambient_dim();
    const Vec dir = sub(y, x);

    auto make_lp = [&](Sense sense) {
        Vec obj(m + 1, Scalar(0));
        obj[m] = 1;
        LinearProgram lp = sense == Sense::Minimize ? LinearProgram::minimize(obj)
                                                    : LinearProgram::maximize(obj);
        for (std::size_t k = 0; k < m; ++k) {
            lp.set_lower(k, Scalar(0));
        }
        lp.set_lower(m, Scalar(0));
        lp.set_upper(m, Scalar(1));
        for (std::size_t r = 0; r < n; ++r) {
            Vec row(m + 1);
            for (std::size_t k = 0; k < m; ++k) {
                row[k] = v.point(k)[r];
            }
            row[m] = -dir[r];
            lp.add(std::move(row), Rel::Eq, x[r]);
        }
        Vec ones(m + 1, Scalar(1));
        ones[m] = 0;
        lp.add(std::move(ones), Rel::Eq, Scalar(1));
        return lp;
    };

    const LpOutcome lo = solve_lp(make_lp(Sense::Minimize));
    if (lo.status == LpStatus::Infeasible) {
        return std::nullopt;
    }
    if (lo.status != LpStatus::Optimal) {
        throw Error("internal: segment clip cannot be unbounded");
    }
    const LpOutcome hi = solve_lp(make_lp(Sense::Maximize));
    if (hi.status != LpStatus::Optimal) {
        throw Error("internal: segment clip cannot be unbounded");
    }

    // The coordinate-row duals of the entry LP give a functional supporting
    // the hull at the entry point.
    Vec g(n);
    for (std::size_t r = 0; r < n; ++r) {
        g[r] = (*lo.dual)[r];
    }
    const Scalar level = -(*lo.dual)[n];

    SegmentEntry entry{*lo.objective_value, *hi.objective_value,
                       FaceWitness{std::move(g), level, {}}};
    entry.entry_witness.face = face_of(v, entry.entry_witness.functional, level);
    return entry;
}

VertexSet difference_generators(const VertexSet& v) {
    std::vector<Vec> gens;
    std::set<Vec> seen;
    for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = 0; j < v.size(); ++j) {
            Vec g = sub(v.point(i), v.point(j));
            if (seen.insert(g).second) {
                gens.push_back(std::move(g));
            }
        }
    }
    std::vector<AffineConstraint> constraints;
    for (const auto& c : v.affine_constraints()) {
        constraints.push_back(AffineConstraint{c.coeffs, Scalar(0)});
    }
    return VertexSet(std::move(gens), std::move(constraints));
}

VertexSet reduce_to_vertices(const VertexSet& v) {
    std::vector<Vec> kept;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (is_vertex(v, i).vertex) {
            kept.push_back(v.point(i));
        }
    }
    return VertexSet(std::move(kept), v.affine_constraints());
}

}  // namespace antipod
