#include "antipod/constructions.hpp"

#include <algorithm>
#include <set>

#include "antipod/rng.hpp"

namespace antipod {

namespace {

Generated make_simplex(std::size_t d) {
    if (d < 1) {
        throw PreconditionError("simplex: dim >= 1 required");
    }
    std::vector<Vec> pts;
    for (std::size_t i = 0; i <= d; ++i) {
        pts.push_back(unit_vec(d + 1, i));
    }
    std::vector<AffineConstraint> cons{{Vec(d + 1, Scalar(1)), Scalar(1)}};
    return Generated{VertexSet(std::move(pts), std::move(cons)), Norm::l2(), "simplex"};
}

Generated make_hypercube(std::size_t d) {
    if (d < 1 || d > 20) {
        throw PreconditionError("hypercube: dim in [1, 20] required");
    }
    std::vector<Vec> pts;
    for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
        Vec p(d);
        for (std::size_t i = 0; i < d; ++i) {
            p[i] = (mask >> i) & 1u ? 1 : 0;
        }
        pts.push_back(std::move(p));
    }
    return Generated{VertexSet(std::move(pts)), Norm::linf(), "hypercube"};
}

Generated make_cross(std::size_t d) {
    if (d < 1) {
        throw PreconditionError("crosspolytope: dim >= 1 required");
    }
    std::vector<Vec> pts;
    for (std::size_t i = 0; i < d; ++i) {
        pts.push_back(unit_vec(d, i));
        pts.push_back(scaled(unit_vec(d, i), Scalar(-1)));
    }
    return Generated{VertexSet(std::move(pts)), Norm::l1(), "crosspolytope"};
}

Generated make_l1subspace(std::size_t d) {
    if (d < 2) {
        throw PreconditionError("l1subspace: dim >= 2 required");
    }
    const std::size_t amb = d + 1;
    Vec c(amb, Scalar(0));
    for (std::size_t i = 0; i < d; ++i) {
        c[i] = 1;
    }
    std::vector<Vec> pts;
    for (std::size_t i = 0; i < d; ++i) {
        Vec p = scaled(c, Scalar(-1));
        p[i] += Scalar(static_cast<long>(d));
        pts.push_back(std::move(p));
    }
    Vec apex(amb, Scalar(0));
    apex[d] = 2;
    pts.push_back(apex);
    apex[d] = -2;
    pts.push_back(std::move(apex));

    Vec normal(amb, Scalar(1));
    normal[d] = 0;
    std::vector<AffineConstraint> cons{{std::move(normal), Scalar(0)}};
    return Generated{VertexSet(std::move(pts), std::move(cons)), Norm::l1(), "l1subspace"};
}

Generated make_talata(std::size_t d, const Scalar& eps) {
    if (d < 4) {
        throw PreconditionError("talata: dim >= 4 required");
    }
    const Scalar limit = Scalar(static_cast<long>(d) - 1, 2) - 1;
    if (!(eps > 0 && eps < limit)) {
        throw PreconditionError("talata: eps must satisfy 0 < eps < (dim-1)/2 - 1");
    }
    const Scalar lam = Scalar(static_cast<long>(d) - 1, 2) - eps;
    Vec p(d, Scalar(2, static_cast<long>(d) - 1));
    p[d - 1] = 0;

    std::vector<Vec> pts;
    pts.push_back(zero_vec(d));
    for (std::size_t i = 0; i < d; ++i) {
        pts.push_back(unit_vec(d, i));
    }
    pts.push_back(p);
    pts.push_back(add(unit_vec(d, d - 1), scaled(p, lam)));

    VertexSet vs(std::move(pts));
    if (!in_convex_position(vs)) {
        throw PreconditionError("talata: vertex list not in convex position for this eps");
    }
    Norm rel = Norm::relative(vs);
    return Generated{std::move(vs), std::move(rel), "talata"};
}

Generated make_random(const FamilySpec& spec) {
    if (spec.dim < 1 || spec.point_count < 2 || spec.coordinate_bound < 1) {
        throw PreconditionError("random: need dim >= 1, point_count >= 2, bound >= 1");
    }
    DetRng rng(splitmix64(spec.seed));
    const long den_bound = std::min<long>(spec.coordinate_bound, 4);
    std::set<Vec> seen;
    std::vector<Vec> pts;
    std::size_t attempts = 0;
    while (pts.size() < spec.point_count) {
        if (++attempts > 1000 * spec.point_count) {
            throw Error("random: could not draw enough distinct points");
        }
        Vec p(spec.dim);
        for (auto& x : p) {
            x = rng.rational(spec.coordinate_bound, den_bound);
        }
        if (seen.insert(p).second) {
            pts.push_back(std::move(p));
        }
    }
    VertexSet raw(std::move(pts));
    VertexSet vs = reduce_to_vertices(raw);
    return Generated{std::move(vs), Norm::l1(), "random"};
}

}  // namespace

Generated generate(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::Simplex:
            return make_simplex(spec.dim);
        case Family::Hypercube:
            return make_hypercube(spec.dim);
        case Family::CrossPolytope:
            return make_cross(spec.dim);
        case Family::L1Subspace:
            return make_l1subspace(spec.dim);
        case Family::Talata:
            return make_talata(spec.dim, spec.eps);
        case Family::Random:
            return make_random(spec);
    }
    throw PreconditionError("generate: unknown family");
}

Family family_from_name(const std::string& name) {
    if (name == "simplex") {
        return Family::Simplex;
    }
    if (name == "hypercube") {
        return Family::Hypercube;
    }
    if (name == "crosspolytope") {
        return Family::CrossPolytope;
    }
    if (name == "l1subspace") {
        return Family::L1Subspace;
    }
    if (name == "talata") {
        return Family::Talata;
    }
    if (name == "random") {
        return Family::Random;
    }
    throw ParseError("unknown family '" + name + "'");
}

std::string family_name(Family f) {
    switch (f) {
        case Family::Simplex:
            return "simplex";
        case Family::Hypercube:
            return "hypercube";
        case Family::CrossPolytope:
            return "crosspolytope";
        case Family::L1Subspace:
            return "l1subspace";
        case Family::Talata:
            return "talata";
        case Family::Random:
            return "random";
    }
    return "?";
}

}  // namespace antipod
