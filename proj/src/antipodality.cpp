#include "antipod/antipodality.hpp"

#include <algorithm>

namespace antipod {

std::string verdict_str(Verdict v) {
    switch (v) {
        case Verdict::Holds:
            return "holds";
        case Verdict::Violated:
            return "violated";
        case Verdict::NotApplicable:
            return "not_applicable";
    }
    return "?";
}

DiameterResult diameter(const VertexSet& v, const Norm& n) {
    if (v.size() < 2) {
        throw PreconditionError("diameter: need at least two points");
    }
    std::optional<NormValue> best;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = i + 1; j < v.size(); ++j) {
            NormValue d = distance(n, v.point(i), v.point(j));
            if (!best || cmp(d, *best) > 0) {
                best = d;
                pairs.assign(1, {i, j});
            } else if (cmp(d, *best) == 0) {
                pairs.emplace_back(i, j);
            }
        }
    }
    return DiameterResult{*best, std::move(pairs)};
}

LambdaValue lambda(const VertexSet& v, const Norm& n) {
    if (v.size() < 2) {
        throw PreconditionError("lambda: need at least two points");
    }
    std::optional<NormValue> lo, hi;
    LambdaValue out{NormValue::rational(Scalar(0)), NormValue::rational(Scalar(0)), Scalar(0), {}, {}};
    for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = i + 1; j < v.size(); ++j) {
            NormValue d = distance(n, v.point(i), v.point(j));
            if (!hi || cmp(d, *hi) > 0) {
                hi = d;
                out.max_pairs.assign(1, {i, j});
            } else if (cmp(d, *hi) == 0) {
                out.max_pairs.emplace_back(i, j);
            }
            if (!lo || cmp(d, *lo) < 0) {
                lo = d;
                out.min_pairs.assign(1, {i, j});
            } else if (cmp(d, *lo) == 0) {
                out.min_pairs.emplace_back(i, j);
            }
        }
    }
    out.diameter = *hi;
    out.min_distance = *lo;
    out.ratio_squared = ratio_squared(*hi, *lo);
    return out;
}

bool is_equidistant(const VertexSet& v, const Norm& n) {
    return lambda(v, n).ratio_squared == 1;
}

SubequilateralCheck is_subequilateral(const VertexSet& v, const Norm& n) {
    if (v.affine_dim() < 1) {
        throw PreconditionError("is_subequilateral: zero-dimensional hull");
    }
    if (!in_convex_position(v)) {
        throw PreconditionError("is_subequilateral: point set not in convex position");
    }
    SubequilateralCheck res;
    res.diameter = diameter(v, n).value;
    res.holds = true;
    for (const auto& [i, j] : edges(v)) {
        const NormValue len = distance(n, v.point(i), v.point(j));
        if (cmp(len, res.diameter) != 0) {
            res.holds = false;
            res.violating_edge = {i, j};
            res.violating_length = len;
            break;
        }
    }
    return res;
}

std::optional<SlabWitness> antipodal_pair(const VertexSet& v, std::size_t i, std::size_t j) {
    if (i >= v.size() || j >= v.size() || i == j) {
        throw PreconditionError("antipodal_pair: invalid label pair");
    }
    if (v.affine_dim() < 1) {
        throw PreconditionError("antipodal_pair: zero-dimensional hull");
    }
    const std::size_t n = v.ambient_dim();
    LinearProgram lp = LinearProgram::feasibility(n);
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (k != i) {
            lp.add(sub(v.point(i), v.point(k)), Rel::Ge, Scalar(0));
        }
        if (k != j) {
            lp.add(sub(v.point(k), v.point(j)), Rel::Ge, Scalar(0));
        }
    }
    // Gap normalization: lossless because a slab whose hyperplanes coincide
    // would have to contain the whole hull, and the functional is pinned to
    // the hull's direction space.
    lp.add(sub(v.point(i), v.point(j)), Rel::Eq, Scalar(1));
    for (const auto& c : v.affine_constraints()) {
        lp.add(c.coeffs, Rel::Eq, Scalar(0));
    }

    const LpOutcome out = solve_lp(lp);
    if (out.status != LpStatus::Optimal) {
        return std::nullopt;
    }
    SlabWitness w;
    w.functional = *out.primal;
    w.upper_level = dot(w.functional, v.point(i));
    w.lower_level = dot(w.functional, v.point(j));
    w.upper_vertex = i;
    w.lower_vertex = j;
    return w;
}

AntipodalCheck is_antipodal(const VertexSet& v) {
    AntipodalCheck res;
    res.holds = true;
    for (std::size_t i = 0; i < v.size() && res.holds; ++i) {
        for (std::size_t j = i + 1; j < v.size(); ++j) {
            if (!antipodal_pair(v, i, j)) {
                res.holds = false;
                res.failing_pair = {i, j};
                break;
            }
        }
    }
    return res;
}

AntipodalCheck is_edge_antipodal(const VertexSet& v) {
    AntipodalCheck res;
    res.holds = true;
    for (const auto& [i, j] : edges(v)) {
        if (!antipodal_pair(v, i, j)) {
            res.holds = false;
            res.failing_pair = {i, j};
            break;
        }
    }
    return res;
}

BridgeReport bridge_check(const VertexSet& v, const std::optional<Norm>& supplied) {
    BridgeReport rep;
    rep.edge_antipodal = is_edge_antipodal(v).holds;
    bool applicable = false;
    bool ok = true;

    if (rep.edge_antipodal) {
        applicable = true;
        const Norm rel = Norm::relative(v);
        rep.subequilateral_relative = is_subequilateral(v, rel).holds;
        rep.relative_diameter_one = cmp_scalar(diameter(v, rel).value, Scalar(1)) == 0;
        ok = ok && *rep.subequilateral_relative && *rep.relative_diameter_one;
    }
    if (supplied) {
        const bool sub = is_subequilateral(v, *supplied).holds;
        rep.subequilateral_supplied = sub;
        if (sub) {
            applicable = true;
            rep.edge_antipodal_from_subequilateral = rep.edge_antipodal;
            ok = ok && rep.edge_antipodal;
        }
    }
    rep.status = applicable ? (ok ? Verdict::Holds : Verdict::Violated)
                            : Verdict::NotApplicable;
    return rep;
}

CardinalityBoundReport cardinality_bound_check(const VertexSet& v, const Norm& n) {
    CardinalityBoundReport rep;
    rep.lambda = lambda(v, n);
    rep.cardinality = v.size();
    rep.dim = v.affine_dim();
    if (rep.dim == 0) {
        throw PreconditionError("cardinality_bound_check: zero-dimensional hull");
    }
    NormValue lam = NormValue::sqrt_of(rep.lambda.ratio_squared);
    rep.bound = quadratic_pow(quadratic_add_scalar(quadratic_of(lam), Scalar(1)),
                              static_cast<unsigned>(rep.dim));
    const int c = quadratic_cmp_scalar(rep.bound, Scalar(static_cast<long>(rep.cardinality)));
    rep.status = c >= 0 ? Verdict::Holds : Verdict::Violated;
    return rep;
}

namespace {

CertificateSide certify_side(const VertexSet& v, const Norm& n, const NormValue& diam,
                        std::size_t origin, std::size_t other,
                        const VertexSet& reduced, const std::vector<std::size_t>& to_full,
                        Scalar* t_lo, Scalar* t_hi) {
    const auto entry = segment_entry(v.point(origin), v.point(other), reduced);
    if (!entry) {
        throw DiagnosticError(
            "nonadjacent_pair_certificate: segment between nonadjacent vertices misses the reduced hull");
    }
    if (t_lo) {
        *t_lo = entry->t_min;
    }
    if (t_hi) {
        *t_hi = entry->t_max;
    }

    CertificateSide side;
    side.origin_label = origin;
    side.t_entry = entry->t_min;
    side.entry_point = add(v.point(origin),
                           scaled(sub(v.point(other), v.point(origin)), entry->t_min));

    // Decompose the entry point over the supporting face's own vertices.
    const auto& face_reduced = entry->entry_witness.face;
    if (face_reduced.empty()) {
        throw DiagnosticError("nonadjacent_pair_certificate: empty supporting face");
    }
    std::vector<Vec> face_pts;
    std::vector<std::size_t> face_full;
    for (std::size_t k : face_reduced) {
        face_pts.push_back(reduced.point(k));
        face_full.push_back(to_full[k]);
    }
    side.face = FaceWitness{entry->entry_witness.functional, entry->entry_witness.level,
                            face_full};

    const auto dec = membership(side.entry_point, VertexSet(face_pts));
    if (!dec.inside || !dec.decomposition) {
        throw DiagnosticError("nonadjacent_pair_certificate: entry point not inside its supporting face");
    }
    side.decomposition.support.clear();
    for (const auto& [local, coeff] : dec.decomposition->support) {
        side.decomposition.support.emplace_back(face_full[local], coeff);
    }

    const std::size_t d = v.affine_dim();
    if (side.decomposition.support.size() > d) {
        throw DiagnosticError("nonadjacent_pair_certificate: decomposition wider than the dimension");
    }

    // Dominant weight; ties resolved by lowest label for determinism.
    std::size_t best = 0;
    for (std::size_t k = 1; k < side.decomposition.support.size(); ++k) {
        if (side.decomposition.support[k].second > side.decomposition.support[best].second) {
            best = k;
        }
    }
    side.dominant_label = side.decomposition.support[best].first;
    side.dominant_coeff = side.decomposition.support[best].second;
    if (side.dominant_coeff < Scalar(1, static_cast<long>(d))) {
        throw DiagnosticError("nonadjacent_pair_certificate: dominant weight below 1/dim");
    }

    // Every face vertex must be an edge-neighbor of the origin, hence at
    // distance exactly diam for a subequilateral set.
    for (const auto& [label, coeff] : side.decomposition.support) {
        if (!is_edge(v, origin, label).edge) {
            throw DiagnosticError("nonadjacent_pair_certificate: face vertex not adjacent to the endpoint");
        }
        if (cmp(distance(n, v.point(origin), v.point(label)), diam) != 0) {
            throw DiagnosticError("nonadjacent_pair_certificate: adjacent vertex not at diameter distance");
        }
    }

    side.origin_to_entry = distance(n, v.point(origin), side.entry_point);
    side.entry_to_dominant = distance(n, side.entry_point, v.point(side.dominant_label));
    side.side_bound = diam.scaled(side.dominant_coeff);

    // ||entry - dominant|| <= (1 - coeff) * diam
    if (cmp(side.entry_to_dominant, diam.scaled(1 - side.dominant_coeff)) > 0) {
        throw DiagnosticError("nonadjacent_pair_certificate: decomposition triangle bound failed");
    }
    // ||origin - entry|| >= coeff * diam
    if (cmp(side.origin_to_entry, side.side_bound) < 0) {
        throw DiagnosticError("nonadjacent_pair_certificate: endpoint-to-entry bound failed");
    }
    return side;
}

}  // namespace

NonadjacentPairCertificate nonadjacent_pair_certificate(const VertexSet& v, const Norm& n,
                                     std::size_t i, std::size_t j) {
    if (i >= v.size() || j >= v.size() || i == j) {
        throw PreconditionError("nonadjacent_pair_certificate: invalid label pair");
    }
    const auto sub_check = is_subequilateral(v, n);
    if (!sub_check.holds) {
        throw PreconditionError("nonadjacent_pair_certificate: vertex set is not subequilateral");
    }
    if (is_edge(v, i, j).edge) {
        throw PreconditionError("nonadjacent_pair_certificate: bound is definitional for edges");
    }

    NonadjacentPairCertificate cert;
    cert.x_label = i;
    cert.y_label = j;
    cert.dim = v.affine_dim();
    cert.diam = sub_check.diameter;

    std::vector<Vec> rest;
    std::vector<std::size_t> to_full;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (k != i && k != j) {
            rest.push_back(v.point(k));
            to_full.push_back(k);
        }
    }
    if (rest.size() < 1) {
        throw PreconditionError("nonadjacent_pair_certificate: not enough remaining vertices");
    }
    const VertexSet reduced(rest, v.affine_constraints());

    Scalar t_lo_x, t_hi_x;
    cert.side_x = certify_side(v, n, cert.diam, i, j, reduced, to_full, &t_lo_x, &t_hi_x);
    cert.t_min = t_lo_x;
    cert.t_max = t_hi_x;

    Scalar t_lo_y, t_hi_y;
    cert.side_y = certify_side(v, n, cert.diam, j, i, reduced, to_full, &t_lo_y, &t_hi_y);
    if (t_lo_y != 1 - cert.t_max) {
        throw DiagnosticError("nonadjacent_pair_certificate: inconsistent segment clip");
    }

    const std::size_t d = cert.dim;
    cert.lower_bound = cert.diam.scaled(Scalar(2, static_cast<long>(d)));
    cert.actual = distance(n, v.point(i), v.point(j));

    // ||x - y|| >= (coeff_x + coeff_y) * diam >= (2/d) * diam
    const NormValue sides =
        cert.diam.scaled(cert.side_x.dominant_coeff + cert.side_y.dominant_coeff);
    if (cmp(cert.actual, sides) < 0 || cmp(cert.actual, cert.lower_bound) < 0) {
        throw DiagnosticError("nonadjacent_pair_certificate: final distance bound failed");
    }
    cert.tight = cmp(cert.actual, cert.lower_bound) == 0;
    return cert;
}

LambdaBoundReport lambda_bound_check(const VertexSet& v, const Norm& n) {
    const auto sub_check = is_subequilateral(v, n);
    if (!sub_check.holds) {
        throw PreconditionError("lambda_bound_check: vertex set is not subequilateral");
    }
    LambdaBoundReport rep;
    rep.lambda = lambda(v, n);
    rep.dim = v.affine_dim();
    if (rep.dim < 2) {
        rep.status = Verdict::NotApplicable;  // the bound is a dim >= 2 statement
        return rep;
    }
    const Scalar half_dim(static_cast<long>(rep.dim), 2);
    rep.status = rep.lambda.ratio_squared <= half_dim * half_dim ? Verdict::Holds
                                                                 : Verdict::Violated;
    const auto min_pair = rep.lambda.min_pairs.front();
    if (!is_edge(v, min_pair.first, min_pair.second).edge) {
        rep.certificate = nonadjacent_pair_certificate(v, n, min_pair.first, min_pair.second);
    }
    return rep;
}

VertexCountBoundReport vertex_count_bound_check(const VertexSet& v, BoundMode mode,
                                       const std::optional<Norm>& n) {
    VertexCountBoundReport rep;
    rep.mode = mode;
    rep.cardinality = v.size();
    rep.dim = v.affine_dim();
    if (rep.dim == 0) {
        throw PreconditionError("vertex_count_bound_check: zero-dimensional hull");
    }
    if (mode == BoundMode::EdgeAntipodal) {
        rep.hypothesis = is_edge_antipodal(v).holds;
    } else {
        if (!n) {
            throw PreconditionError("vertex_count_bound_check: subequilateral mode needs a norm");
        }
        rep.hypothesis = is_subequilateral(v, *n).holds;
    }
    rep.bound = pow_scalar(Scalar(static_cast<long>(rep.dim), 2) + 1,
                           static_cast<unsigned>(rep.dim));
    if (!rep.hypothesis || rep.dim < 2) {
        rep.status = Verdict::NotApplicable;  // the bound is a dim >= 2 statement
        return rep;
    }
    rep.status = Scalar(static_cast<long>(rep.cardinality)) <= rep.bound
                     ? Verdict::Holds
                     : Verdict::Violated;
    return rep;
}

EuclideanSimplexReport euclidean_subequilateral_check(const VertexSet& v) {
    EuclideanSimplexReport rep;
    const auto sub = is_subequilateral(v, Norm::l2());
    rep.subequilateral_l2 = sub.holds;
    if (!sub.holds) {
        rep.status = Verdict::NotApplicable;
        return rep;
    }
    rep.simplex_cardinality = v.size() == v.affine_dim() + 1;
    rep.equidistant = is_equidistant(v, Norm::l2());
    rep.status = rep.simplex_cardinality && rep.equidistant ? Verdict::Holds
                                                            : Verdict::Violated;
    return rep;
}

Verdict equidistant_bound_check(const VertexSet& v, const Norm& n) {
    if (!is_equidistant(v, n)) {
        return Verdict::NotApplicable;
    }
    const Int bound = Int(1) << static_cast<unsigned>(v.affine_dim());
    return Int(v.size()) <= bound ? Verdict::Holds : Verdict::Violated;
}

LambdaOrderReport lambda_order_check(const VertexSet& v, const Norm& n) {
    if (!is_subequilateral(v, n).holds) {
        throw PreconditionError("lambda_order_check: vertex set is not subequilateral");
    }
    LambdaOrderReport rep;
    rep.under_norm = lambda(v, n);
    rep.under_relative = lambda(v, Norm::relative(v));
    rep.norm_le_relative = rep.under_norm.ratio_squared <= rep.under_relative.ratio_squared;
    rep.relative_le_norm = rep.under_relative.ratio_squared <= rep.under_norm.ratio_squared;
    return rep;
}

}  // namespace antipod
