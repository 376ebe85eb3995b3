#include "antipod/analysis.hpp"

namespace antipod {

bool AnalysisResult::any_violated() const {
    if (cardinality_bound.status == Verdict::Violated) {
        return true;
    }
    if (lambda_bound && lambda_bound->status == Verdict::Violated) {
        return true;
    }
    if (count_bound_edge_antipodal.status == Verdict::Violated ||
        count_bound_subequilateral.status == Verdict::Violated) {
        return true;
    }
    if (euclidean_simplex.status == Verdict::Violated) {
        return true;
    }
    if (equidistant_cardinality == Verdict::Violated) {
        return true;
    }
    return bridge.status == Verdict::Violated;
}

AnalysisResult analyze(const VertexSet& v, const Norm& n) {
    if (v.size() < 2 || v.affine_dim() < 1) {
        throw PreconditionError("analyze: need at least two distinct points spanning a segment");
    }
    if (!in_convex_position(v)) {
        throw PreconditionError(
            "analyze: input not in convex position (re-run with --reduce to drop non-vertices)");
    }

    AnalysisResult res;
    res.norm_name = n.name();
    res.ambient_dim = v.ambient_dim();
    res.affine_dim = v.affine_dim();
    res.cardinality = v.size();

    res.edge_list = edges(v);
    res.equidistant = is_equidistant(v, n);
    res.subequilateral = is_subequilateral(v, n);
    res.edge_antipodal = is_edge_antipodal(v);
    res.antipodal = is_antipodal(v);
    res.lambda_value = lambda(v, n);

    res.cardinality_bound = cardinality_bound_check(v, n);
    if (res.subequilateral.holds) {
        res.lambda_bound = lambda_bound_check(v, n);
        res.lambda_order = lambda_order_check(v, n);
    }
    res.count_bound_edge_antipodal =
        vertex_count_bound_check(v, BoundMode::EdgeAntipodal, std::nullopt);
    res.count_bound_subequilateral =
        vertex_count_bound_check(v, BoundMode::Subequilateral, n);
    res.euclidean_simplex = euclidean_subequilateral_check(v);
    res.equidistant_cardinality = equidistant_bound_check(v, n);
    res.bridge = bridge_check(v, n);
    return res;
}

}  // namespace antipod
