#pragma once

#include "antipod/antipodality.hpp"

namespace antipod {

// The full check battery run by `analyze`: predicates under the chosen norm
// plus every statement-level verifier. Requires >= 2 points in convex
// position spanning at least a segment.
struct AnalysisResult {
    std::string norm_name;
    std::size_t ambient_dim = 0;
    std::size_t affine_dim = 0;
    std::size_t cardinality = 0;

    std::vector<std::pair<std::size_t, std::size_t>> edge_list;
    bool equidistant = false;
    SubequilateralCheck subequilateral;
    AntipodalCheck edge_antipodal;
    AntipodalCheck antipodal;
    LambdaValue lambda_value;

    CardinalityBoundReport cardinality_bound;
    std::optional<LambdaBoundReport> lambda_bound;  // subequilateral inputs only
    VertexCountBoundReport count_bound_edge_antipodal;
    VertexCountBoundReport count_bound_subequilateral;
    EuclideanSimplexReport euclidean_simplex;
    Verdict equidistant_cardinality = Verdict::NotApplicable;
    BridgeReport bridge;
    std::optional<LambdaOrderReport> lambda_order;  // subequilateral inputs only

    bool any_violated() const;
};

AnalysisResult analyze(const VertexSet& v, const Norm& n);

}  // namespace antipod
