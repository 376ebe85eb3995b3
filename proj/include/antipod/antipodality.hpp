#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "antipod/norms.hpp"

namespace antipod {

enum class Verdict { Holds, Violated, NotApplicable };

std::string verdict_str(Verdict v);

struct DiameterResult {
    NormValue value;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;  // all achieving pairs
};

// diam(V) / min pairwise distance, squared ratio kept exact. ratio_squared
// is 1 exactly when the set is equidistant.
struct LambdaValue {
    NormValue diameter;
    NormValue min_distance;
    Scalar ratio_squared;
    std::vector<std::pair<std::size_t, std::size_t>> max_pairs;
    std::vector<std::pair<std::size_t, std::size_t>> min_pairs;
};

// Parallel supporting slab through vertices `upper_vertex`/`lower_vertex`:
// every point's functional value lies in [lower_level, upper_level], the two
// named vertices sit on the respective hyperplanes, and the levels differ
// (normalized gap 1).
struct SlabWitness {
    Vec functional;
    Scalar upper_level;
    Scalar lower_level;
    std::size_t upper_vertex;
    std::size_t lower_vertex;
};

struct AntipodalCheck {
    bool holds = false;
    std::optional<std::pair<std::size_t, std::size_t>> failing_pair;
};

struct SubequilateralCheck {
    bool holds = false;
    NormValue diameter;
    std::optional<std::pair<std::size_t, std::size_t>> violating_edge;
    std::optional<NormValue> violating_length;
};

// One side of the nonadjacent-pair lower-bound proof: the segment's entry
// point into the reduced hull, a supporting face there, the convex
// decomposition over that face, and the dominant weight driving the bound.
struct CertificateSide {
    std::size_t origin_label;
    Scalar t_entry;           // position of the entry point along origin -> other
    Vec entry_point;
    FaceWitness face;         // labels refer to the full vertex set
    CaratheodoryDecomposition decomposition;  // of entry_point over face vertices
    std::size_t dominant_label;
    Scalar dominant_coeff;    // >= 1/dim
    NormValue origin_to_entry;     // ||origin - entry||
    NormValue entry_to_dominant;   // ||entry - dominant vertex||, <= (1 - coeff) diam
    NormValue side_bound;          // coeff * diam, <= origin_to_entry
};

struct NonadjacentPairCertificate {
    std::size_t x_label;
    std::size_t y_label;
    std::size_t dim;
    NormValue diam;
    Scalar t_min;
    Scalar t_max;
    CertificateSide side_x;
    CertificateSide side_y;
    NormValue lower_bound;  // (2/dim) * diam
    NormValue actual;       // ||x - y||
    bool tight = false;
};

struct CardinalityBoundReport {
    Verdict status = Verdict::NotApplicable;
    LambdaValue lambda;
    std::size_t cardinality = 0;
    std::size_t dim = 0;
    QuadraticValue bound;  // (lambda + 1)^dim
};

struct LambdaBoundReport {
    Verdict status = Verdict::NotApplicable;
    LambdaValue lambda;
    std::size_t dim = 0;
    std::optional<NonadjacentPairCertificate> certificate;  // for a minimizing non-edge pair
};

enum class BoundMode { EdgeAntipodal, Subequilateral };

struct VertexCountBoundReport {
    Verdict status = Verdict::NotApplicable;
    BoundMode mode = BoundMode::EdgeAntipodal;
    bool hypothesis = false;
    std::size_t cardinality = 0;
    std::size_t dim = 0;
    Scalar bound;  // (dim/2 + 1)^dim
};

struct EuclideanSimplexReport {
    Verdict status = Verdict::NotApplicable;
    bool subequilateral_l2 = false;
    bool simplex_cardinality = false;
    bool equidistant = false;
};

struct BridgeReport {
    Verdict status = Verdict::NotApplicable;
    bool edge_antipodal = false;
    std::optional<bool> subequilateral_relative;
    std::optional<bool> relative_diameter_one;
    std::optional<bool> subequilateral_supplied;
    std::optional<bool> edge_antipodal_from_subequilateral;
};

// Exact evaluation of lambda under the supplied norm and under the polytope's
// own relative norm, with the direction of the comparison recorded.
struct LambdaOrderReport {
    LambdaValue under_norm;
    LambdaValue under_relative;
    bool norm_le_relative = false;
    bool relative_le_norm = false;
};

DiameterResult diameter(const VertexSet& v, const Norm& n);
LambdaValue lambda(const VertexSet& v, const Norm& n);
bool is_equidistant(const VertexSet& v, const Norm& n);
SubequilateralCheck is_subequilateral(const VertexSet& v, const Norm& n);

// Feasible iff the pair spans a supporting slab; the witness is normalized
// to functional gap exactly 1 across the slab.
std::optional<SlabWitness> antipodal_pair(const VertexSet& v, std::size_t i, std::size_t j);

AntipodalCheck is_antipodal(const VertexSet& v);
AntipodalCheck is_edge_antipodal(const VertexSet& v);

// Both bridge directions: edge-antipodal implies subequilateral with
// diameter exactly 1 under the relative norm; subequilateral under the
// supplied norm implies edge-antipodal.
BridgeReport bridge_check(const VertexSet& v, const std::optional<Norm>& supplied);

// |V| <= (lambda + 1)^dim, exact (quadratic closure for irrational lambda).
CardinalityBoundReport cardinality_bound_check(const VertexSet& v, const Norm& n);

// Replays the nonadjacent-pair bound argument for pair (i, j) and verifies
// every link exactly. Throws PreconditionError when (i, j) is an edge (the
// bound is definitional there) and DiagnosticError when a step that the
// argument guarantees cannot fail does fail.
NonadjacentPairCertificate nonadjacent_pair_certificate(const VertexSet& v, const Norm& n,
                                     std::size_t i, std::size_t j);

// lambda <= dim/2 for subequilateral vertex sets; attaches a certificate for
// a minimizing pair when that pair is not an edge.
LambdaBoundReport lambda_bound_check(const VertexSet& v, const Norm& n);

VertexCountBoundReport vertex_count_bound_check(const VertexSet& v, BoundMode mode,
                                       const std::optional<Norm>& n);

// Euclidean case: an l2-subequilateral polytope must be an equilateral
// simplex (dim + 1 equidistant vertices).
EuclideanSimplexReport euclidean_subequilateral_check(const VertexSet& v);

// Equidistant sets have at most 2^dim points.
Verdict equidistant_bound_check(const VertexSet& v, const Norm& n);

LambdaOrderReport lambda_order_check(const VertexSet& v, const Norm& n);

}  // namespace antipod
