#pragma once

#include <cstdint>
#include <optional>

#include "antipod/antipodality.hpp"
#include "antipod/constructions.hpp"

namespace antipod {

enum class Objective { MaxVertices, MaxLambdaRelative };

struct MoveWeights {
    unsigned add_point = 3;
    unsigned delete_point = 1;
    unsigned perturb_point = 4;
};

struct SearchConfig {
    std::size_t dim = 2;
    Objective objective = Objective::MaxVertices;
    std::size_t iterations = 1000;  // per restart
    std::uint64_t seed = 0;
    MoveWeights weights;
    long height_bound = 3;   // numerator/denominator bound for drawn coordinates
    std::size_t restarts = 3;
    std::size_t threads = 1;
};

struct SearchImprovement {
    std::size_t restart;
    std::size_t iteration;
    Scalar score;
};

struct SearchReport {
    SearchConfig config;
    std::optional<VertexSet> best;
    Scalar best_score;  // vertex count, or exact squared lambda ratio
    std::size_t best_restart = 0;
    std::vector<SearchImprovement> history;
    Scalar vertex_bound;          // (dim/2 + 1)^dim
    Scalar lambda_ratio_bound;    // (dim/2)^2
    bool bound_exceeded = false;  // fatal: an accepted instance broke a proven bound
};

std::string objective_name(Objective o);
Objective objective_from_name(const std::string& name);

// Feasibility-first hill climbing with seeded restarts (hypercube, the
// edge-antipodal-not-antipodal family when dim >= 4, perturbed simplices).
// A candidate enters the walk only after an exact edge-antipodality check;
// no floating point participates in accept/reject. Deterministic per config;
// restarts are independent and may run on config.threads threads.
SearchReport probe(const SearchConfig& config);

}  // namespace antipod
