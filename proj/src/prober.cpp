#include "antipod/prober.hpp"

#include <algorithm>
#include <set>
#include <thread>

#include "antipod/rng.hpp"

namespace antipod {

std::string objective_name(Objective o) {
    return o == Objective::MaxVertices ? "max-vertices" : "max-lambda";
}

Objective objective_from_name(const std::string& name) {
    if (name == "max-vertices") {
        return Objective::MaxVertices;
    }
    if (name == "max-lambda") {
        return Objective::MaxLambdaRelative;
    }
    throw ParseError("unknown objective '" + name + "'");
}

namespace {

// Same predicate as convex position + edge-antipodality, ordered for cheap
// rejection: the moved point is tested first and the edge loop slab-tests
// each edge as it is found.
bool feasible(const std::vector<Vec>& pts, std::size_t dim,
              std::optional<std::size_t> changed, std::optional<VertexSet>* out) {
    if (pts.size() < dim + 1) {
        return false;
    }
    std::set<Vec> seen(pts.begin(), pts.end());
    if (seen.size() != pts.size()) {
        return false;
    }
    VertexSet vs(pts);
    if (vs.affine_dim() != dim) {
        return false;
    }
    if (changed && !is_vertex(vs, *changed).vertex) {
        return false;
    }
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (changed && i == *changed) {
            continue;
        }
        if (!is_vertex(vs, i).vertex) {
            return false;
        }
    }
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            if (is_edge(vs, i, j).edge && !antipodal_pair(vs, i, j)) {
                return false;
            }
        }
    }
    if (out) {
        *out = std::move(vs);
    }
    return true;
}

Scalar score_of(const VertexSet& vs, Objective obj) {
    if (obj == Objective::MaxVertices) {
        return Scalar(static_cast<long>(vs.size()));
    }
    return lambda(vs, Norm::relative(vs)).ratio_squared;
}

std::vector<Vec> start_points(const SearchConfig& cfg, std::size_t restart, DetRng& rng) {
    if (restart == 0) {
        FamilySpec spec;
        spec.family = Family::Hypercube;
        spec.dim = cfg.dim;
        return generate(spec).vertices.points();
    }
    if (restart == 1 && cfg.dim >= 4) {
        FamilySpec spec;
        spec.family = Family::Talata;
        spec.dim = cfg.dim;
        spec.eps = Scalar(1, 10);
        return generate(spec).vertices.points();
    }
    // corner simplex {0, e_1, ..., e_dim}, randomly perturbed while feasible
    std::vector<Vec> pts;
    pts.push_back(zero_vec(cfg.dim));
    for (std::size_t i = 0; i < cfg.dim; ++i) {
        pts.push_back(unit_vec(cfg.dim, i));
    }
    for (int tries = 0; tries < 8; ++tries) {
        std::vector<Vec> cand = pts;
        const std::size_t k = rng.below(cand.size());
        const std::size_t c = rng.below(cfg.dim);
        cand[k][c] = rng.rational(cfg.height_bound, std::min<long>(cfg.height_bound, 4));
        if (feasible(cand, cfg.dim, k, nullptr)) {
            pts = std::move(cand);
        }
    }
    return pts;
}

struct RestartResult {
    std::optional<VertexSet> best;
    Scalar best_score;
    std::vector<SearchImprovement> history;
    bool bound_exceeded = false;
};

RestartResult run_restart(const SearchConfig& cfg, std::size_t restart,
                          const Scalar& vertex_bound, const Scalar& ratio_bound) {
    DetRng rng(splitmix64(cfg.seed * 0x9e3779b97f4a7c15ULL + restart + 1));
    RestartResult res;

    std::vector<Vec> current = start_points(cfg, restart, rng);
    std::optional<VertexSet> current_vs;
    if (!feasible(current, cfg.dim, std::nullopt, &current_vs)) {
        // fall back to the plain corner simplex, which is always feasible
        current.clear();
        current.push_back(zero_vec(cfg.dim));
        for (std::size_t i = 0; i < cfg.dim; ++i) {
            current.push_back(unit_vec(cfg.dim, i));
        }
        if (!feasible(current, cfg.dim, std::nullopt, &current_vs)) {
            throw Error("internal: seed simplex must be edge-antipodal");
        }
    }
    Scalar current_score = score_of(*current_vs, cfg.objective);
    res.best = current_vs;
    res.best_score = current_score;
    res.history.push_back(SearchImprovement{restart, 0, current_score});

    const unsigned wsum =
        cfg.weights.add_point + cfg.weights.delete_point + cfg.weights.perturb_point;
    const long den_bound = std::min<long>(cfg.height_bound, 4);

    auto check_bounds = [&](const VertexSet& vs, const Scalar& score) {
        if (Scalar(static_cast<long>(vs.size())) > vertex_bound) {
            res.bound_exceeded = true;
        }
        if (cfg.objective == Objective::MaxLambdaRelative && score > ratio_bound) {
            res.bound_exceeded = true;
        }
    };
    check_bounds(*current_vs, current_score);

    for (std::size_t iter = 1; iter <= cfg.iterations; ++iter) {
        std::vector<Vec> cand = current;
        std::optional<std::size_t> changed;
        const unsigned toss = static_cast<unsigned>(rng.below(wsum));
        if (toss < cfg.weights.add_point) {
            Vec p(cfg.dim);
            for (auto& x : p) {
                x = rng.rational(cfg.height_bound, den_bound);
            }
            // a point inside the current hull can never become a vertex
            if (membership(p, *current_vs).inside) {
                continue;
            }
            changed = cand.size();
            cand.push_back(std::move(p));
        } else if (toss < cfg.weights.add_point + cfg.weights.delete_point) {
            cand.erase(cand.begin() + static_cast<long>(rng.below(cand.size())));
        } else {
            const std::size_t k = rng.below(cand.size());
            const std::size_t c = rng.below(cfg.dim);
            cand[k][c] = rng.rational(cfg.height_bound, den_bound);
            changed = k;
        }

        // vertex-count scores are known before the expensive checks
        if (cfg.objective == Objective::MaxVertices &&
            Scalar(static_cast<long>(cand.size())) < current_score) {
            continue;
        }

        std::optional<VertexSet> cand_vs;
        if (!feasible(cand, cfg.dim, changed, &cand_vs)) {
            continue;
        }
        const Scalar cand_score = score_of(*cand_vs, cfg.objective);
        if (cand_score < current_score) {
            continue;
        }
        current = std::move(cand);
        current_vs = std::move(cand_vs);
        const bool improved = cand_score > current_score;
        current_score = cand_score;
        check_bounds(*current_vs, current_score);
        if (improved && current_score > res.best_score) {
            res.best = current_vs;
            res.best_score = current_score;
            res.history.push_back(SearchImprovement{restart, iter, current_score});
        }
    }
    return res;
}

}  // namespace

SearchReport probe(const SearchConfig& config) {
    if (config.dim < 1 || config.iterations < 1 || config.restarts < 1) {
        throw PreconditionError("probe: dim, iterations and restarts must be positive");
    }
    if (config.weights.add_point + config.weights.delete_point +
            config.weights.perturb_point ==
        0) {
        throw PreconditionError("probe: move weights must not all be zero");
    }

    SearchReport rep;
    rep.config = config;
    rep.vertex_bound = pow_scalar(Scalar(static_cast<long>(config.dim), 2) + 1,
                                  static_cast<unsigned>(config.dim));
    const Scalar half(static_cast<long>(config.dim), 2);
    rep.lambda_ratio_bound = half * half;

    std::vector<RestartResult> results(config.restarts);
    const std::size_t workers = std::max<std::size_t>(1, config.threads);
    if (workers == 1) {
        for (std::size_t r = 0; r < config.restarts; ++r) {
            results[r] = run_restart(config, r, rep.vertex_bound, rep.lambda_ratio_bound);
        }
    } else {
        std::vector<std::thread> pool;
        std::atomic<std::size_t> next{0};
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (;;) {
                    const std::size_t r = next.fetch_add(1);
                    if (r >= config.restarts) {
                        return;
                    }
                    results[r] =
                        run_restart(config, r, rep.vertex_bound, rep.lambda_ratio_bound);
                }
            });
        }
        for (auto& t : pool) {
            t.join();
        }
    }

    // deterministic merge: best score, ties to the lowest restart index
    std::size_t best_r = 0;
    for (std::size_t r = 1; r < config.restarts; ++r) {
        if (results[r].best_score > results[best_r].best_score) {
            best_r = r;
        }
    }
    rep.best = results[best_r].best;
    rep.best_score = results[best_r].best_score;
    rep.best_restart = best_r;
    for (const auto& r : results) {
        rep.bound_exceeded = rep.bound_exceeded || r.bound_exceeded;
        rep.history.insert(rep.history.end(), r.history.begin(), r.history.end());
    }

    // the reported instance must replay its feasibility proof, and every
    // reported instance obeys the cardinality-lambda bound
    if (!rep.best || !is_edge_antipodal(*rep.best).holds) {
        throw Error("internal: probe result failed its edge-antipodality replay");
    }
    if (cardinality_bound_check(*rep.best, Norm::relative(*rep.best)).status !=
        Verdict::Holds) {
        rep.bound_exceeded = true;
    }
    return rep;
}

}  // namespace antipod
