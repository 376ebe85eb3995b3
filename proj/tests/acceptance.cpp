#include "acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <ostream>
#include <sstream>

#include <antipod/analysis.hpp>
#include <antipod/constructions.hpp>
#include <antipod/prober.hpp>

#include "oracles.hpp"
#include "test_util.hpp"

namespace acceptance {

using namespace antipod;

namespace {

struct Check {
    bool ok = true;
    std::ostringstream detail;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            detail << "FAILED[" << what << "] ";
        }
    }
};

Generated fam(Family f, std::size_t dim, Scalar eps = Scalar(0)) {
    FamilySpec spec;
    spec.family = f;
    spec.dim = dim;
    spec.eps = eps;
    return generate(spec);
}

// The family corpus referenced by the bridge and lambda-bound checks:
// every generator family at every admissible dimension up to 5, plus a few
// seeded random instances.
std::vector<Generated> family_corpus() {
    std::vector<Generated> corpus;
    for (std::size_t d = 1; d <= 5; ++d) {
        corpus.push_back(fam(Family::Simplex, d));
        corpus.push_back(fam(Family::Hypercube, d));
        corpus.push_back(fam(Family::CrossPolytope, d));
    }
    for (std::size_t d = 2; d <= 5; ++d) {
        corpus.push_back(fam(Family::L1Subspace, d));
    }
    for (std::size_t d = 4; d <= 5; ++d) {
        corpus.push_back(fam(Family::Talata, d, Scalar(1, 10)));
    }
    for (std::uint64_t seed : {11, 12, 13}) {
        FamilySpec spec;
        spec.family = Family::Random;
        spec.dim = 2 + seed % 2;
        spec.point_count = 8;
        spec.seed = seed;
        spec.coordinate_bound = 3;
        corpus.push_back(generate(spec));
    }
    return corpus;
}

std::vector<VertexSet> random_corpus(std::size_t count) {
    std::vector<VertexSet> out;
    std::size_t k = 0;
    while (out.size() < count) {
        FamilySpec spec;
        spec.family = Family::Random;
        spec.dim = 2 + k % 3;            // dims 2..4
        spec.point_count = 4 + k % 9;    // 4..12 points
        spec.seed = 1000 + k;
        spec.coordinate_bound = 4;
        ++k;
        Generated g = generate(spec);
        if (g.vertices.size() >= 2 && g.vertices.affine_dim() >= 1) {
            out.push_back(std::move(g.vertices));
        }
    }
    return out;
}

void criterion_l1subspace_metrics(Check& c, const Options&) {
    for (std::size_t d = 2; d <= 8; ++d) {
        const auto t0 = std::chrono::steady_clock::now();
        const Generated g = fam(Family::L1Subspace, d);
        const VertexSet& vs = g.vertices;
        const Scalar two_d(2 * static_cast<long>(d));
        for (std::size_t i = 0; i < vs.size(); ++i) {
            for (std::size_t j = i + 1; j < vs.size(); ++j) {
                const Scalar dist =
                    distance(Norm::l1(), vs.point(i), vs.point(j)).rational_value();
                const bool apex_pair = i == d && j == d + 1;
                c.require(dist == (apex_pair ? Scalar(4) : two_d),
                          "pairwise distance d=" + std::to_string(d));
            }
        }
        c.require(is_subequilateral(vs, Norm::l1()).holds,
                  "subequilateral d=" + std::to_string(d));
        const Scalar half(static_cast<long>(d), 2);
        c.require(lambda(vs, Norm::l1()).ratio_squared == half * half,
                  "lambda=d/2 d=" + std::to_string(d));
        const double secs = std::chrono::duration<double>(
                                std::chrono::steady_clock::now() - t0)
                                .count();
        c.require(secs < 5.0, "runtime d=" + std::to_string(d));
    }
    c.detail << "d=2..8 distances, subequilateral, lambda=d/2";
}

void criterion_edge_antipodal_example(Check& c, const Options&) {
    const auto t0 = std::chrono::steady_clock::now();
    const Generated g = fam(Family::Talata, 4, Scalar(1, 10));
    const VertexSet& vs = g.vertices;  // labels: 0=o, 1..4=e_i, 5=p, 6=e_4+t*p
    c.require(is_edge_antipodal(vs).holds, "edge-antipodal");
    c.require(!is_antipodal(vs).holds, "not antipodal");
    const Norm& rel = g.recommended;
    c.require(cmp_scalar(distance(rel, vs.point(4), vs.point(0)), Scalar(1)) == 0,
              "relative distance e_4 to origin is 1");
    c.require(cmp_scalar(distance(rel, vs.point(5), vs.point(0)), Scalar(5, 7)) == 0,
              "relative distance p to origin is 5/7");
    c.require(lambda(vs, rel).ratio_squared >= Scalar(49, 25), "lambda at least 7/5");
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c.require(secs < 10.0, "runtime");
    c.detail << "edge-antipodal, not antipodal, exact relative distances";
}

void criterion_bridge_corpus(Check& c, const Options&) {
    std::size_t edge_antipodal_count = 0;
    const auto corpus = family_corpus();
    for (const auto& g : corpus) {
        if (!is_edge_antipodal(g.vertices).holds) {
            continue;
        }
        ++edge_antipodal_count;
        const Norm rel = Norm::relative(g.vertices);
        c.require(is_subequilateral(g.vertices, rel).holds,
                  g.family_name + ": subequilateral in relative norm");
        c.require(cmp_scalar(diameter(g.vertices, rel).value, Scalar(1)) == 0,
                  g.family_name + ": relative diameter exactly 1");
    }
    c.detail << corpus.size() << " instances, " << edge_antipodal_count
             << " edge-antipodal, zero exceptions";
}

void criterion_cardinality_bound(Check& c, const Options& opt,
                                 const std::vector<VertexSet>& randoms) {
    for (const auto& vs : randoms) {
        const std::vector<Norm> norms{Norm::l1(), Norm::linf(), Norm::relative(vs)};
        for (const auto& n : norms) {
            if (cardinality_bound_check(vs, n).status != Verdict::Holds) {
                c.require(false, "random instance bound under " + n.name());
            }
        }
    }
    for (std::size_t d = 2; d <= 4; ++d) {
        const auto rep = cardinality_bound_check(fam(Family::Hypercube, d).vertices,
                                                 Norm::linf());
        c.require(rep.status == Verdict::Holds, "hypercube bound");
        c.require(rep.lambda.ratio_squared == 1, "hypercube lambda is 1");
        c.require(rep.bound.a == Scalar(static_cast<long>(rep.cardinality)) &&
                      rep.bound.b == 0,
                  "hypercube attains the bound with equality");
    }
    c.detail << randoms.size() << " random sets x {l1, linf, relative}, "
             << "equality on linf hypercubes";
    (void)opt;
}

void criterion_lambda_bound_corpus(Check& c, const Options&) {
    std::size_t subequilateral_count = 0;
    for (const auto& g : family_corpus()) {
        std::vector<Norm> norms{g.recommended};
        if (g.recommended.kind() != NormKind::Relative && g.vertices.affine_dim() >= 1) {
            norms.push_back(Norm::relative(g.vertices));
        }
        for (const auto& n : norms) {
            if (!is_subequilateral(g.vertices, n).holds) {
                continue;
            }
            ++subequilateral_count;
            const Verdict expected =
                g.vertices.affine_dim() >= 2 ? Verdict::Holds : Verdict::NotApplicable;
            c.require(lambda_bound_check(g.vertices, n).status == expected,
                      g.family_name + " lambda bound under " + n.name());
        }
    }
    for (std::size_t d = 2; d <= 8; ++d) {
        const Generated g = fam(Family::L1Subspace, d);
        const Scalar half(static_cast<long>(d), 2);
        const auto rep = lambda_bound_check(g.vertices, Norm::l1());
        c.require(rep.status == Verdict::Holds, "l1subspace bound");
        c.require(rep.lambda.ratio_squared == half * half,
                  "l1subspace attains lambda = d/2 at d=" + std::to_string(d));
    }
    c.detail << subequilateral_count
             << " subequilateral corpus checks; equality family at d=2..8";
}

void criterion_certificate_tightness(Check& c, const Options&) {
    for (std::size_t d : {4, 6, 8}) {
        const Generated g = fam(Family::L1Subspace, d);
        const auto cert = nonadjacent_pair_certificate(g.vertices, Norm::l1(), d, d + 1);
        c.require(cmp_scalar(cert.lower_bound, Scalar(4)) == 0,
                  "lower bound 4 at d=" + std::to_string(d));
        c.require(cmp_scalar(cert.actual, Scalar(4)) == 0,
                  "actual distance 4 at d=" + std::to_string(d));
        c.require(cert.tight, "tight at d=" + std::to_string(d));
        const Scalar inv_d(1, static_cast<long>(d));
        c.require(cert.side_x.dominant_coeff >= inv_d, "side x dominant coefficient");
        c.require(cert.side_y.dominant_coeff >= inv_d, "side y dominant coefficient");
    }
    c.detail << "apex pairs at d=4,6,8: bound (2/d)(2d)=4 equals the distance";
}

void criterion_euclidean_simplex(Check& c, const Options&,
                                 const std::vector<VertexSet>& randoms) {
    for (std::size_t d = 1; d <= 5; ++d) {
        c.require(euclidean_subequilateral_check(fam(Family::Simplex, d).vertices).status ==
                      Verdict::Holds,
                  "simplex d=" + std::to_string(d));
    }
    c.require(euclidean_subequilateral_check(fam(Family::Hypercube, 3).vertices).status ==
                  Verdict::NotApplicable,
              "cube is not l2-subequilateral");
    std::size_t applicable = 0;
    for (const auto& vs : randoms) {
        const auto rep = euclidean_subequilateral_check(vs);
        c.require(rep.status != Verdict::Violated, "random instance consistency");
        if (rep.status == Verdict::Holds) {
            ++applicable;
        }
    }
    c.detail << "simplices pass; " << randoms.size() << " random sets, " << applicable
             << " l2-subequilateral, zero violations";
}

void criterion_search_sharpness(Check& c, const Options& opt) {
    auto timed_probe = [&](SearchConfig cfg, const char* what) {
        const auto t0 = std::chrono::steady_clock::now();
        const SearchReport rep = probe(cfg);
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        c.require(secs < 300.0, std::string(what) + " runtime");
        c.require(!rep.bound_exceeded, std::string(what) + " bound guard");
        return rep;
    };

    SearchConfig plane;
    plane.dim = 2;
    plane.objective = Objective::MaxVertices;
    plane.iterations = opt.quick ? 300 : 3000;
    plane.seed = 7;
    plane.restarts = 3;
    plane.threads = 3;
    const SearchReport a = timed_probe(plane, "dim2");
    c.require(a.best_score == 4, "dim2 best is exactly 4");

    SearchConfig space;
    space.dim = 3;
    space.objective = Objective::MaxVertices;
    space.iterations = opt.quick ? 500 : 10000;
    space.seed = 7;
    space.restarts = 2;
    space.threads = 2;
    const SearchReport b = timed_probe(space, "dim3");
    c.require(b.best_score == 8, "dim3 best is exactly 8");
    bool reached_from_cube = false;
    for (const auto& h : b.history) {
        if (h.restart == 0 && h.score == 8) {
            reached_from_cube = true;
        }
    }
    c.require(reached_from_cube, "dim3 reaches 8 from the hypercube restart");

    SearchConfig lam;
    lam.dim = 4;
    lam.objective = Objective::MaxLambdaRelative;
    lam.iterations = opt.quick ? 50 : 400;
    lam.seed = 7;
    lam.restarts = 2;
    lam.threads = 2;
    const SearchReport d4 = timed_probe(lam, "dim4-lambda");
    c.require(d4.best_score >= Scalar(49, 25), "dim4 lambda at least 7/5");
    c.require(d4.best_score < Scalar(9, 4), "dim4 lambda ratio below 9/4");

    c.detail << "dim2 -> 4, dim3 -> 8 (cube restart), dim4 lambda^2 = "
             << scalar_str(d4.best_score);
}

void criterion_face_oracles(Check& c, const Options& opt) {
    testutil::Rng rng(20240808);
    const int target = opt.quick ? 20 : 100;

    int done = 0;
    while (done < target) {
        std::vector<Vec> pts;
        const std::size_t m = 5 + rng.below(5);
        for (std::size_t k = 0; k < m; ++k) {
            Vec p = rng.point(3, 3, 2);
            if (std::find(pts.begin(), pts.end(), p) == pts.end()) {
                pts.push_back(std::move(p));
            }
        }
        if (pts.size() < 4) {
            continue;
        }
        VertexSet raw(pts);
        if (raw.affine_dim() != 3) {
            continue;
        }
        VertexSet vs = reduce_to_vertices(raw);
        if (vs.affine_dim() != 3 || vs.size() > 8) {
            continue;
        }
        auto got = edges(vs);
        auto want = oracles::oracle_edges(vs);
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        if (got != want) {
            c.require(false, "edge sets differ on a random 3-polytope");
        }
        ++done;
    }

    done = 0;
    while (done < target) {
        std::vector<Vec> pts;
        const std::size_t dim = 1 + rng.below(3);
        const std::size_t m = 3 + rng.below(5);
        for (std::size_t k = 0; k < m; ++k) {
            Vec p = rng.point(dim, 2, 2);
            if (std::find(pts.begin(), pts.end(), p) == pts.end()) {
                pts.push_back(std::move(p));
            }
        }
        if (pts.size() < 2) {
            continue;
        }
        const VertexSet vs(pts);
        for (std::size_t i = 0; i < vs.size(); ++i) {
            if (is_vertex(vs, i).vertex != oracles::oracle_is_vertex(vs, i)) {
                c.require(false, "vertexhood differs from the exhaustive oracle");
            }
        }
        ++done;
    }
    c.detail << target << " random edge comparisons and " << target
             << " vertexhood instances, zero mismatches";
}

void criterion_lp_oracle(Check& c, const Options& opt) {
    testutil::Rng rng(31415926);
    const int boxed_n = opt.quick ? 100 : 600;
    const int cone_n = opt.quick ? 60 : 400;
    int infeasible = 0, optimal = 0, unbounded = 0;

    for (int iter = 0; iter < boxed_n + cone_n; ++iter) {
        const LinearProgram lp = testutil::random_lp(rng, iter < boxed_n);
        const LpOutcome got = solve_lp(lp);
        const auto want = oracles::oracle_lp_solve(lp);
        if (got.status != want.status) {
            c.require(false, "status mismatch");
            continue;
        }
        switch (got.status) {
            case LpStatus::Optimal:
                ++optimal;
                if (*got.objective_value != *want.value) {
                    c.require(false, "optimal value mismatch");
                }
                break;
            case LpStatus::Infeasible:
                ++infeasible;
                break;
            case LpStatus::Unbounded:
                ++unbounded;
                break;
        }
        if (!verify_outcome(lp, got)) {
            c.require(false, "certificate verification");
        }
    }
    c.detail << boxed_n + cone_n << " random programs: " << optimal << " optimal, "
             << infeasible << " infeasible (all Farkas-verified), " << unbounded
             << " unbounded";
}

}  // namespace

std::vector<CriterionResult> run_all(std::ostream& log, const Options& opt) {
    std::vector<CriterionResult> results;
    const std::vector<VertexSet> randoms = random_corpus(opt.quick ? 60 : 500);

    using Fn = std::function<void(Check&)>;
    const std::vector<std::pair<std::string, Fn>> criteria{
        {"l1-subspace-family-metrics",
         [&](Check& c) { criterion_l1subspace_metrics(c, opt); }},
        {"edge-antipodal-not-antipodal-example",
         [&](Check& c) { criterion_edge_antipodal_example(c, opt); }},
        {"relative-norm-bridge-corpus", [&](Check& c) { criterion_bridge_corpus(c, opt); }},
        {"cardinality-lambda-bound-500",
         [&](Check& c) { criterion_cardinality_bound(c, opt, randoms); }},
        {"subequilateral-lambda-bound-corpus",
         [&](Check& c) { criterion_lambda_bound_corpus(c, opt); }},
        {"certificate-tightness", [&](Check& c) { criterion_certificate_tightness(c, opt); }},
        {"euclidean-simplex-consistency",
         [&](Check& c) { criterion_euclidean_simplex(c, opt, randoms); }},
        {"search-sharpness", [&](Check& c) { criterion_search_sharpness(c, opt); }},
        {"face-oracle-equivalence", [&](Check& c) { criterion_face_oracles(c, opt); }},
        {"lp-oracle-equivalence", [&](Check& c) { criterion_lp_oracle(c, opt); }},
    };

    for (const auto& [name, fn] : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Check check;
        try {
            fn(check);
        } catch (const std::exception& e) {
            check.ok = false;
            check.detail << "exception: " << e.what();
        }
        CriterionResult res;
        res.name = name;
        res.passed = check.ok;
        res.detail = check.detail.str();
        res.seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        log << (res.passed ? "PASS" : "FAIL") << "  " << res.name << "  ("
            << static_cast<long>(res.seconds * 1000) / 1000.0 << "s)  " << res.detail
            << "\n";
        log.flush();
        results.push_back(std::move(res));
    }
    return results;
}

bool all_passed(const std::vector<CriterionResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CriterionResult& r) { return r.passed; });
}

}  // namespace acceptance
