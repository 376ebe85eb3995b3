// antipod: exact-arithmetic toolkit for antipodality and subequilateral
// structure of convex polytopes in normed spaces.
//
// Subcommands: analyze, generate, certify, probe, verify-suite.
// Exit codes: 0 done, 1 bad input or failed precondition, 2 a verifier
// reported "violated" (or a certificate chain broke), 3 a probe run exceeded
// a proven bound.

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>

#include <antipod/analysis.hpp>
#include <antipod/constructions.hpp>
#include <antipod/io.hpp>
#include <antipod/prober.hpp>

#include "../tests/acceptance.hpp"

using namespace antipod;

namespace {

std::string join_args(int argc, char** argv) {
    std::string out;
    for (int i = 0; i < argc; ++i) {
        if (i) {
            out += ' ';
        }
        out += argv[i];
    }
    return out;
}

std::size_t env_threads() {
    const char* raw = std::getenv("ANTIPOD_THREADS");
    if (!raw) {
        return 1;
    }
    const long n = std::atol(raw);
    return n > 0 ? static_cast<std::size_t>(n) : 1;
}

Norm resolve_norm(const std::string& flag, const VertexFileData& data, const VertexSet& vs) {
    std::string name = flag;
    if (name.empty()) {
        if (!data.recommended_norm) {
            throw PreconditionError(
                "no --norm given and the input file carries no recommended_norm");
        }
        name = *data.recommended_norm;
    }
    if (name == "l1") {
        return Norm::l1();
    }
    if (name == "l2") {
        return Norm::l2();
    }
    if (name == "linf") {
        return Norm::linf();
    }
    if (name == "relative") {
        return Norm::relative(vs);
    }
    throw ParseError("unknown norm '" + name + "' (expected l1, l2, linf or relative)");
}

void print_check_table(const Json& report) {
    for (const auto& check : report["checks"]) {
        std::string line = "  " + check["name"].get<std::string>();
        line.resize(std::max<std::size_t>(line.size() + 1, 38), ' ');
        line += check["status"].get<std::string>();
        std::cout << line << "\n";
        if (check["name"] == "lambda") {
            std::cout << "      ratio_squared = "
                      << check["values"]["ratio_squared"].get<std::string>() << "\n";
        }
    }
}

int cmd_analyze(const std::string& input, const std::string& norm_flag, bool reduce,
                const std::string& output, const std::string& echo) {
    const VertexFileData data = load_vertex_file(input);
    VertexSet vs = to_vertex_set(data);
    std::size_t dropped = 0;
    if (!in_convex_position(vs)) {
        if (!reduce) {
            throw PreconditionError(
                "input is not in convex position; pass --reduce to drop non-vertices");
        }
        const std::size_t before = vs.size();
        vs = reduce_to_vertices(vs);
        dropped = before - vs.size();
    }
    const Norm norm = resolve_norm(norm_flag, data, vs);
    const AnalysisResult res = analyze(vs, norm);

    Json report = analysis_to_json(vs, res);
    report["command"] = echo;
    if (dropped > 0) {
        report["reduced_points_dropped"] = dropped;
    }

    std::cout << "instance: " << vs.size() << " vertices, ambient dim " << vs.ambient_dim()
              << ", affine dim " << vs.affine_dim() << ", norm " << norm.name() << "\n";
    if (dropped > 0) {
        std::cout << "  (dropped " << dropped << " non-vertex point(s))\n";
    }
    print_check_table(report);
    if (!output.empty()) {
        save_json(output, report);
        std::cout << "report written to " << output << "\n";
    }
    return res.any_violated() ? 2 : 0;
}

int cmd_generate(const std::string& family, std::size_t dim, const std::string& eps,
                 std::size_t count, std::uint64_t seed, long bound,
                 const std::string& output) {
    FamilySpec spec;
    spec.family = family_from_name(family);
    spec.dim = dim;
    if (!eps.empty()) {
        spec.eps = parse_scalar(eps);
    } else if (spec.family == Family::Talata) {
        spec.eps = Scalar(1, 10);
    }
    spec.point_count = count;
    spec.seed = seed;
    spec.coordinate_bound = bound;

    const Generated gen = generate(spec);
    const Json doc = vertex_file_to_json(
        from_vertex_set(gen.vertices, gen.recommended.name(), gen.family_name));
    save_json(output, doc);
    std::cout << gen.family_name << ": " << gen.vertices.size() << " vertices in R^"
              << gen.vertices.ambient_dim() << " (affine dim " << gen.vertices.affine_dim()
              << "), recommended norm " << gen.recommended.name() << ", written to " << output
              << "\n";
    return 0;
}

int cmd_certify(const std::string& input, std::size_t i, std::size_t j,
                const std::string& norm_flag, const std::string& output,
                const std::string& echo) {
    const VertexFileData data = load_vertex_file(input);
    const VertexSet vs = to_vertex_set(data);
    const Norm norm = resolve_norm(norm_flag, data, vs);
    const NonadjacentPairCertificate cert = nonadjacent_pair_certificate(vs, norm, i, j);

    std::cout << "pair (" << i << ", " << j << "): lower bound " << cert.lower_bound.str()
              << ", actual distance " << cert.actual.str() << (cert.tight ? " (tight)" : "")
              << "\n";
    std::cout << "  dominant coefficients: " << scalar_str(cert.side_x.dominant_coeff)
              << " and " << scalar_str(cert.side_y.dominant_coeff) << " (each >= 1/"
              << cert.dim << ")\n";

    if (!output.empty()) {
        Json report{{"schema", "antipod-certificate-v1"},
                    {"command", echo},
                    {"norm", norm.name()},
                    {"instance", instance_to_json(vs, std::nullopt, std::nullopt)},
                    {"certificate", certificate_to_json(cert)}};
        save_json(output, report);
        std::cout << "certificate written to " << output << "\n";
    }
    return 0;
}

int cmd_probe(std::size_t dim, const std::string& objective, std::size_t iterations,
              std::uint64_t seed, std::size_t restarts, long height_bound,
              const std::string& output, const std::string& echo) {
    SearchConfig cfg;
    cfg.dim = dim;
    cfg.objective = objective_from_name(objective);
    cfg.iterations = iterations;
    cfg.seed = seed;
    cfg.restarts = restarts;
    cfg.height_bound = height_bound;
    cfg.threads = env_threads();

    const SearchReport rep = probe(cfg);
    std::cout << "best score " << scalar_str(rep.best_score) << " from restart "
              << rep.best_restart << " (" << rep.best->size() << " vertices)\n";
    std::cout << "vertex bound " << scalar_str(rep.vertex_bound) << ", lambda ratio bound "
              << scalar_str(rep.lambda_ratio_bound) << "\n";
    if (!output.empty()) {
        Json doc = search_report_to_json(rep);
        doc["command"] = echo;
        save_json(output, doc);
        std::cout << "report written to " << output << "\n";
    }
    if (rep.bound_exceeded) {
        std::cerr << "FATAL: an accepted instance exceeded a proven bound\n";
        return 3;
    }
    return 0;
}

int cmd_verify_suite(bool quick) {
    acceptance::Options opt;
    opt.quick = quick;
    const auto results = acceptance::run_all(std::cout, opt);
    return acceptance::all_passed(results) ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact antipodality toolkit for convex polytopes in normed spaces"};
    app.require_subcommand(1);
    const std::string echo = join_args(argc, argv);

    std::string input, output, norm_flag, family, eps, objective = "max-vertices";
    std::size_t dim = 2, count = 6, iterations = 1000, restarts = 3;
    std::vector<std::size_t> pair;
    std::uint64_t seed = 0;
    long bound = 4, height_bound = 3;
    bool reduce = false, quick = false;

    auto* analyze_cmd = app.add_subcommand("analyze", "run all predicates and verifiers");
    analyze_cmd->add_option("--input", input, "vertex or report JSON file")->required();
    analyze_cmd->add_option("--norm", norm_flag, "l1 | l2 | linf | relative");
    analyze_cmd->add_flag("--reduce", reduce, "drop non-vertices instead of failing");
    analyze_cmd->add_option("--output", output, "write the JSON report here");

    auto* generate_cmd = app.add_subcommand("generate", "write a vertex file for a family");
    generate_cmd
        ->add_option("--family", family,
                     "simplex | hypercube | crosspolytope | l1subspace | talata | random")
        ->required();
    generate_cmd->add_option("--dim", dim, "dimension")->required();
    generate_cmd->add_option("--eps", eps, "talata parameter (rational, default 1/10)");
    generate_cmd->add_option("--count", count, "random: points to draw");
    generate_cmd->add_option("--seed", seed, "random: seed");
    generate_cmd->add_option("--bound", bound, "random: coordinate height bound");
    generate_cmd->add_option("--output", output, "output path")->required();

    auto* certify_cmd =
        app.add_subcommand("certify", "nonadjacent-pair distance certificate");
    certify_cmd->add_option("--input", input, "vertex or report JSON file")->required();
    certify_cmd->add_option("--pair", pair, "two vertex labels")->expected(2)->required();
    certify_cmd->add_option("--norm", norm_flag, "l1 | l2 | linf | relative");
    certify_cmd->add_option("--output", output, "write the certificate here");

    auto* probe_cmd = app.add_subcommand("probe", "seeded search for extremal instances");
    probe_cmd->add_option("--dim", dim, "dimension")->required();
    probe_cmd->add_option("--objective", objective, "max-vertices | max-lambda");
    probe_cmd->add_option("--iterations", iterations, "iterations per restart");
    probe_cmd->add_option("--seed", seed, "seed");
    probe_cmd->add_option("--restarts", restarts, "restart count");
    probe_cmd->add_option("--height-bound", height_bound, "coordinate height bound");
    probe_cmd->add_option("--output", output, "write the search report here");

    auto* verify_cmd = app.add_subcommand("verify-suite", "run the full acceptance checks");
    verify_cmd->add_flag("--quick", quick, "reduced search budgets (smoke test)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;  // --help exits 0, every parse failure 1
    }

    try {
        if (app.got_subcommand(analyze_cmd)) {
            return cmd_analyze(input, norm_flag, reduce, output, echo);
        }
        if (app.got_subcommand(generate_cmd)) {
            return cmd_generate(family, dim, eps, count, seed, bound, output);
        }
        if (app.got_subcommand(certify_cmd)) {
            return cmd_certify(input, pair.at(0), pair.at(1), norm_flag, output, echo);
        }
        if (app.got_subcommand(probe_cmd)) {
            return cmd_probe(dim, objective, iterations, seed, restarts, height_bound, output,
                             echo);
        }
        if (app.got_subcommand(verify_cmd)) {
            return cmd_verify_suite(quick);
        }
    } catch (const DiagnosticError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
