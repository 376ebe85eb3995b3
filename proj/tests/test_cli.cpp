// End-to-end CLI tests: spawn the real binary and check exit codes, file
// outputs and the re-ingestion loop.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

using Json = nlohmann::json;

namespace {

int run(const std::string& args) {
    const std::string cmd = std::string(ANTIPOD_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Json read_json(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    Json doc;
    in >> doc;
    return doc;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

std::string tmp(const std::string& name) {
    return "cli_test_" + name;
}

}  // namespace

TEST_CASE("generate then analyze a hypercube") {
    const std::string file = tmp("cube.json");
    REQUIRE(run("generate --family hypercube --dim 3 --output " + file) == 0);
    const Json doc = read_json(file);
    CHECK(doc["ambient_dim"] == 3);
    CHECK(doc["vertices"].size() == 8);
    CHECK(doc["recommended_norm"] == "linf");
    CHECK(doc["vertices"][0][0].is_string());

    const std::string report = tmp("cube_report.json");
    REQUIRE(run("analyze --input " + file + " --norm linf --output " + report) == 0);
    const Json rep = read_json(report);
    for (const auto& check : rep["checks"]) {
        if (check["name"] == "equidistant") {
            CHECK(check["status"] == "true");
        }
        if (check["name"] == "lambda") {
            CHECK(check["values"]["ratio_squared"] == "1");
        }
    }
}

TEST_CASE("analyze resolves the recommended norm and reports are re-ingestible") {
    const std::string file = tmp("talata.json");
    REQUIRE(run("generate --family talata --dim 4 --eps 1/10 --output " + file) == 0);

    const std::string report = tmp("talata_report.json");
    REQUIRE(run("analyze --input " + file + " --output " + report) == 0);  // norm from file
    const Json rep = read_json(report);
    CHECK(rep["norm"] == "relative");
    bool saw_edge_antipodal = false;
    for (const auto& check : rep["checks"]) {
        if (check["name"] == "edge_antipodal") {
            CHECK(check["status"] == "true");
            saw_edge_antipodal = true;
        }
        if (check["name"] == "antipodal") {
            CHECK(check["status"] == "false");
        }
    }
    CHECK(saw_edge_antipodal);

    // the report itself is a valid analyze input (the analyzed norm rides
    // along) and reproduces the identical check list
    const std::string report2 = tmp("talata_report2.json");
    REQUIRE(run("analyze --input " + report + " --output " + report2) == 0);
    const Json rep2 = read_json(report2);
    CHECK(rep["checks"] == rep2["checks"]);
    CHECK(rep["instance"]["digest"] == rep2["instance"]["digest"]);
    CHECK(rep2["norm"] == "relative");
}

TEST_CASE("certify the apex pair and reject edge pairs") {
    const std::string file = tmp("sub.json");
    REQUIRE(run("generate --family l1subspace --dim 4 --output " + file) == 0);

    const std::string cert = tmp("cert.json");
    REQUIRE(run("certify --input " + file + " --pair 4 5 --norm l1 --output " + cert) == 0);
    const Json doc = read_json(cert);
    CHECK(doc["certificate"]["tight"] == true);
    CHECK(doc["certificate"]["lower_bound"]["value"] == "4");
    CHECK(doc["certificate"]["actual_distance"]["value"] == "4");

    CHECK(run("certify --input " + file + " --pair 0 1 --norm l1") == 1);  // an edge
    CHECK(run("certify --input " + file + " --pair 0 0 --norm l1") == 1);
}

TEST_CASE("analyze the l1 subspace family under its own norm") {
    const std::string file = tmp("sub4.json");
    REQUIRE(run("generate --family l1subspace --dim 4 --output " + file) == 0);
    const std::string report = tmp("sub4_report.json");
    REQUIRE(run("analyze --input " + file + " --norm l1 --output " + report) == 0);
    const Json rep = read_json(report);
    for (const auto& check : rep["checks"]) {
        if (check["name"] == "subequilateral") {
            CHECK(check["status"] == "true");
        }
        if (check["name"] == "lambda") {
            CHECK(check["values"]["ratio_squared"] == "4");
        }
        if (check["name"] == "edge_antipodal") {
            CHECK(check["status"] == "true");
        }
        if (check["name"] == "subequilateral_lambda_bound") {
            CHECK(check["status"] == "holds");
            CHECK(check["witnesses"]["certificate"]["tight"] == true);
        }
    }
}

TEST_CASE("generate writes subspace constraints for the l1 family") {
    const std::string file = tmp("sub6.json");
    REQUIRE(run("generate --family l1subspace --dim 6 --output " + file) == 0);
    const Json doc = read_json(file);
    CHECK(doc["ambient_dim"] == 7);
    CHECK(doc["vertices"].size() == 8);
    REQUIRE(doc["affine_constraints"].size() == 1);
    CHECK(doc["affine_constraints"][0].size() == 8);  // coefficients + rhs
}

TEST_CASE("probe emits a verified report with echoed seed") {
    const std::string out = tmp("probe.json");
    REQUIRE(run("probe --dim 2 --objective max-vertices --iterations 80 --restarts 2 "
                "--seed 7 --output " +
                out) == 0);
    const Json doc = read_json(out);
    CHECK(doc["config"]["seed"] == 7);
    CHECK(doc["best_score"] == "4");
    CHECK(doc["bound_exceeded"] == false);
    CHECK(doc["best_instance"]["vertices"].size() == 4);

    // identical config replays to an identical report body
    const std::string out2 = tmp("probe2.json");
    REQUIRE(run("probe --dim 2 --objective max-vertices --iterations 80 --restarts 2 "
                "--seed 7 --output " +
                out2) == 0);
    Json a = read_json(out);
    Json b = read_json(out2);
    a.erase("command");
    b.erase("command");
    CHECK(a == b);
}

TEST_CASE("non-convex input fails strictly and passes with --reduce") {
    const std::string file = tmp("midpoint.json");
    write_text(file, R"({"ambient_dim": 2,
                         "vertices": [["0","0"], ["2","0"], ["1","0"], ["0","2"]]})");
    CHECK(run("analyze --input " + file + " --norm l1") == 1);
    CHECK(run("analyze --input " + file + " --norm l1 --reduce") == 0);
}

TEST_CASE("argument errors exit with code 1, help with 0") {
    CHECK(run("--help") == 0);
    CHECK(run("analyze") == 1);            // missing required --input
    CHECK(run("frobnicate") == 1);         // unknown subcommand
    CHECK(run("probe --dim 2 --objective sideways") == 1);
}

TEST_CASE("bad inputs exit with code 1") {
    const std::string file = tmp("garbage.json");
    write_text(file, "{ not json");
    CHECK(run("analyze --input " + file + " --norm l1") == 1);
    CHECK(run("analyze --input does_not_exist.json --norm l1") == 1);

    write_text(file, R"({"ambient_dim": 2, "vertices": [[1, 2]]})");
    CHECK(run("analyze --input " + file + " --norm l1") == 1);  // numbers, not strings

    CHECK(run("generate --family dodecahedron --dim 3 --output x.json") == 1);
    CHECK(run("generate --family talata --dim 3 --output x.json") == 1);

    const std::string cube = tmp("cube_nonorm.json");
    REQUIRE(run("generate --family hypercube --dim 2 --output " + cube) == 0);
    CHECK(run("analyze --input " + cube + " --norm manhattan") == 1);
}
