#include "antipod/io.hpp"

#include <cstdio>
#include <fstream>

namespace antipod {

namespace {

Scalar parse_coord(const Json& j, const char* what) {
    if (!j.is_string()) {
        throw ParseError(std::string(what) + ": rationals must be strings");
    }
    return parse_scalar(j.get<std::string>());
}

Json pairs_to_json(const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
    Json out = Json::array();
    for (const auto& [i, j] : pairs) {
        out.push_back({i, j});
    }
    return out;
}

Json vec_to_json(const Vec& v) {
    Json out = Json::array();
    for (const auto& c : v) {
        out.push_back(scalar_str(c));
    }
    return out;
}

Json quadratic_to_json(const QuadraticValue& q) {
    return Json{{"rational_part", scalar_str(q.a)},
                {"sqrt_coefficient", scalar_str(q.b)},
                {"radicand", scalar_str(q.r)},
                {"display", quadratic_str(q)}};
}

Json face_to_json(const FaceWitness& w) {
    return Json{{"functional", vec_to_json(w.functional)},
                {"level", scalar_str(w.level)},
                {"vertices", w.face}};
}

const char* bool_status(bool b) {
    return b ? "true" : "false";
}

}  // namespace

VertexFileData vertex_file_from_json(const Json& doc) {
    if (!doc.is_object() || !doc.contains("ambient_dim") || !doc.contains("vertices")) {
        throw ParseError("vertex file: expected object with ambient_dim and vertices");
    }
    VertexFileData data;
    if (!doc["ambient_dim"].is_number_unsigned()) {
        throw ParseError("vertex file: ambient_dim must be a nonnegative integer");
    }
    data.ambient_dim = doc["ambient_dim"].get<std::size_t>();
    if (!doc["vertices"].is_array() || doc["vertices"].empty()) {
        throw ParseError("vertex file: vertices must be a nonempty array");
    }
    for (const auto& row : doc["vertices"]) {
        if (!row.is_array() || row.size() != data.ambient_dim) {
            throw ParseError("vertex file: vertex row length must equal ambient_dim");
        }
        Vec p;
        for (const auto& c : row) {
            p.push_back(parse_coord(c, "vertex coordinate"));
        }
        data.vertices.push_back(std::move(p));
    }
    if (doc.contains("affine_constraints")) {
        for (const auto& row : doc["affine_constraints"]) {
            if (!row.is_array() || row.size() != data.ambient_dim + 1) {
                throw ParseError(
                    "vertex file: constraint rows need ambient_dim coefficients plus rhs");
            }
            AffineConstraint c;
            for (std::size_t k = 0; k + 1 < row.size(); ++k) {
                c.coeffs.push_back(parse_coord(row[k], "constraint coefficient"));
            }
            c.rhs = parse_coord(row.back(), "constraint rhs");
            data.constraints.push_back(std::move(c));
        }
    }
    if (doc.contains("recommended_norm")) {
        data.recommended_norm = doc["recommended_norm"].get<std::string>();
    }
    if (doc.contains("family")) {
        data.family = doc["family"].get<std::string>();
    }
    return data;
}

Json vertex_file_to_json(const VertexFileData& data) {
    Json doc;
    doc["ambient_dim"] = data.ambient_dim;
    Json verts = Json::array();
    for (const auto& p : data.vertices) {
        verts.push_back(vec_to_json(p));
    }
    doc["vertices"] = std::move(verts);
    if (!data.constraints.empty()) {
        Json rows = Json::array();
        for (const auto& c : data.constraints) {
            Json row = vec_to_json(c.coeffs);
            row.push_back(scalar_str(c.rhs));
            rows.push_back(std::move(row));
        }
        doc["affine_constraints"] = std::move(rows);
    }
    if (data.recommended_norm) {
        doc["recommended_norm"] = *data.recommended_norm;
    }
    if (data.family) {
        doc["family"] = *data.family;
    }
    return doc;
}

VertexFileData load_vertex_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open '" + path + "'");
    }
    Json doc;
    try {
        in >> doc;
    } catch (const std::exception& e) {
        throw ParseError("invalid JSON in '" + path + "': " + e.what());
    }
    if (doc.is_object() && !doc.contains("vertices") && doc.contains("instance")) {
        VertexFileData data = vertex_file_from_json(doc["instance"]);
        if (!data.recommended_norm && doc.contains("norm")) {
            data.recommended_norm = doc["norm"].get<std::string>();
        }
        return data;
    }
    return vertex_file_from_json(doc);
}

void save_json(const std::string& path, const Json& doc) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) {
            throw Error("cannot write '" + tmp + "'");
        }
        out << doc.dump(2) << "\n";
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        throw Error("cannot move report into place at '" + path + "'");
    }
}

VertexSet to_vertex_set(const VertexFileData& data) {
    return VertexSet(data.vertices, data.constraints);
}

VertexFileData from_vertex_set(const VertexSet& v,
                               std::optional<std::string> recommended_norm,
                               std::optional<std::string> family) {
    VertexFileData data;
    data.ambient_dim = v.ambient_dim();
    data.vertices = v.points();
    data.constraints = v.affine_constraints();
    data.recommended_norm = std::move(recommended_norm);
    data.family = std::move(family);
    return data;
}

std::string instance_digest(const VertexSet& v) {
    std::string canon = std::to_string(v.ambient_dim());
    for (const auto& p : v.points()) {
        canon += ';';
        for (const auto& c : p) {
            canon += scalar_str(c);
            canon += ',';
        }
    }
    for (const auto& c : v.affine_constraints()) {
        canon += '|';
        for (const auto& x : c.coeffs) {
            canon += scalar_str(x);
            canon += ',';
        }
        canon += scalar_str(c.rhs);
    }
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : canon) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

Json norm_value_to_json(const NormValue& v) {
    if (v.is_rational()) {
        return Json{{"kind", "rational"}, {"value", scalar_str(v.rational_value())}};
    }
    return Json{{"kind", "sqrt"}, {"squared", scalar_str(v.squared())}};
}

Json lambda_to_json(const LambdaValue& lam) {
    return Json{{"diameter", norm_value_to_json(lam.diameter)},
                {"min_distance", norm_value_to_json(lam.min_distance)},
                {"ratio_squared", scalar_str(lam.ratio_squared)},
                {"max_pairs", pairs_to_json(lam.max_pairs)},
                {"min_pairs", pairs_to_json(lam.min_pairs)}};
}

Json certificate_to_json(const NonadjacentPairCertificate& cert) {
    auto side_json = [](const CertificateSide& s) {
        Json dec = Json::array();
        for (const auto& [label, coeff] : s.decomposition.support) {
            dec.push_back({label, scalar_str(coeff)});
        }
        return Json{{"origin", s.origin_label},
                    {"t_entry", scalar_str(s.t_entry)},
                    {"entry_point", vec_to_json(s.entry_point)},
                    {"face", face_to_json(s.face)},
                    {"decomposition", std::move(dec)},
                    {"dominant_label", s.dominant_label},
                    {"dominant_coeff", scalar_str(s.dominant_coeff)},
                    {"origin_to_entry", norm_value_to_json(s.origin_to_entry)},
                    {"entry_to_dominant", norm_value_to_json(s.entry_to_dominant)},
                    {"side_bound", norm_value_to_json(s.side_bound)}};
    };
    return Json{{"pair", {cert.x_label, cert.y_label}},
                {"dim", cert.dim},
                {"diameter", norm_value_to_json(cert.diam)},
                {"t_min", scalar_str(cert.t_min)},
                {"t_max", scalar_str(cert.t_max)},
                {"side_x", side_json(cert.side_x)},
                {"side_y", side_json(cert.side_y)},
                {"lower_bound", norm_value_to_json(cert.lower_bound)},
                {"actual_distance", norm_value_to_json(cert.actual)},
                {"tight", cert.tight}};
}

Json instance_to_json(const VertexSet& v, std::optional<std::string> recommended_norm,
                      std::optional<std::string> family) {
    Json doc = vertex_file_to_json(
        from_vertex_set(v, std::move(recommended_norm), std::move(family)));
    doc["digest"] = instance_digest(v);
    doc["affine_dim"] = v.affine_dim();
    doc["cardinality"] = v.size();
    return doc;
}

Json analysis_to_json(const VertexSet& v, const AnalysisResult& res) {
    Json checks = Json::array();

    checks.push_back({{"name", "convex_position"}, {"status", "true"}});
    checks.push_back({{"name", "edges"},
                      {"status", "true"},
                      {"values",
                       {{"count", res.edge_list.size()},
                        {"pairs", pairs_to_json(res.edge_list)}}}});
    checks.push_back({{"name", "equidistant"}, {"status", bool_status(res.equidistant)}});

    Json sub{{"name", "subequilateral"},
             {"status", bool_status(res.subequilateral.holds)},
             {"values", {{"diameter", norm_value_to_json(res.subequilateral.diameter)}}}};
    if (res.subequilateral.violating_edge) {
        sub["witnesses"] = {
            {"violating_edge",
             {res.subequilateral.violating_edge->first, res.subequilateral.violating_edge->second}},
            {"edge_length", norm_value_to_json(*res.subequilateral.violating_length)}};
    }
    checks.push_back(std::move(sub));

    auto antipodal_json = [&](const char* name, const AntipodalCheck& c) {
        Json j{{"name", name}, {"status", bool_status(c.holds)}};
        if (c.failing_pair) {
            j["witnesses"] = {{"failing_pair", {c.failing_pair->first, c.failing_pair->second}}};
        }
        return j;
    };
    checks.push_back(antipodal_json("edge_antipodal", res.edge_antipodal));
    checks.push_back(antipodal_json("antipodal", res.antipodal));

    checks.push_back(
        {{"name", "lambda"}, {"status", "true"}, {"values", lambda_to_json(res.lambda_value)}});

    checks.push_back({{"name", "cardinality_lambda_bound"},
                      {"status", verdict_str(res.cardinality_bound.status)},
                      {"values",
                       {{"cardinality", res.cardinality_bound.cardinality},
                        {"dim", res.cardinality_bound.dim},
                        {"bound", quadratic_to_json(res.cardinality_bound.bound)}}}});

    Json lb{{"name", "subequilateral_lambda_bound"}};
    if (res.lambda_bound) {
        lb["status"] = verdict_str(res.lambda_bound->status);
        lb["values"] = {{"ratio_squared", scalar_str(res.lambda_bound->lambda.ratio_squared)},
                        {"dim", res.lambda_bound->dim}};
        if (res.lambda_bound->certificate) {
            lb["witnesses"] = {
                {"certificate", certificate_to_json(*res.lambda_bound->certificate)}};
        }
    } else {
        lb["status"] = verdict_str(Verdict::NotApplicable);
    }
    checks.push_back(std::move(lb));

    auto count_bound_json = [](const char* name, const VertexCountBoundReport& r) {
        return Json{{"name", name},
                    {"status", verdict_str(r.status)},
                    {"values",
                     {{"cardinality", r.cardinality},
                      {"dim", r.dim},
                      {"bound", scalar_str(r.bound)}}}};
    };
    checks.push_back(
        count_bound_json("vertex_count_bound_edge_antipodal", res.count_bound_edge_antipodal));
    checks.push_back(
        count_bound_json("vertex_count_bound_subequilateral", res.count_bound_subequilateral));

    checks.push_back({{"name", "euclidean_simplex"},
                      {"status", verdict_str(res.euclidean_simplex.status)},
                      {"values",
                       {{"subequilateral_l2", res.euclidean_simplex.subequilateral_l2},
                        {"simplex_cardinality", res.euclidean_simplex.simplex_cardinality},
                        {"equidistant", res.euclidean_simplex.equidistant}}}});

    checks.push_back({{"name", "equidistant_cardinality_bound"},
                      {"status", verdict_str(res.equidistant_cardinality)}});

    Json bridge{{"name", "relative_norm_bridge"},
                {"status", verdict_str(res.bridge.status)},
                {"values", Json::object()}};
    bridge["values"]["edge_antipodal"] = res.bridge.edge_antipodal;
    if (res.bridge.subequilateral_relative) {
        bridge["values"]["subequilateral_relative"] = *res.bridge.subequilateral_relative;
        bridge["values"]["relative_diameter_one"] = *res.bridge.relative_diameter_one;
    }
    if (res.bridge.subequilateral_supplied) {
        bridge["values"]["subequilateral_supplied"] = *res.bridge.subequilateral_supplied;
    }
    if (res.bridge.edge_antipodal_from_subequilateral) {
        bridge["values"]["edge_antipodal_from_subequilateral"] =
            *res.bridge.edge_antipodal_from_subequilateral;
    }
    checks.push_back(std::move(bridge));

    Json order{{"name", "lambda_order"}};
    if (res.lambda_order) {
        order["status"] = "true";
        order["values"] = {
            {"ratio_squared_supplied", scalar_str(res.lambda_order->under_norm.ratio_squared)},
            {"ratio_squared_relative",
             scalar_str(res.lambda_order->under_relative.ratio_squared)},
            {"supplied_le_relative", res.lambda_order->norm_le_relative},
            {"relative_le_supplied", res.lambda_order->relative_le_norm}};
    } else {
        order["status"] = verdict_str(Verdict::NotApplicable);
    }
    checks.push_back(std::move(order));

    return Json{{"schema", "antipod-report-v1"},
                {"norm", res.norm_name},
                {"instance", instance_to_json(v, std::nullopt, std::nullopt)},
                {"checks", std::move(checks)}};
}

Json search_report_to_json(const SearchReport& rep) {
    Json history = Json::array();
    for (const auto& h : rep.history) {
        history.push_back(
            {{"restart", h.restart}, {"iteration", h.iteration}, {"score", scalar_str(h.score)}});
    }
    return Json{
        {"schema", "antipod-probe-v1"},
        {"config",
         {{"dim", rep.config.dim},
          {"objective", objective_name(rep.config.objective)},
          {"iterations", rep.config.iterations},
          {"seed", rep.config.seed},
          {"restarts", rep.config.restarts},
          {"height_bound", rep.config.height_bound},
          {"threads", rep.config.threads},
          {"weights",
           {{"add_point", rep.config.weights.add_point},
            {"delete_point", rep.config.weights.delete_point},
            {"perturb_point", rep.config.weights.perturb_point}}}}},
        {"best_instance", instance_to_json(*rep.best, std::nullopt, std::nullopt)},
        {"best_score", scalar_str(rep.best_score)},
        {"best_restart", rep.best_restart},
        {"history", std::move(history)},
        {"vertex_bound", scalar_str(rep.vertex_bound)},
        {"lambda_ratio_bound", scalar_str(rep.lambda_ratio_bound)},
        {"bound_exceeded", rep.bound_exceeded}};
}

}  // namespace antipod
