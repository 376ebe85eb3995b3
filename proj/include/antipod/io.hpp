#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "antipod/analysis.hpp"
#include "antipod/prober.hpp"

namespace antipod {

using Json = nlohmann::json;

// On-disk vertex-set document. All coordinates are exact rational strings
// ("3", "-7/2"); affine constraint rows have ambient_dim coefficients
// followed by the right-hand side.
struct VertexFileData {
    std::size_t ambient_dim = 0;
    std::vector<Vec> vertices;
    std::vector<AffineConstraint> constraints;
    std::optional<std::string> recommended_norm;
    std::optional<std::string> family;
};

VertexFileData vertex_file_from_json(const Json& doc);
Json vertex_file_to_json(const VertexFileData& data);

// Reads a vertex file; report files are accepted too (their embedded
// instance is extracted), so any analysis output can be re-ingested.
VertexFileData load_vertex_file(const std::string& path);

void save_json(const std::string& path, const Json& doc);

VertexSet to_vertex_set(const VertexFileData& data);
VertexFileData from_vertex_set(const VertexSet& v,
                               std::optional<std::string> recommended_norm,
                               std::optional<std::string> family);

// FNV-1a over the canonical instance serialization.
std::string instance_digest(const VertexSet& v);

Json norm_value_to_json(const NormValue& v);
Json lambda_to_json(const LambdaValue& lam);
Json certificate_to_json(const NonadjacentPairCertificate& cert);
Json instance_to_json(const VertexSet& v, std::optional<std::string> recommended_norm,
                      std::optional<std::string> family);
Json analysis_to_json(const VertexSet& v, const AnalysisResult& res);
Json search_report_to_json(const SearchReport& rep);

}  // namespace antipod
