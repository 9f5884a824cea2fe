#include "isolyap/spec_json.hpp"

#include <fstream>

namespace isolyap {
namespace ensembles {

using nlohmann::json;

json to_json(const EnsembleSpec& spec) {
    json rows = json::array();
    for (const auto& r : spec.rows()) {
        switch (r.kind()) {
        case RowKind::Gaussian: rows.push_back({{"type", "gaussian"}, {"sigma", r.sigma()}}); break;
        case RowKind::BetaOne:  rows.push_back({{"type", "beta1"}, {"nu", r.nu()}}); break;
        case RowKind::BetaTwo:  rows.push_back({{"type", "beta2"}, {"omega", r.omega()}}); break;
        }
    }
    return {{"beta", spec.field().beta()}, {"n", spec.n()}, {"rows", rows}};
}

json to_json(const ShiftedGaussianSpec& spec) {
    return {{"beta", spec.field().beta()},
            {"n", spec.n()},
            {"c", spec.c()},
            {"sigma", spec.sigma()}};
}

json to_json(const AnySpec& spec) {
    return std::visit([](const auto& s) { return to_json(s); }, spec);
}

namespace {

RowDistribution row_from_json(const json& j) {
    if (!j.is_object() || !j.contains("type"))
        throw std::invalid_argument("row: expected an object with a \"type\" field");
    const std::string type = j.at("type").get<std::string>();
    if (type == "gaussian") return RowDistribution::gaussian(j.at("sigma").get<double>());
    if (type == "beta1") return RowDistribution::beta_one(j.at("nu").get<double>());
    if (type == "beta2") return RowDistribution::beta_two(j.at("omega").get<double>());
    throw std::invalid_argument("row: unknown type \"" + type + "\"");
}

} // namespace

EnsembleSpec ensemble_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("ensemble spec: expected a JSON object");
    const FieldIndex field(j.at("beta").get<int>());
    const int n = j.at("n").get<int>();
    const json& rows_j = j.at("rows");
    if (!rows_j.is_array() || static_cast<int>(rows_j.size()) != n)
        throw std::invalid_argument("ensemble spec: \"rows\" must be an array of length n");
    std::vector<RowDistribution> rows;
    rows.reserve(n);
    for (const auto& r : rows_j) rows.push_back(row_from_json(r));
    return {field, std::move(rows)};
}

ShiftedGaussianSpec shifted_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("shifted spec: expected a JSON object");
    return {FieldIndex(j.at("beta").get<int>()), j.at("n").get<int>(),
            j.at("c").get<double>(), j.at("sigma").get<double>()};
}

AnySpec spec_from_json(const json& j) {
    if (j.is_object() && j.contains("c")) return shifted_from_json(j);
    return ensemble_from_json(j);
}

AnySpec spec_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open spec file: " + path);
    json j;
    in >> j;
    return spec_from_json(j);
}

} // namespace ensembles
} // namespace isolyap
