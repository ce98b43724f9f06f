#include "bq/serialization.hpp"

#include "bq/parser.hpp"

namespace bq {

namespace {

const nlohmann::json& require_field(const nlohmann::json& j, const char* key,
                                    const std::string& path) {
    if (!j.is_object()) throw SchemaError("expected an object", path);
    auto it = j.find(key);
    if (it == j.end()) throw SchemaError("missing field '" + std::string(key) + "'", path);
    return *it;
}

Basis basis_from_json(const nlohmann::json& j, const std::string& path) {
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "standard") return Basis::Standard;
        if (s == "cartan") return Basis::Cartan;
    }
    throw SchemaError("expected \"standard\" or \"cartan\"", path);
}

std::array<Complex, 4> complex4_from_json(const nlohmann::json& j, const std::string& path) {
    if (!j.is_array() || j.size() != 4) throw SchemaError("expected 4 entries", path);
    std::array<Complex, 4> out;
    for (std::size_t k = 0; k < 4; ++k) {
        out[k] = complex_from_json(j[k], path + "[" + std::to_string(k) + "]");
    }
    return out;
}

}  // namespace

Json complex_to_json(Complex c) {
    return Json::array({c.real(), c.imag()});
}

Complex complex_from_json(const nlohmann::json& j, const std::string& path) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw SchemaError("expected a complex number as [re, im]", path);
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

Json biquaternion_to_json(const Biquaternion& a) {
    Json out;
    out["basis"] = basis_name(a.basis());
    Json c = Json::array();
    for (int k = 0; k < 4; ++k) c.push_back(complex_to_json(a[k]));
    out["c"] = std::move(c);
    return out;
}

Biquaternion biquaternion_from_json(const nlohmann::json& j, const std::string& path) {
    const Basis basis = basis_from_json(require_field(j, "basis", path), path + ".basis");
    return {basis, complex4_from_json(require_field(j, "c", path), path + ".c")};
}

Json function_to_json(const BqFunction& f) {
    Json out;
    out["basis"] = basis_name(f.basis);
    Json comps = Json::array();
    for (int s = 0; s < 4; ++s) comps.push_back(print_expr(f.comp[s], f.basis));
    out["components"] = std::move(comps);
    return out;
}

BqFunction function_from_json(const nlohmann::json& j, const std::string& path) {
    const Basis basis = basis_from_json(require_field(j, "basis", path), path + ".basis");
    const auto& comps = require_field(j, "components", path);
    if (!comps.is_array() || comps.size() != 4) {
        throw SchemaError("expected 4 expression strings", path + ".components");
    }
    BqFunction f{basis, {}};
    for (std::size_t s = 0; s < 4; ++s) {
        const std::string where = path + ".components[" + std::to_string(s) + "]";
        if (!comps[s].is_string()) throw SchemaError("expected a string", where);
        try {
            f.comp[s] = parse_expr(comps[s].get<std::string>(), basis);
        } catch (const WrongCoordinateSystem& e) {
            throw WrongCoordinateSystem(where + ": " + e.what(), e.position);
        } catch (const SyntaxError& e) {
            throw SyntaxError(where + ": " + e.what(), e.position);
        }
    }
    return f;
}

Json psi_to_json(const PsiWeights& psi) {
    Json out = Json::array();
    for (int j = 0; j < 4; ++j) out.push_back(biquaternion_to_json(psi[j]));
    return out;
}

Json report_to_json(const ResidualReport& r) {
    Json out;
    out["symbolic_zero"] = r.symbolic_zero;
    out["max_abs"] = r.max_abs;
    Json points = Json::array();
    for (const auto& sample : r.per_point) {
        Json entry;
        Json point = Json::array();
        Json residual = Json::array();
        for (int s = 0; s < 4; ++s) {
            point.push_back(complex_to_json(sample.point[s]));
            residual.push_back(complex_to_json(sample.residual[s]));
        }
        entry["point"] = std::move(point);
        entry["residual"] = std::move(residual);
        points.push_back(std::move(entry));
    }
    out["points"] = std::move(points);
    return out;
}

BasisMatrix basis_matrix_from_json(const nlohmann::json& j, const std::string& path) {
    const auto row = [&](const char* name) {
        return complex4_from_json(require_field(j, name, path), path + "." + name);
    };
    return BasisMatrix(row("k"), row("m"), row("n"), row("r"));
}

}  // namespace bq
