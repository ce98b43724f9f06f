#pragma once

#include <string>

#include <json.hpp>

#include "bq/algebra.hpp"
#include "bq/operators.hpp"

namespace bq {

/// Output documents use ordered_json so field order is stable and runs are
/// byte-reproducible.
using Json = nlohmann::ordered_json;

Json complex_to_json(Complex c);
Complex complex_from_json(const nlohmann::json& j, const std::string& path);

/// { "basis": "standard"|"cartan", "c": [[re,im] x4] }
Json biquaternion_to_json(const Biquaternion& a);
Biquaternion biquaternion_from_json(const nlohmann::json& j, const std::string& path);

/// { "basis": ..., "components": [4 expression strings] }
Json function_to_json(const BqFunction& f);
BqFunction function_from_json(const nlohmann::json& j, const std::string& path);

/// [ psi1, psi2, psi3, psi4 ] as biquaternion objects (Cartan tagged).
Json psi_to_json(const PsiWeights& psi);

/// { "symbolic_zero": bool, "max_abs": float, "points": [...] }
Json report_to_json(const ResidualReport& r);

/// { "k": [[re,im] x4], "m": ..., "n": ..., "r": ... }
BasisMatrix basis_matrix_from_json(const nlohmann::json& j, const std::string& path);

}  // namespace bq
