#pragma once

#include <optional>
#include <string>

#include "bq/constructors.hpp"
#include "bq/serialization.hpp"

namespace bq {

enum class PsiKind { CauchyFueter, BcLeft, BcRight, Special, Explicit };

/// A validated verification job: weight choice, candidate function and the
/// operator side to apply. Schema:
///   {
///     "psi": "cf" | "bc-left" | "bc-right"
///            | {"special": {"alpha": [[re,im] x4], "lambda": [re,im], ...}}
///            | {"explicit": [4 biquaternion objects]},
///     "f": { "basis": "standard"|"cartan", "components": [4 strings] },
///     "side": "left" | "right"              // optional
///   }
/// The special scalars lambda, mu, theta, vartheta, nu, eta default to 0
/// when absent. "side" defaults to right for "bc-right" and left otherwise.
struct Job {
    PsiKind psi_kind = PsiKind::CauchyFueter;
    std::optional<SpecialPsiParams> special;
    std::optional<PsiWeights> explicit_psi;
    BqFunction f;
    Side side = Side::Left;
};

Job job_from_json(const nlohmann::json& j);
Job load_job(const std::string& path);

/// Apply the operator a job describes and return the symbolic residual.
/// "cf" applies the Cauchy-Fueter operator to the standard-variables
/// presentation of f (Cartan-tagged input is converted first); every other
/// kind applies the chosen weighted Dirac operator in Cartan variables.
BqFunction apply_job_operator(const Job& job);

/// Weights named by the job; absent for the "cf" kind, whose operator is
/// not expressed through PsiWeights here.
std::optional<PsiWeights> job_psi(const Job& job);

}  // namespace bq
