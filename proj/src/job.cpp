#include "bq/job.hpp"

#include <fstream>

namespace bq {

namespace {

SpecialPsiParams special_from_json(const nlohmann::json& j, const std::string& path) {
    if (!j.is_object()) throw SchemaError("expected an object", path);
    SpecialPsiParams p{};
    auto alpha = j.find("alpha");
    if (alpha == j.end()) throw SchemaError("missing field 'alpha'", path);
    if (!alpha->is_array() || alpha->size() != 4) {
        throw SchemaError("expected 4 entries", path + ".alpha");
    }
    for (std::size_t k = 0; k < 4; ++k) {
        p.alpha[k] = complex_from_json((*alpha)[k], path + ".alpha[" + std::to_string(k) + "]");
    }
    const auto scalar = [&](const char* name) -> Complex {
        auto it = j.find(name);
        if (it == j.end()) return Complex(0);
        return complex_from_json(*it, path + "." + name);
    };
    p.lambda = scalar("lambda");
    p.mu = scalar("mu");
    p.theta = scalar("theta");
    p.vartheta = scalar("vartheta");
    p.nu = scalar("nu");
    p.eta = scalar("eta");
    for (auto it = j.begin(); it != j.end(); ++it) {
        static const char* known[] = {"alpha", "lambda", "mu", "theta", "vartheta", "nu", "eta"};
        bool ok = false;
        for (const char* k : known) ok = ok || it.key() == k;
        if (!ok) throw SchemaError("unknown field '" + it.key() + "'", path);
    }
    validate(p);
    return p;
}

}  // namespace

Job job_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw SchemaError("expected an object", "job");
    Job job;

    auto psi = j.find("psi");
    if (psi == j.end()) throw SchemaError("missing field 'psi'", "job");
    if (psi->is_string()) {
        const auto s = psi->get<std::string>();
        if (s == "cf") {
            job.psi_kind = PsiKind::CauchyFueter;
        } else if (s == "bc-left") {
            job.psi_kind = PsiKind::BcLeft;
        } else if (s == "bc-right") {
            job.psi_kind = PsiKind::BcRight;
        } else {
            throw SchemaError("unknown weight name \"" + s + "\"", "job.psi");
        }
    } else if (psi->is_object() && psi->contains("special")) {
        job.psi_kind = PsiKind::Special;
        job.special = special_from_json((*psi)["special"], "job.psi.special");
    } else if (psi->is_object() && psi->contains("explicit")) {
        const auto& arr = (*psi)["explicit"];
        if (!arr.is_array() || arr.size() != 4) {
            throw SchemaError("expected 4 biquaternions", "job.psi.explicit");
        }
        std::array<Biquaternion, 4> w;
        for (std::size_t k = 0; k < 4; ++k) {
            w[k] = to_cartan(biquaternion_from_json(
                arr[k], "job.psi.explicit[" + std::to_string(k) + "]"));
        }
        job.psi_kind = PsiKind::Explicit;
        job.explicit_psi = PsiWeights(w);
    } else {
        throw SchemaError("expected \"cf\", \"bc-left\", \"bc-right\", {\"special\": ...} or {\"explicit\": ...}",
                          "job.psi");
    }

    auto f = j.find("f");
    if (f == j.end()) throw SchemaError("missing field 'f'", "job");
    job.f = function_from_json(*f, "job.f");

    job.side = job.psi_kind == PsiKind::BcRight ? Side::Right : Side::Left;
    if (auto side = j.find("side"); side != j.end()) {
        const auto s = side->is_string() ? side->get<std::string>() : std::string();
        if (s == "left") {
            job.side = Side::Left;
        } else if (s == "right") {
            job.side = Side::Right;
        } else {
            throw SchemaError("expected \"left\" or \"right\"", "job.side");
        }
    }
    return job;
}

Job load_job(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open file", path);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw SchemaError(std::string("invalid JSON: ") + e.what(), path);
    }
    return job_from_json(j);
}

std::optional<PsiWeights> job_psi(const Job& job) {
    switch (job.psi_kind) {
        case PsiKind::CauchyFueter: return std::nullopt;
        case PsiKind::BcLeft: return bc_psi(Side::Left);
        case PsiKind::BcRight: return bc_psi(Side::Right);
        case PsiKind::Special: return special_psi(*job.special);
        case PsiKind::Explicit: return *job.explicit_psi;
    }
    return std::nullopt;
}

BqFunction apply_job_operator(const Job& job) {
    if (job.psi_kind == PsiKind::CauchyFueter) {
        return cauchy_fueter(cartan_to_standard_vars(job.f));
    }
    const BqFunction f =
        job.f.basis == Basis::Cartan ? job.f : standard_to_cartan_vars(job.f);
    return apply_dirac(*job_psi(job), f, job.side);
}

}  // namespace bq
