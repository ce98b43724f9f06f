#include "bq/constructors.hpp"

#include <cmath>
#include <string>

namespace bq {

namespace {

const Complex kI(0, 1);

void forbid_variable(const HoloExpr& g, int v, const char* who) {
    if (depends_on(g, v)) {
        throw VariableViolation(std::string(who) + " must not depend on variable " +
                                std::to_string(v));
    }
}

}  // namespace

void validate(const SpecialPsiParams& p) {
    if (std::abs(p.alpha[0] * p.alpha[1] - p.alpha[2] * p.alpha[3]) <= 1e-12) {
        throw DegenerateParams("special weights require alpha1*alpha2 != alpha3*alpha4");
    }
}

BqFunction cf_solution(const HoloExpr& g1, const HoloExpr& g2) {
    forbid_variable(g1, 1, "g1");
    forbid_variable(g1, 4, "g1");
    forbid_variable(g2, 2, "g2");
    forbid_variable(g2, 3, "g2");

    const HoloExpr z1 = HoloExpr::var(1), z2 = HoloExpr::var(2);
    const HoloExpr z3 = HoloExpr::var(3), z4 = HoloExpr::var(4);
    return {Basis::Cartan,
            {g1, g2, z3 * diff(g2, 1) + z2 * diff(g2, 4), z4 * diff(g1, 2) + z1 * diff(g1, 3)}};
}

std::array<HoloExpr, 4> components_to_cartan(const std::array<HoloExpr, 4>& s) {
    return {s[0] - kI * s[1], s[0] + kI * s[1], Complex(-1) * kI * s[2] - s[3],
            Complex(-1) * kI * s[2] + s[3]};
}

std::array<HoloExpr, 4> components_to_standard(const std::array<HoloExpr, 4>& c) {
    return {Complex(0.5) * (c[0] + c[1]), Complex(0.5) * kI * (c[0] - c[1]),
            Complex(0.5) * kI * (c[2] + c[3]), Complex(0.5) * (c[3] - c[2])};
}

BqFunction standard_to_cartan_vars(const BqFunction& f) {
    if (f.basis == Basis::Cartan) return f;
    // t0 = (z1+z2)/2, t1 = i(z1-z2)/2, t2 = i(z3+z4)/2, t3 = (z4-z3)/2.
    const HoloExpr z1 = HoloExpr::var(1), z2 = HoloExpr::var(2);
    const HoloExpr z3 = HoloExpr::var(3), z4 = HoloExpr::var(4);
    const VarMap t_of_z{{1, Complex(0.5) * (z1 + z2)},
                        {2, Complex(0.5) * kI * (z1 - z2)},
                        {3, Complex(0.5) * kI * (z3 + z4)},
                        {4, Complex(0.5) * (z4 - z3)}};
    BqFunction out{Basis::Cartan, components_to_cartan(f.comp)};
    for (auto& c : out.comp) c = normalize(substitute(c, t_of_z));
    return out;
}

BqFunction cartan_to_standard_vars(const BqFunction& f) {
    if (f.basis == Basis::Standard) return f;
    const HoloExpr t0 = HoloExpr::var(1), t1 = HoloExpr::var(2);
    const HoloExpr t2 = HoloExpr::var(3), t3 = HoloExpr::var(4);
    const VarMap z_of_t{{1, t0 - kI * t1},
                        {2, t0 + kI * t1},
                        {3, Complex(-1) * kI * t2 - t3},
                        {4, Complex(-1) * kI * t2 + t3}};
    BqFunction out{Basis::Standard, components_to_standard(f.comp)};
    for (auto& c : out.comp) c = normalize(substitute(c, z_of_t));
    return out;
}

PsiWeights special_psi(const SpecialPsiParams& p) {
    validate(p);
    const auto& a = p.alpha;
    auto weight = [&](Complex left, Complex right) {
        return Biquaternion(Basis::Cartan,
                            {left * a[0], right * a[1], right * a[2], left * a[3]});
    };
    return PsiWeights(Biquaternion(Basis::Cartan, a), weight(p.lambda, p.mu),
                      weight(p.theta, p.vartheta), weight(p.nu, p.eta));
}

VarMap characteristic_map(const SpecialPsiParams& p, bool tilde) {
    const HoloExpr z1 = HoloExpr::var(1), z2 = HoloExpr::var(2);
    const HoloExpr z3 = HoloExpr::var(3), z4 = HoloExpr::var(4);
    if (tilde) {
        return {{1, p.lambda * z1 - z2}, {2, p.theta * z1 - z3}, {3, p.nu * z1 - z4}};
    }
    return {{1, p.mu * z1 - z2}, {2, p.vartheta * z1 - z3}, {3, p.eta * z1 - z4}};
}

BqFunction special_solution(const SpecialPsiParams& p, const HoloExpr& g1, const HoloExpr& g2,
                            const HoloExpr& g3, const HoloExpr& g4) {
    validate(p);
    const HoloExpr* gs[4] = {&g1, &g2, &g3, &g4};
    for (int s = 0; s < 4; ++s) {
        forbid_variable(*gs[s], 4, s == 0 ? "g1" : s == 1 ? "g2" : s == 2 ? "g3" : "g4");
    }
    const VarMap tilde = characteristic_map(p, true);
    const VarMap plain = characteristic_map(p, false);
    return {Basis::Cartan,
            {substitute(g1, tilde), substitute(g2, plain), substitute(g3, tilde),
             substitute(g4, plain)}};
}

PsiWeights bc_psi(Side) {
    // The quadruple is the same for both sides; the side only selects which
    // Dirac operator it is meant to feed.
    return PsiWeights(Biquaternion::unit(Basis::Cartan, 1), -Biquaternion::unit(Basis::Cartan, 0),
                      Biquaternion::zero(Basis::Cartan), Biquaternion::zero(Basis::Cartan));
}

PsiWeights cauchy_fueter_cartan_psi() {
    return PsiWeights(Biquaternion::unit(Basis::Cartan, 1), Biquaternion::unit(Basis::Cartan, 0),
                      -Biquaternion::unit(Basis::Cartan, 3), -Biquaternion::unit(Basis::Cartan, 2));
}

}  // namespace bq
