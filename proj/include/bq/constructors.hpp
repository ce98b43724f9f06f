#pragma once

#include "bq/operators.hpp"

namespace bq {

/// Parameters of the special weight family
///   psi1 = a1 e1 + a2 e2 + a3 e3 + a4 e4,
///   psi2 = lambda a1 e1 + mu a2 e2 + mu a3 e3 + lambda a4 e4,
///   psi3 = theta a1 e1 + vartheta a2 e2 + vartheta a3 e3 + theta a4 e4,
///   psi4 = nu a1 e1 + eta a2 e2 + eta a3 e3 + nu a4 e4,
/// admissible only when a1*a2 != a3*a4.
struct SpecialPsiParams {
    std::array<Complex, 4> alpha;
    Complex lambda, mu, theta, vartheta, nu, eta;
};

/// Throws DegenerateParams when |a1 a2 - a3 a4| <= 1e-12.
void validate(const SpecialPsiParams& p);

/// Solution of the Cartan form of the Cauchy-Fueter equation
///   e2 df/dz1 + e1 df/dz2 - e4 df/dz3 - e3 df/dz4 = 0
/// built from two free holomorphic generators:
///   f = g1(z2,z3) e1 + g2(z1,z4) e2
///     + (z3 dg2/dz1 + z2 dg2/dz4) e3 + (z4 dg1/dz2 + z1 dg1/dz3) e4.
/// g1 must not mention z1 or z4, g2 must not mention z2 or z3 (checked on
/// the trees as written); violations throw VariableViolation naming the
/// variable.
BqFunction cf_solution(const HoloExpr& g1, const HoloExpr& g2);

/// Convert between the two presentations of the same function: the
/// coefficient vector changes basis and the variables change coordinates
/// (z1 = t0 - i t1, z2 = t0 + i t1, z3 = -i t2 - t3, z4 = -i t2 + t3).
/// The two maps compose to the identity after normalization.
BqFunction standard_to_cartan_vars(const BqFunction& f);
BqFunction cartan_to_standard_vars(const BqFunction& f);

/// Apply only the coefficient-basis change to the component vector,
/// leaving variables untouched.
std::array<HoloExpr, 4> components_to_cartan(const std::array<HoloExpr, 4>& standard);
std::array<HoloExpr, 4> components_to_standard(const std::array<HoloExpr, 4>& cartan);

/// Weights of the special family above.
PsiWeights special_psi(const SpecialPsiParams& p);

/// General solution for the special weight family, assembled from four
/// generators evaluated on the characteristic variables
///   zt2 = lambda z1 - z2, zt3 = theta z1 - z3, zt4 = nu z1 - z4   (g1, g3)
///   zz2 = mu z1 - z2, zz3 = vartheta z1 - z3, zz4 = eta z1 - z4   (g2, g4):
///   f = g1(zt.) e1 + g2(zz.) e2 + g3(zt.) e3 + g4(zz.) e4.
/// Generators are written in slot variables v1..v3 (slot i receives the
/// i-th characteristic variable); mentioning v4 throws VariableViolation.
BqFunction special_solution(const SpecialPsiParams& p, const HoloExpr& g1, const HoloExpr& g2,
                            const HoloExpr& g3, const HoloExpr& g4);

/// The three characteristic substitutions used for generator slot i = 1..3;
/// tilde selects the (lambda, theta, nu) family, otherwise (mu, vartheta, eta).
VarMap characteristic_map(const SpecialPsiParams& p, bool tilde);

/// Bicomplex Cauchy-Riemann weights (e2, -e1, 0, 0). Under the left Dirac
/// operator these express e2 df/dz1 = e1 df/dz2; the same quadruple under
/// the right operator expresses the right-sided analog.
PsiWeights bc_psi(Side side);

/// Weights (e2, e1, -e4, -e3): the Cauchy-Fueter operator in Cartan
/// variables equals exactly twice the left Dirac operator with these
/// weights.
PsiWeights cauchy_fueter_cartan_psi();

}  // namespace bq
