#pragma once

#include <array>
#include <span>
#include <vector>

#include "bq/algebra.hpp"
#include "bq/holoexpr.hpp"

namespace bq {

/// Which side a weighted Dirac operator multiplies its weights on.
enum class Side { Left, Right };

/// Ordered weight quadruple (psi1..psi4) of a weighted Dirac operator.
/// All four weights are kept in the Cartan basis. Coefficient vectors are
/// traditionally named alpha, beta, gamma, delta for psi1..psi4.
class PsiWeights {
public:
    PsiWeights(Biquaternion psi1, Biquaternion psi2, Biquaternion psi3, Biquaternion psi4);
    explicit PsiWeights(std::array<Biquaternion, 4> psi);

    const Biquaternion& operator[](int j) const { return w_[static_cast<std::size_t>(j)]; }
    const std::array<Biquaternion, 4>& weights() const { return w_; }

private:
    std::array<Biquaternion, 4> w_;
};

/// H(C)-valued function with holomorphic components: four expression trees
/// against the tagged basis. Component variables read in the coordinate
/// system matching the tag (z1..z4 for Cartan, t0..t3 for Standard).
struct BqFunction {
    Basis basis = Basis::Cartan;
    std::array<HoloExpr, 4> comp;
};

BqFunction normalized(const BqFunction& f, double drop_tol = kNormalizeTol);
bool is_zero(const BqFunction& f, double drop_tol = kNormalizeTol);
bool norm_equal(const BqFunction& a, const BqFunction& b, double drop_tol = kNormalizeTol);
Biquaternion eval_at(const BqFunction& f, const Point4& p);

/// Left weighted Dirac operator: sum_j psi_j * df/dz_j with the weights
/// multiplied on the left. Components are assembled from the explicit
/// componentwise expansion of the Cartan multiplication table
///   component e1 of psi*g = w1 g1 + w3 g4,  e2 = w2 g2 + w4 g3,
///   e3 = w1 g3 + w3 g2,                     e4 = w2 g4 + w4 g1,
/// which keeps the code auditable line by line; the generic table-driven
/// product is exercised against it in the tests. Requires f Cartan.
BqFunction left_dirac(const PsiWeights& psi, const BqFunction& f);

/// Right weighted Dirac operator: sum_j (df/dz_j) * psi_j.
BqFunction right_dirac(const PsiWeights& psi, const BqFunction& f);

BqFunction apply_dirac(const PsiWeights& psi, const BqFunction& f, Side side);

/// Cauchy-Fueter operator df/dt0 + I df/dt1 + J df/dt2 + K df/dt3 on a
/// standard-basis function of t0..t3.
BqFunction cauchy_fueter(const BqFunction& f);

/// Componentwise Laplacian sum_s d^2 f / dv_s^2 in the function's own
/// coordinates; involves no quaternionic multiplication and keeps the tag.
BqFunction laplacian(const BqFunction& f);

/// Weights that re-express the Cartan-weighted Dirac operator in the
/// coordinates of the basis {i1..i4} described by M: psi_s is the Gram-type
/// sum  i1(k_s k_1 + m_s m_1 + n_s n_1 + r_s r_1) + ... + i4(...),
/// computed against the i-basis and returned converted to the Cartan tag.
PsiWeights induced_psi(const BasisMatrix& M);

struct ResidualSample {
    Point4 point;
    std::array<Complex, 4> residual;
};

struct ResidualReport {
    bool symbolic_zero = false;
    double max_abs = 0.0;  // max over points and components of |coefficient|
    std::vector<ResidualSample> per_point;
};

/// Point evaluation strategy for residual reports. Per-point results are
/// independent and the reduction is order-insensitive, so both modes
/// produce identical reports; Parallel spreads the points across OpenMP
/// threads when available.
enum class EvalMode { Serial, Parallel };

/// Evaluate an already-computed residual function over sample points.
ResidualReport residual_report(const BqFunction& residual, std::span<const Point4> points,
                               EvalMode mode = EvalMode::Serial);

/// Apply the chosen Dirac operator symbolically and sample the result.
/// Requires f Cartan and a nonempty point list.
ResidualReport residual_norm(const PsiWeights& psi, const BqFunction& f, Side side,
                             std::span<const Point4> points, EvalMode mode = EvalMode::Serial);

}  // namespace bq
