#include "bq/operators.hpp"

#include <cmath>

namespace bq {

namespace {

void require_basis(const BqFunction& f, Basis want, const char* op) {
    if (f.basis != want) {
        throw BasisMismatch(std::string(op) + ": function must be tagged " + basis_name(want) +
                            " (convert variables and components first)");
    }
}

}  // namespace

PsiWeights::PsiWeights(Biquaternion psi1, Biquaternion psi2, Biquaternion psi3,
                       Biquaternion psi4)
    : PsiWeights(std::array<Biquaternion, 4>{std::move(psi1), std::move(psi2), std::move(psi3),
                                             std::move(psi4)}) {}

PsiWeights::PsiWeights(std::array<Biquaternion, 4> psi) : w_(std::move(psi)) {
    for (const auto& w : w_) {
        if (w.basis() != Basis::Cartan) {
            throw BasisMismatch("PsiWeights: all weights must be tagged cartan");
        }
    }
}

BqFunction normalized(const BqFunction& f, double drop_tol) {
    BqFunction out{f.basis, {}};
    for (int s = 0; s < 4; ++s) out.comp[s] = normalize(f.comp[s], drop_tol);
    return out;
}

bool is_zero(const BqFunction& f, double drop_tol) {
    for (const auto& c : f.comp) {
        if (!is_zero(c, drop_tol)) return false;
    }
    return true;
}

bool norm_equal(const BqFunction& a, const BqFunction& b, double drop_tol) {
    if (a.basis != b.basis) {
        throw BasisMismatch("norm_equal: functions carry different basis tags");
    }
    for (int s = 0; s < 4; ++s) {
        if (!norm_equal(a.comp[s], b.comp[s], drop_tol)) return false;
    }
    return true;
}

Biquaternion eval_at(const BqFunction& f, const Point4& p) {
    std::array<Complex, 4> c;
    for (int s = 0; s < 4; ++s) c[s] = eval(f.comp[s], p);
    return {f.basis, c};
}

BqFunction left_dirac(const PsiWeights& psi, const BqFunction& f) {
    require_basis(f, Basis::Cartan, "left_dirac");
    BqFunction out{Basis::Cartan, {}};
    for (int j = 0; j < 4; ++j) {
        const auto& w = psi[j].coeffs();
        const int v = j + 1;
        out.comp[0] = out.comp[0] + diff(w[0] * f.comp[0] + w[2] * f.comp[3], v);
        out.comp[1] = out.comp[1] + diff(w[1] * f.comp[1] + w[3] * f.comp[2], v);
        out.comp[2] = out.comp[2] + diff(w[0] * f.comp[2] + w[2] * f.comp[1], v);
        out.comp[3] = out.comp[3] + diff(w[1] * f.comp[3] + w[3] * f.comp[0], v);
    }
    return out;
}

BqFunction right_dirac(const PsiWeights& psi, const BqFunction& f) {
    require_basis(f, Basis::Cartan, "right_dirac");
    // Same table with the factor order reversed:
    //   component e1 of g*w = w1 g1 + w4 g3,  e2 = w2 g2 + w3 g4,
    //   e3 = w3 g1 + w2 g3,                   e4 = w4 g2 + w1 g4.
    BqFunction out{Basis::Cartan, {}};
    for (int j = 0; j < 4; ++j) {
        const auto& w = psi[j].coeffs();
        const int v = j + 1;
        out.comp[0] = out.comp[0] + diff(w[0] * f.comp[0] + w[3] * f.comp[2], v);
        out.comp[1] = out.comp[1] + diff(w[1] * f.comp[1] + w[2] * f.comp[3], v);
        out.comp[2] = out.comp[2] + diff(w[2] * f.comp[0] + w[1] * f.comp[2], v);
        out.comp[3] = out.comp[3] + diff(w[3] * f.comp[1] + w[0] * f.comp[3], v);
    }
    return out;
}

BqFunction apply_dirac(const PsiWeights& psi, const BqFunction& f, Side side) {
    return side == Side::Left ? left_dirac(psi, f) : right_dirac(psi, f);
}

BqFunction cauchy_fueter(const BqFunction& f) {
    require_basis(f, Basis::Standard, "cauchy_fueter");
    // Standard products, entry = sign * (index + 1) over (1, I, J, K);
    // the same exact lookup the algebra uses.
    static constexpr int kStd[4][4] = {
        {+1, +2, +3, +4},
        {+2, -1, +4, -3},
        {+3, -4, -1, +2},
        {+4, +3, -2, -1},
    };
    BqFunction out{Basis::Standard, {}};
    for (int j = 0; j < 4; ++j) {
        for (int s = 0; s < 4; ++s) {
            const int e = kStd[j][s];
            const HoloExpr d = diff(f.comp[s], j + 1);
            const int target = std::abs(e) - 1;
            out.comp[target] = out.comp[target] + (e > 0 ? d : -d);
        }
    }
    return out;
}

BqFunction laplacian(const BqFunction& f) {
    BqFunction out{f.basis, {}};
    for (int s = 0; s < 4; ++s) {
        for (int v = 1; v <= 4; ++v) {
            out.comp[s] = out.comp[s] + diff(diff(f.comp[s], v), v);
        }
    }
    return out;
}

PsiWeights induced_psi(const BasisMatrix& M) {
    // Rows k, m, n, r in the traditional order.
    const Mat4& rows = M.rows();
    // G[s][j] = k_s k_j + m_s m_j + n_s n_j + r_s r_j gives psi_s expressed
    // against the i-basis: psi_s = sum_j G[s][j] i_j.
    Mat4 gram{};
    for (int s = 0; s < 4; ++s) {
        for (int j = 0; j < 4; ++j) {
            Complex acc(0);
            for (int row = 0; row < 4; ++row) acc += rows[row][s] * rows[row][j];
            gram[s][j] = acc;
        }
    }
    // Re-express each psi_s in the Cartan basis: i-coefficients b relate to
    // Cartan coefficients a by b = M^T a.
    const Mat4 back = inv4(transpose4(rows));
    std::array<Biquaternion, 4> psi;
    for (int s = 0; s < 4; ++s) {
        psi[s] = Biquaternion(Basis::Cartan, mat_vec(back, gram[s]));
    }
    return PsiWeights(psi);
}

ResidualReport residual_report(const BqFunction& residual, std::span<const Point4> points,
                               EvalMode mode) {
    const BqFunction r = normalized(residual);
    ResidualReport report;
    report.symbolic_zero = is_zero(r);
    report.per_point.resize(points.size());

    const auto n = static_cast<std::ptrdiff_t>(points.size());
#pragma omp parallel for schedule(static) if (mode == EvalMode::Parallel)
    for (std::ptrdiff_t idx = 0; idx < n; ++idx) {
        auto& sample = report.per_point[static_cast<std::size_t>(idx)];
        sample.point = points[static_cast<std::size_t>(idx)];
        for (int s = 0; s < 4; ++s) sample.residual[s] = eval(r.comp[s], sample.point);
    }

    double m = 0.0;
    for (const auto& sample : report.per_point) {
        for (int s = 0; s < 4; ++s) m = std::max(m, std::abs(sample.residual[s]));
    }
    report.max_abs = m;
    return report;
}

ResidualReport residual_norm(const PsiWeights& psi, const BqFunction& f, Side side,
                             std::span<const Point4> points, EvalMode mode) {
    if (points.empty()) throw InvalidParameter("residual_norm: need at least one sample point");
    return residual_report(apply_dirac(psi, f, side), points, mode);
}

}  // namespace bq
