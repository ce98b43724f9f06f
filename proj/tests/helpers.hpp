#pragma once

#include <vector>

#include "bq/constructors.hpp"
#include "bq/operators.hpp"
#include "bq/sampling.hpp"

namespace bqtest {

using namespace bq;

inline Biquaternion random_biquaternion(Rng& rng, Basis basis) {
    return {basis, {rng.unit_disc(), rng.unit_disc(), rng.unit_disc(), rng.unit_disc()}};
}

/// Random polynomial of total degree <= max_degree in the listed variables.
inline HoloExpr random_polynomial(Rng& rng, int max_degree, const std::vector<int>& vars,
                                  int terms = 6) {
    HoloExpr sum = HoloExpr::constant(rng.unit_disc());
    for (int t = 0; t < terms; ++t) {
        HoloExpr mono = HoloExpr::constant(rng.unit_disc());
        int degree_left = rng.uniform_int(0, max_degree);
        for (int v : vars) {
            if (degree_left == 0) break;
            const int e = rng.uniform_int(0, degree_left);
            degree_left -= e;
            if (e > 0) mono = mono * HoloExpr::pow(HoloExpr::var(v), e);
        }
        sum = sum + mono;
    }
    return sum;
}

inline BqFunction random_bqfunction(Rng& rng, Basis basis, int max_degree = 3) {
    BqFunction f{basis, {}};
    for (int s = 0; s < 4; ++s) f.comp[s] = random_polynomial(rng, max_degree, {1, 2, 3, 4});
    return f;
}

/// Arbitrary expression trees exercising every node kind.
inline HoloExpr random_tree(Rng& rng, int depth) {
    const int choice = depth <= 0 ? rng.uniform_int(0, 1) : rng.uniform_int(0, 6);
    switch (choice) {
        case 0: {
            switch (rng.uniform_int(0, 2)) {
                case 0: return HoloExpr::constant(Complex(rng.uniform(-3, 3), 0));
                case 1: return HoloExpr::constant(Complex(0, rng.uniform(-3, 3)));
                default:
                    return HoloExpr::constant(Complex(rng.uniform(-3, 3), rng.uniform(-3, 3)));
            }
        }
        case 1: return HoloExpr::var(rng.uniform_int(1, 4));
        case 2: return random_tree(rng, depth - 1) + random_tree(rng, depth - 1);
        case 3: return random_tree(rng, depth - 1) * random_tree(rng, depth - 1);
        case 4: return -random_tree(rng, depth - 1);
        case 5: return HoloExpr::pow(random_tree(rng, depth - 1), rng.uniform_int(0, 3));
        default: return HoloExpr::exp(random_tree(rng, depth - 2));
    }
}

/// Rows of the matrix expressing e1..e4 against the standard basis
/// (i-basis = 1, I, J, K): e1 = (1 + iI)/2, e2 = (1 - iI)/2,
/// e3 = (iJ - K)/2, e4 = (iJ + K)/2.
inline BasisMatrix cartan_in_standard_rows() {
    const Complex i(0, 1);
    return BasisMatrix({0.5, 0.5 * i, 0, 0}, {0.5, -0.5 * i, 0, 0}, {0, 0, 0.5 * i, -0.5},
                       {0, 0, 0.5 * i, 0.5});
}

/// Independent symbolic product oracle: multiply a constant weight into an
/// expression vector through its own copy of the Cartan table. Kept apart
/// from the library's hard-coded componentwise expansions on purpose.
inline std::array<HoloExpr, 4> oracle_left_mul(const Biquaternion& w,
                                               const std::array<HoloExpr, 4>& g) {
    static constexpr int table[4][4] = {
        {1, 0, 3, 0},
        {0, 2, 0, 4},
        {0, 3, 0, 1},
        {4, 0, 2, 0},
    };
    std::array<HoloExpr, 4> out{};
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            if (int s = table[a][b]) {
                out[s - 1] = out[s - 1] + w[a] * g[static_cast<std::size_t>(b)];
            }
        }
    }
    return out;
}

inline std::array<HoloExpr, 4> oracle_right_mul(const std::array<HoloExpr, 4>& g,
                                                const Biquaternion& w) {
    static constexpr int table[4][4] = {
        {1, 0, 3, 0},
        {0, 2, 0, 4},
        {0, 3, 0, 1},
        {4, 0, 2, 0},
    };
    std::array<HoloExpr, 4> out{};
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            if (int s = table[a][b]) {
                out[s - 1] = out[s - 1] + g[static_cast<std::size_t>(a)] * w[b];
            }
        }
    }
    return out;
}

/// Generic weighted Dirac operators built from the product oracle; these are
/// the second route the hard-coded expansions are checked against.
inline BqFunction oracle_left_dirac(const PsiWeights& psi, const BqFunction& f) {
    BqFunction out{Basis::Cartan, {}};
    for (int j = 0; j < 4; ++j) {
        std::array<HoloExpr, 4> d;
        for (int s = 0; s < 4; ++s) d[s] = diff(f.comp[s], j + 1);
        const auto term = oracle_left_mul(psi[j], d);
        for (int s = 0; s < 4; ++s) out.comp[s] = out.comp[s] + term[s];
    }
    return out;
}

inline BqFunction oracle_right_dirac(const PsiWeights& psi, const BqFunction& f) {
    BqFunction out{Basis::Cartan, {}};
    for (int j = 0; j < 4; ++j) {
        std::array<HoloExpr, 4> d;
        for (int s = 0; s < 4; ++s) d[s] = diff(f.comp[s], j + 1);
        const auto term = oracle_right_mul(d, psi[j]);
        for (int s = 0; s < 4; ++s) out.comp[s] = out.comp[s] + term[s];
    }
    return out;
}

inline double max_coeff_distance(const Biquaternion& a, const Biquaternion& b) {
    const Biquaternion d = a - convert(b, a.basis());
    return max_abs_coeff(d);
}

inline SpecialPsiParams random_special_params(Rng& rng) {
    SpecialPsiParams p{};
    do {
        for (auto& a : p.alpha) a = rng.unit_disc();
    } while (std::abs(p.alpha[0] * p.alpha[1] - p.alpha[2] * p.alpha[3]) <= 1e-6);
    p.lambda = rng.unit_disc();
    p.mu = rng.unit_disc();
    p.theta = rng.unit_disc();
    p.vartheta = rng.unit_disc();
    p.nu = rng.unit_disc();
    p.eta = rng.unit_disc();
    return p;
}

}  // namespace bqtest
