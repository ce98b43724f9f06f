#include <doctest.h>

#include "helpers.hpp"

using namespace bq;
using bqtest::cartan_in_standard_rows;
using bqtest::max_coeff_distance;
using bqtest::random_biquaternion;

namespace {

Biquaternion e(int k) { return Biquaternion::unit(Basis::Cartan, k - 1); }

Biquaternion std_unit(int k) { return Biquaternion::unit(Basis::Standard, k); }

bool exactly_equal(const Biquaternion& a, const Biquaternion& b) {
    if (a.basis() != b.basis()) return false;
    for (int i = 0; i < 4; ++i) {
        if (a[i] != b[i]) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("cartan multiplication table is reproduced exactly") {
    // Row = left factor. 0 stands for the zero element.
    const int expected[4][4] = {
        {1, 0, 3, 0},
        {0, 2, 0, 4},
        {0, 3, 0, 1},
        {4, 0, 2, 0},
    };
    for (int a = 1; a <= 4; ++a) {
        for (int b = 1; b <= 4; ++b) {
            const Biquaternion product = e(a) * e(b);
            const Biquaternion want =
                expected[a - 1][b - 1] ? e(expected[a - 1][b - 1]) : Biquaternion::zero(Basis::Cartan);
            CHECK(exactly_equal(product, want));
        }
    }
}

TEST_CASE("standard multiplication rules") {
    const Biquaternion one = std_unit(0), I = std_unit(1), J = std_unit(2), K = std_unit(3);
    CHECK(exactly_equal(I * J, K));
    CHECK(exactly_equal(J * I, -K));
    CHECK(exactly_equal(J * K, I));
    CHECK(exactly_equal(K * J, -I));
    CHECK(exactly_equal(K * I, J));
    CHECK(exactly_equal(I * K, -J));
    CHECK(exactly_equal(I * I, -one));
    CHECK(exactly_equal(J * J, -one));
    CHECK(exactly_equal(K * K, -one));
    CHECK(exactly_equal(I * (J * K), -one));
}

TEST_CASE("idempotents and nilpotents are exact") {
    CHECK(exactly_equal(e(1) * e(1), e(1)));
    CHECK(exactly_equal(e(2) * e(2), e(2)));
    CHECK(exactly_equal(e(3) * e(3), Biquaternion::zero(Basis::Cartan)));
    CHECK(exactly_equal(e(4) * e(4), Biquaternion::zero(Basis::Cartan)));
}

TEST_CASE("non-commutativity witness: e1*e3 = e3 but e3*e1 = 0") {
    CHECK(exactly_equal(e(1) * e(3), e(3)));
    CHECK(exactly_equal(e(3) * e(1), Biquaternion::zero(Basis::Cartan)));
}

TEST_CASE("unit element and additive identities") {
    CHECK(exactly_equal(e(1) + e(2), Biquaternion::one(Basis::Cartan)));

    Rng rng(101);
    for (Basis basis : {Basis::Standard, Basis::Cartan}) {
        for (int k = 0; k < 10; ++k) {
            const Biquaternion x = random_biquaternion(rng, basis);
            CHECK(approx_equal(Biquaternion::one(basis) * x, x));
            CHECK(approx_equal(x * Biquaternion::one(basis), x));
            CHECK(approx_equal(Biquaternion::zero(basis) + x, x));
        }
    }

    // i*(iJ) = -J.
    const Complex i(0, 1);
    const Biquaternion J = std_unit(2);
    CHECK(approx_equal(i * (i * J), -J));
}

TEST_CASE("mixing bases without converting is an error") {
    const Biquaternion a = Biquaternion::one(Basis::Standard);
    const Biquaternion b = Biquaternion::one(Basis::Cartan);
    CHECK_THROWS_AS(a * b, BasisMismatch);
    CHECK_THROWS_AS(a + b, BasisMismatch);
    CHECK(approx_equal(a, b));  // equality converts, and 1 == e1 + e2
}

TEST_CASE("basis conversion matches the closed-form tables") {
    const Biquaternion one_c = to_cartan(std_unit(0));
    CHECK(exactly_equal(one_c, Biquaternion(Basis::Cartan, {1.0, 1.0, 0.0, 0.0})));

    const Complex i(0, 1);
    const Biquaternion I_c = to_cartan(std_unit(1));
    CHECK(exactly_equal(I_c, Biquaternion(Basis::Cartan, {-i, i, 0.0, 0.0})));

    const Biquaternion J_c = to_cartan(std_unit(2));
    CHECK(exactly_equal(J_c, Biquaternion(Basis::Cartan, {0.0, 0.0, -i, -i})));

    const Biquaternion K_c = to_cartan(std_unit(3));
    CHECK(exactly_equal(K_c, Biquaternion(Basis::Cartan, {0.0, 0.0, -1.0, 1.0})));

    Rng rng(102);
    for (int k = 0; k < 50; ++k) {
        const Biquaternion x = random_biquaternion(rng, Basis::Standard);
        CHECK(max_coeff_distance(to_standard(to_cartan(x)), x) <= 1e-12);
        const Biquaternion y = random_biquaternion(rng, Basis::Cartan);
        CHECK(max_coeff_distance(to_cartan(to_standard(y)), y) <= 1e-12);
    }
}

TEST_CASE("multiplication commutes with basis conversion") {
    Rng rng(103);
    for (int k = 0; k < 200; ++k) {
        const Biquaternion a = random_biquaternion(rng, Basis::Standard);
        const Biquaternion b = random_biquaternion(rng, Basis::Standard);
        CHECK(max_coeff_distance(to_cartan(a * b), to_cartan(a) * to_cartan(b)) <= 1e-10);

        const Biquaternion c = random_biquaternion(rng, Basis::Cartan);
        const Biquaternion d = random_biquaternion(rng, Basis::Cartan);
        CHECK(max_coeff_distance(to_standard(c * d), to_standard(c) * to_standard(d)) <= 1e-10);
    }
}

TEST_CASE("associativity and distributivity") {
    Rng rng(104);
    for (Basis basis : {Basis::Standard, Basis::Cartan}) {
        for (int k = 0; k < 300; ++k) {
            const Biquaternion a = random_biquaternion(rng, basis);
            const Biquaternion b = random_biquaternion(rng, basis);
            const Biquaternion c = random_biquaternion(rng, basis);
            CHECK(max_coeff_distance((a * b) * c, a * (b * c)) <= 1e-10);
            CHECK(max_coeff_distance(a * (b + c), a * b + a * c) <= 1e-10);
        }
    }
}

TEST_CASE("change_basis: identity matrix keeps coefficients") {
    Rng rng(105);
    const BasisMatrix id = BasisMatrix::identity();
    for (int k = 0; k < 10; ++k) {
        const Biquaternion x = random_biquaternion(rng, Basis::Cartan);
        CHECK(max_coeff_distance(change_basis(id, x), x) <= 1e-12);
    }
}

TEST_CASE("change_basis through the idempotent-basis rows reproduces to_standard") {
    Rng rng(106);
    const BasisMatrix M = cartan_in_standard_rows();
    for (int k = 0; k < 20; ++k) {
        const Biquaternion x = random_biquaternion(rng, Basis::Cartan);
        const Biquaternion via_matrix = change_basis(M, x, Basis::Standard);
        CHECK(max_coeff_distance(via_matrix, to_standard(x)) <= 1e-12);
    }
}

TEST_CASE("change_basis round trip through the inverse matrix") {
    Rng rng(107);
    for (int k = 0; k < 20; ++k) {
        Mat4 rows;
        for (auto& row : rows) {
            for (auto& entry : row) entry = rng.unit_disc();
        }
        if (std::abs(det4(rows)) <= 0.1) continue;
        const BasisMatrix M(rows);
        const BasisMatrix Minv = M.inverse();
        const Biquaternion x = random_biquaternion(rng, Basis::Cartan);
        CHECK(max_coeff_distance(change_basis(Minv, change_basis(M, x)), x) <= 1e-10);
    }
}

TEST_CASE("singular matrices are rejected") {
    Mat4 rows{};
    for (int i = 0; i < 4; ++i) rows[0][i] = Complex(1);
    for (int i = 0; i < 4; ++i) rows[1][i] = Complex(2);  // dependent rows
    rows[2][2] = Complex(1);
    rows[3][3] = Complex(1);
    CHECK_THROWS_AS(BasisMatrix{rows}, SingularMatrix);
    CHECK_THROWS_AS(inv4(rows), SingularMatrix);
}

TEST_CASE("change_basis requires a Cartan-tagged input") {
    CHECK_THROWS_AS(change_basis(BasisMatrix::identity(), Biquaternion::one(Basis::Standard)),
                    BasisMismatch);
}

TEST_CASE("matrix inverse solves back to the identity") {
    Rng rng(108);
    for (int k = 0; k < 20; ++k) {
        Mat4 rows;
        for (auto& row : rows) {
            for (auto& entry : row) entry = rng.unit_disc();
        }
        if (std::abs(det4(rows)) <= 0.1) continue;
        const Mat4 inv = inv4(rows);
        for (int r = 0; r < 4; ++r) {
            std::array<Complex, 4> basis_vec{};
            basis_vec[r] = Complex(1);
            const auto round = mat_vec(rows, mat_vec(inv, basis_vec));
            for (int c = 0; c < 4; ++c) {
                CHECK(std::abs(round[c] - basis_vec[c]) <= 1e-10);
            }
        }
    }
}
