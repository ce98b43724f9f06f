#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <iosfwd>

#include "bq/errors.hpp"

namespace bq {

using Complex = std::complex<double>;

/// Absolute per-coefficient tolerance used by equality checks. Every
/// closed-form identity in this algebra has coefficients drawn from
/// {0, +-1, +-1/2, +-i/2}, so nothing cancels anywhere near this scale.
inline constexpr double kCoeffTol = 1e-12;

/// Invertibility threshold for change-of-basis matrices.
inline constexpr double kSingularTol = 1e-12;

/// Coefficient order is (1, I, J, K) for Standard and (e1, e2, e3, e4)
/// for Cartan. e1, e2 are idempotents, e3, e4 nilpotents; the unit
/// decomposes as 1 = e1 + e2.
enum class Basis : std::uint8_t { Standard, Cartan };

const char* basis_name(Basis b);

/// Element of the complex quaternions H(C): four complex coefficients
/// against the tagged basis. Immutable after construction.
class Biquaternion {
public:
    Biquaternion() : basis_(Basis::Cartan), c_{} {}
    Biquaternion(Basis basis, std::array<Complex, 4> c) : basis_(basis), c_(c) {}

    static Biquaternion zero(Basis basis) { return {basis, {}}; }
    static Biquaternion one(Basis basis);
    /// k-th basis element, k in 0..3 (1,I,J,K or e1..e4).
    static Biquaternion unit(Basis basis, int k);
    static Biquaternion scalar(Basis basis, Complex value);

    Basis basis() const { return basis_; }
    const std::array<Complex, 4>& coeffs() const { return c_; }
    Complex operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }

private:
    Basis basis_;
    std::array<Complex, 4> c_;
};

/// Basis products are exact integer-indexed table lookups, so products of
/// basis elements carry coefficients that are exactly 0 or +-1.
Biquaternion operator*(const Biquaternion& a, const Biquaternion& b);
Biquaternion operator+(const Biquaternion& a, const Biquaternion& b);
Biquaternion operator-(const Biquaternion& a, const Biquaternion& b);
Biquaternion operator-(const Biquaternion& a);
Biquaternion operator*(Complex lambda, const Biquaternion& a);

/// Exact linear change of coordinates between the two named bases.
/// to_standard(to_cartan(x)) == x with no rounding beyond the exact
/// dyadic halves involved.
Biquaternion to_cartan(const Biquaternion& a);
Biquaternion to_standard(const Biquaternion& a);
Biquaternion convert(const Biquaternion& a, Basis target);

/// Coefficient-wise comparison after converting both operands to a common
/// basis.
bool approx_equal(const Biquaternion& a, const Biquaternion& b, double tol = kCoeffTol);

/// Max modulus over the four coefficients (the norm used for residual
/// reporting).
double max_abs_coeff(const Biquaternion& a);

std::ostream& operator<<(std::ostream& os, const Biquaternion& a);

using Mat4 = std::array<std::array<Complex, 4>, 4>;

Complex det4(const Mat4& m);
/// Throws SingularMatrix when |det| <= kSingularTol.
Mat4 inv4(const Mat4& m);
Mat4 transpose4(const Mat4& m);
std::array<Complex, 4> mat_vec(const Mat4& m, const std::array<Complex, 4>& v);

/// Rows k, m, n, r express e1..e4 in some other basis {i1..i4} of H(C).
/// Construction rejects singular matrices.
class BasisMatrix {
public:
    explicit BasisMatrix(Mat4 rows);
    BasisMatrix(std::array<Complex, 4> k, std::array<Complex, 4> m,
                std::array<Complex, 4> n, std::array<Complex, 4> r);

    static BasisMatrix identity();

    const Mat4& rows() const { return rows_; }
    const std::array<Complex, 4>& k() const { return rows_[0]; }
    const std::array<Complex, 4>& m() const { return rows_[1]; }
    const std::array<Complex, 4>& n() const { return rows_[2]; }
    const std::array<Complex, 4>& r() const { return rows_[3]; }

    Complex det() const { return det_; }
    BasisMatrix inverse() const;

private:
    Mat4 rows_;
    Complex det_;
};

/// Re-express a Cartan-tagged element against the basis {i1..i4} described
/// by M. The result's coefficients live in the i-basis; result_tag is the
/// caller's name for that basis (the tag the coefficients should carry when
/// the i-basis happens to be one of the two named bases).
Biquaternion change_basis(const BasisMatrix& M, const Biquaternion& a,
                          Basis result_tag = Basis::Cartan);

}  // namespace bq
