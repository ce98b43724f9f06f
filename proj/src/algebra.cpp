#include "bq/algebra.hpp"

#include <cmath>
#include <cstdlib>
#include <ostream>
#include <sstream>

namespace bq {

namespace {

// Cartan products, row = left factor. Entry s > 0 means e_s, 0 means zero:
//        e1  e2  e3  e4
//   e1 | e1   0  e3   0
//   e2 |  0  e2   0  e4
//   e3 |  0  e3   0  e1
//   e4 | e4   0  e2   0
constexpr int kCartanTable[4][4] = {
    {1, 0, 3, 0},
    {0, 2, 0, 4},
    {0, 3, 0, 1},
    {4, 0, 2, 0},
};

// Standard products, entry = sign * (index + 1) over the order (1, I, J, K).
// I^2 = J^2 = K^2 = IJK = -1, IJ = K, JK = I, KI = J.
constexpr int kStandardTable[4][4] = {
    {+1, +2, +3, +4},
    {+2, -1, +4, -3},
    {+3, -4, -1, +2},
    {+4, +3, -2, -1},
};

void require_same_basis(const Biquaternion& a, const Biquaternion& b, const char* op) {
    if (a.basis() != b.basis()) {
        std::ostringstream msg;
        msg << op << ": operands tagged " << basis_name(a.basis()) << " and "
            << basis_name(b.basis()) << "; convert one side first";
        throw BasisMismatch(msg.str());
    }
}

}  // namespace

const char* basis_name(Basis b) {
    return b == Basis::Standard ? "standard" : "cartan";
}

Biquaternion Biquaternion::one(Basis basis) {
    // 1 = e1 + e2 in the Cartan basis.
    if (basis == Basis::Cartan) return {basis, {Complex(1), Complex(1), {}, {}}};
    return {basis, {Complex(1), {}, {}, {}}};
}

Biquaternion Biquaternion::unit(Basis basis, int k) {
    if (k < 0 || k > 3) throw InvalidParameter("basis element index must be in 0..3");
    std::array<Complex, 4> c{};
    c[static_cast<std::size_t>(k)] = Complex(1);
    return {basis, c};
}

Biquaternion Biquaternion::scalar(Basis basis, Complex value) {
    return value * one(basis);
}

Biquaternion operator*(const Biquaternion& a, const Biquaternion& b) {
    require_same_basis(a, b, "mul");
    std::array<Complex, 4> out{};
    if (a.basis() == Basis::Cartan) {
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) {
                if (int s = kCartanTable[i][j]) out[s - 1] += a[i] * b[j];
            }
        }
    } else {
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) {
                const int e = kStandardTable[i][j];
                const Complex p = a[i] * b[j];
                out[std::abs(e) - 1] += e > 0 ? p : -p;
            }
        }
    }
    return {a.basis(), out};
}

Biquaternion operator+(const Biquaternion& a, const Biquaternion& b) {
    require_same_basis(a, b, "add");
    std::array<Complex, 4> out;
    for (int i = 0; i < 4; ++i) out[i] = a[i] + b[i];
    return {a.basis(), out};
}

Biquaternion operator-(const Biquaternion& a, const Biquaternion& b) {
    require_same_basis(a, b, "sub");
    std::array<Complex, 4> out;
    for (int i = 0; i < 4; ++i) out[i] = a[i] - b[i];
    return {a.basis(), out};
}

Biquaternion operator-(const Biquaternion& a) {
    std::array<Complex, 4> out;
    for (int i = 0; i < 4; ++i) out[i] = -a[i];
    return {a.basis(), out};
}

Biquaternion operator*(Complex lambda, const Biquaternion& a) {
    std::array<Complex, 4> out;
    for (int i = 0; i < 4; ++i) out[i] = lambda * a[i];
    return {a.basis(), out};
}

Biquaternion to_cartan(const Biquaternion& a) {
    if (a.basis() == Basis::Cartan) return a;
    // 1 = e1 + e2, I = -i e1 + i e2, J = -i e3 - i e4, K = e4 - e3.
    const Complex i(0, 1);
    const auto& s = a.coeffs();
    return {Basis::Cartan,
            {s[0] - i * s[1], s[0] + i * s[1], -i * s[2] - s[3], -i * s[2] + s[3]}};
}

Biquaternion to_standard(const Biquaternion& a) {
    if (a.basis() == Basis::Standard) return a;
    // e1 = (1 + iI)/2, e2 = (1 - iI)/2, e3 = (iJ - K)/2, e4 = (iJ + K)/2.
    const Complex i(0, 1);
    const auto& c = a.coeffs();
    return {Basis::Standard,
            {(c[0] + c[1]) * 0.5, i * (c[0] - c[1]) * 0.5, i * (c[2] + c[3]) * 0.5,
             (c[3] - c[2]) * 0.5}};
}

Biquaternion convert(const Biquaternion& a, Basis target) {
    return target == Basis::Cartan ? to_cartan(a) : to_standard(a);
}

bool approx_equal(const Biquaternion& a, const Biquaternion& b, double tol) {
    const Biquaternion bb = convert(b, a.basis());
    for (int i = 0; i < 4; ++i) {
        if (std::abs(a[i] - bb[i]) > tol) return false;
    }
    return true;
}

double max_abs_coeff(const Biquaternion& a) {
    double m = 0.0;
    for (int i = 0; i < 4; ++i) m = std::max(m, std::abs(a[i]));
    return m;
}

std::ostream& operator<<(std::ostream& os, const Biquaternion& a) {
    static const char* const names[2][4] = {{"1", "I", "J", "K"}, {"e1", "e2", "e3", "e4"}};
    const int row = a.basis() == Basis::Cartan ? 1 : 0;
    os << "[";
    for (int i = 0; i < 4; ++i) {
        if (i) os << ", ";
        os << "(" << a[i].real() << (a[i].imag() < 0 ? "" : "+") << a[i].imag() << "i)"
           << names[row][i];
    }
    return os << "]";
}

Complex det4(const Mat4& m) {
    // LU with partial pivoting on magnitude.
    Mat4 a = m;
    Complex det(1);
    for (int col = 0; col < 4; ++col) {
        int pivot = col;
        for (int r = col + 1; r < 4; ++r) {
            if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
        }
        if (std::abs(a[pivot][col]) == 0.0) return Complex(0);
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (int r = col + 1; r < 4; ++r) {
            const Complex f = a[r][col] / a[col][col];
            for (int c = col; c < 4; ++c) a[r][c] -= f * a[col][c];
        }
    }
    return det;
}

Mat4 inv4(const Mat4& m) {
    if (std::abs(det4(m)) <= kSingularTol) {
        throw SingularMatrix("matrix is not invertible (|det| <= 1e-12)");
    }
    // Gauss-Jordan on [m | I].
    std::array<std::array<Complex, 8>, 4> a{};
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) a[r][c] = m[r][c];
        a[r][4 + r] = Complex(1);
    }
    for (int col = 0; col < 4; ++col) {
        int pivot = col;
        for (int r = col + 1; r < 4; ++r) {
            if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
        }
        std::swap(a[pivot], a[col]);
        const Complex d = a[col][col];
        for (int c = 0; c < 8; ++c) a[col][c] /= d;
        for (int r = 0; r < 4; ++r) {
            if (r == col) continue;
            const Complex f = a[r][col];
            if (f == Complex(0)) continue;
            for (int c = 0; c < 8; ++c) a[r][c] -= f * a[col][c];
        }
    }
    Mat4 out;
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) out[r][c] = a[r][4 + c];
    }
    return out;
}

Mat4 transpose4(const Mat4& m) {
    Mat4 out;
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) out[r][c] = m[c][r];
    }
    return out;
}

std::array<Complex, 4> mat_vec(const Mat4& m, const std::array<Complex, 4>& v) {
    std::array<Complex, 4> out{};
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) out[r] += m[r][c] * v[c];
    }
    return out;
}

BasisMatrix::BasisMatrix(Mat4 rows) : rows_(rows), det_(det4(rows)) {
    if (std::abs(det_) <= kSingularTol) {
        throw SingularMatrix("basis matrix is singular (|det| <= 1e-12)");
    }
}

BasisMatrix::BasisMatrix(std::array<Complex, 4> k, std::array<Complex, 4> m,
                         std::array<Complex, 4> n, std::array<Complex, 4> r)
    : BasisMatrix(Mat4{k, m, n, r}) {}

BasisMatrix BasisMatrix::identity() {
    Mat4 m{};
    for (int i = 0; i < 4; ++i) m[i][i] = Complex(1);
    return BasisMatrix(m);
}

BasisMatrix BasisMatrix::inverse() const {
    return BasisMatrix(inv4(rows_));
}

Biquaternion change_basis(const BasisMatrix& M, const Biquaternion& a, Basis result_tag) {
    if (a.basis() != Basis::Cartan) {
        throw BasisMismatch("change_basis expects a Cartan-tagged element");
    }
    // x = sum_j a_j e_j = sum_s (sum_j a_j M[j][s]) i_s.
    return {result_tag, mat_vec(transpose4(M.rows()), a.coeffs())};
}

}  // namespace bq
