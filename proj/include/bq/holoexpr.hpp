#pragma once

#include <array>
#include <complex>
#include <map>
#include <memory>

#include "bq/errors.hpp"

namespace bq {

using Complex = std::complex<double>;
using Point4 = std::array<Complex, 4>;

/// Default absolute threshold below which a coefficient produced by
/// cancellation inside normalize() is treated as zero.
inline constexpr double kNormalizeTol = 1e-12;

/// Immutable tree denoting an entire function C^4 -> C (polynomials and
/// exponentials; no branch cuts). Variables are indexed 1..4; the enclosing
/// context decides whether they read as Cartan coordinates z1..z4 or
/// standard coordinates t0..t3. Copies share structure and are cheap.
class HoloExpr {
public:
    enum class Kind { Const, Var, Add, Mul, Neg, Pow, Exp };
    struct Node;

    HoloExpr();  // the constant 0
    HoloExpr(double v);
    HoloExpr(Complex v);

    static HoloExpr constant(Complex v);
    static HoloExpr var(int index);  // 1..4
    static HoloExpr pow(const HoloExpr& base, int exponent);  // exponent >= 0
    static HoloExpr exp(const HoloExpr& arg);

    Kind kind() const;
    Complex const_value() const;  // Kind::Const only
    int var_index() const;        // Kind::Var only
    int exponent() const;         // Kind::Pow only
    /// Children: which = 0 for the left/only child, 1 for the right.
    /// Returned by value; copies share the underlying node.
    HoloExpr child(int which = 0) const;

    friend HoloExpr operator+(const HoloExpr& a, const HoloExpr& b);
    friend HoloExpr operator-(const HoloExpr& a, const HoloExpr& b);
    friend HoloExpr operator*(const HoloExpr& a, const HoloExpr& b);
    HoloExpr operator-() const;

private:
    explicit HoloExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;

    // eval recurses over raw nodes; the reference-count traffic of child()
    // would otherwise dominate (and serialize) tight point-evaluation loops.
    friend Complex eval(const HoloExpr& e, const Point4& p);
};

using VarMap = std::map<int, HoloExpr>;

Complex eval(const HoloExpr& e, const Point4& p);

/// Exact symbolic partial derivative with respect to variable v (1..4).
HoloExpr diff(const HoloExpr& e, int v);

/// Simultaneous substitution: variables absent from the map pass through
/// unchanged. eval(substitute(e, m), p) == eval(e, q) with q_s = eval(m[s], p).
HoloExpr substitute(const HoloExpr& e, const VarMap& map);

/// True when variable v occurs anywhere in the tree as written (no
/// simplification is attempted first).
bool depends_on(const HoloExpr& e, int v);

/// Canonical form: flatten sums and products, fold constants, merge
/// exponential factors (exp(a)*exp(b) -> exp(a+b)), sort terms, and drop
/// coefficients with |c| <= drop_tol left over from cancellation.
HoloExpr normalize(const HoloExpr& e, double drop_tol = kNormalizeTol);

/// True when e normalizes to the literal zero expression.
bool is_zero(const HoloExpr& e, double drop_tol = kNormalizeTol);

/// Canonical equality: a - b normalizes to zero.
bool norm_equal(const HoloExpr& a, const HoloExpr& b, double drop_tol = kNormalizeTol);

/// Numerical derivative by a discretized Cauchy integral over a circle of
/// the given radius around p's v-th coordinate, with n nodes:
///   (1/(n*radius)) * sum_k exp(-i theta_k) f(p + radius e^{i theta_k} along v).
/// Converges geometrically in n for entire functions and is independent of
/// the symbolic differentiator. Requires radius > 0 and n >= 8.
Complex cauchy_derivative(const HoloExpr& e, int v, const Point4& p, double radius, int n);

}  // namespace bq
