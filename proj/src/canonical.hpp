#pragma once

#include <array>
#include <memory>
#include <vector>

#include "bq/holoexpr.hpp"

// Internal canonical form backing normalize()/is_zero()/print_expr().
// An expression is a key-sorted sum of product terms
//     coeff * v1^pw[0] * ... * v4^pw[3] * exp(arg)
// with distinct keys. Exponential factors are merged (exp(a)*exp(b) becomes
// exp(a+b)) so each term carries at most one, and an exp argument never
// contains a constant term (it is folded into the coefficient) and is never
// empty.
namespace bq::detail {

struct CanonExpr;
using CanonPtr = std::shared_ptr<const CanonExpr>;

struct CanonTerm {
    Complex coeff;
    std::array<int, 4> pw{};
    CanonPtr exp_arg;  // nullptr when the term has no exponential factor
};

struct CanonExpr {
    std::vector<CanonTerm> terms;
};

CanonExpr canonicalize(const HoloExpr& e, double drop_tol);
HoloExpr rebuild(const CanonExpr& c);

/// Total order; 0 means structurally identical with bit-equal coefficients.
int compare(const CanonExpr& a, const CanonExpr& b);
/// Term order ignoring coefficients: graded, then lexicographic on powers,
/// then by exponential argument (absent first).
int compare_keys(const CanonTerm& a, const CanonTerm& b);

}  // namespace bq::detail
