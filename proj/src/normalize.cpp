#include <algorithm>
#include <cmath>

#include "canonical.hpp"

namespace bq::detail {

namespace {

int cmp_double(double a, double b) { return a < b ? -1 : (a > b ? 1 : 0); }

int cmp_complex(Complex a, Complex b) {
    if (int c = cmp_double(a.real(), b.real())) return c;
    return cmp_double(a.imag(), b.imag());
}

int total_degree(const CanonTerm& t) { return t.pw[0] + t.pw[1] + t.pw[2] + t.pw[3]; }

// Sort by key and coalesce duplicates. Distinct factor pairs can collide on
// the same product key once exponential arguments are merged in floating
// point, so a freshly built row is not guaranteed duplicate-free.
void sort_terms(std::vector<CanonTerm>& terms, double tol) {
    std::sort(terms.begin(), terms.end(),
              [](const CanonTerm& a, const CanonTerm& b) { return compare_keys(a, b) < 0; });
    std::vector<CanonTerm> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
        if (!out.empty() && compare_keys(out.back(), t) == 0) {
            out.back().coeff += t.coeff;
            if (std::abs(out.back().coeff) <= tol) out.pop_back();
        } else {
            out.push_back(std::move(t));
        }
    }
    terms = std::move(out);
}

// Merge key-sorted term lists, summing coefficients on equal keys and
// dropping anything with |coeff| <= tol (cancellation dust).
CanonExpr merge(const CanonExpr& a, const CanonExpr& b, double tol) {
    CanonExpr out;
    out.terms.reserve(a.terms.size() + b.terms.size());
    std::size_t i = 0, j = 0;
    auto push = [&](CanonTerm t) {
        if (std::abs(t.coeff) > tol) out.terms.push_back(std::move(t));
    };
    while (i < a.terms.size() && j < b.terms.size()) {
        const int c = compare_keys(a.terms[i], b.terms[j]);
        if (c < 0) {
            push(a.terms[i++]);
        } else if (c > 0) {
            push(b.terms[j++]);
        } else {
            CanonTerm t = a.terms[i++];
            t.coeff += b.terms[j++].coeff;
            push(std::move(t));
        }
    }
    while (i < a.terms.size()) push(a.terms[i++]);
    while (j < b.terms.size()) push(b.terms[j++]);
    return out;
}

CanonExpr negate(CanonExpr a) {
    for (auto& t : a.terms) t.coeff = -t.coeff;
    return a;
}

CanonExpr product(const CanonExpr& a, const CanonExpr& b, double tol) {
    CanonExpr out;
    for (const auto& ta : a.terms) {
        CanonExpr row;
        row.terms.reserve(b.terms.size());
        for (const auto& tb : b.terms) {
            CanonTerm t;
            t.coeff = ta.coeff * tb.coeff;
            for (int k = 0; k < 4; ++k) t.pw[k] = ta.pw[k] + tb.pw[k];
            if (ta.exp_arg && tb.exp_arg) {
                CanonExpr arg = merge(*ta.exp_arg, *tb.exp_arg, tol);
                // Arguments carry no constant term, so the merge cannot
                // create one; it can only cancel to nothing.
                if (!arg.terms.empty()) {
                    t.exp_arg = std::make_shared<CanonExpr>(std::move(arg));
                }
            } else {
                t.exp_arg = ta.exp_arg ? ta.exp_arg : tb.exp_arg;
            }
            if (std::abs(t.coeff) > tol) row.terms.push_back(std::move(t));
        }
        sort_terms(row.terms, tol);
        out = merge(out, row, tol);
    }
    return out;
}

CanonExpr int_power(const CanonExpr& base, int e, double tol) {
    CanonExpr result;
    result.terms.push_back(CanonTerm{Complex(1), {}, nullptr});
    CanonExpr sq = base;
    while (e > 0) {
        if (e & 1) result = product(result, sq, tol);
        e >>= 1;
        if (e) sq = product(sq, sq, tol);
    }
    return result;
}

CanonExpr wrap_exp(const CanonExpr& arg, double tol) {
    // Split the constant part out of the argument: exp(c + r) = exp(c)*exp(r).
    Complex c0(0);
    CanonExpr rest;
    for (const auto& t : arg.terms) {
        if (total_degree(t) == 0 && !t.exp_arg) {
            c0 += t.coeff;
        } else {
            rest.terms.push_back(t);
        }
    }
    CanonTerm t;
    t.coeff = std::exp(c0);
    if (!rest.terms.empty()) t.exp_arg = std::make_shared<CanonExpr>(std::move(rest));
    CanonExpr out;
    if (std::abs(t.coeff) > tol) out.terms.push_back(std::move(t));
    return out;
}

}  // namespace

int compare_keys(const CanonTerm& a, const CanonTerm& b) {
    const int da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db ? -1 : 1;  // higher degree first
    for (int k = 0; k < 4; ++k) {
        if (a.pw[k] != b.pw[k]) return a.pw[k] > b.pw[k] ? -1 : 1;
    }
    if (!a.exp_arg && !b.exp_arg) return 0;
    if (!a.exp_arg) return -1;
    if (!b.exp_arg) return 1;
    return compare(*a.exp_arg, *b.exp_arg);
}

int compare(const CanonExpr& a, const CanonExpr& b) {
    if (a.terms.size() != b.terms.size()) return a.terms.size() < b.terms.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.terms.size(); ++i) {
        if (int c = compare_keys(a.terms[i], b.terms[i])) return c;
        if (int c = cmp_complex(a.terms[i].coeff, b.terms[i].coeff)) return c;
    }
    return 0;
}

CanonExpr canonicalize(const HoloExpr& e, double drop_tol) {
    using K = HoloExpr::Kind;
    switch (e.kind()) {
        case K::Const: {
            CanonExpr out;
            if (std::abs(e.const_value()) > drop_tol) {
                out.terms.push_back(CanonTerm{e.const_value(), {}, nullptr});
            }
            return out;
        }
        case K::Var: {
            CanonTerm t{Complex(1), {}, nullptr};
            t.pw[static_cast<std::size_t>(e.var_index() - 1)] = 1;
            CanonExpr out;
            out.terms.push_back(std::move(t));
            return out;
        }
        case K::Add:
            return merge(canonicalize(e.child(0), drop_tol), canonicalize(e.child(1), drop_tol),
                         drop_tol);
        case K::Mul:
            return product(canonicalize(e.child(0), drop_tol),
                           canonicalize(e.child(1), drop_tol), drop_tol);
        case K::Neg: return negate(canonicalize(e.child(0), drop_tol));
        case K::Pow: return int_power(canonicalize(e.child(0), drop_tol), e.exponent(), drop_tol);
        case K::Exp: return wrap_exp(canonicalize(e.child(0), drop_tol), drop_tol);
    }
    return {};
}

HoloExpr rebuild(const CanonExpr& c) {
    if (c.terms.empty()) return HoloExpr();
    bool first = true;
    HoloExpr sum;
    for (const auto& t : c.terms) {
        HoloExpr factors;
        bool have_factor = false;
        for (int k = 0; k < 4; ++k) {
            if (t.pw[k] == 0) continue;
            HoloExpr f = t.pw[k] == 1 ? HoloExpr::var(k + 1)
                                      : HoloExpr::pow(HoloExpr::var(k + 1), t.pw[k]);
            factors = have_factor ? factors * f : f;
            have_factor = true;
        }
        if (t.exp_arg) {
            HoloExpr f = HoloExpr::exp(rebuild(*t.exp_arg));
            factors = have_factor ? factors * f : f;
            have_factor = true;
        }
        HoloExpr term;
        if (!have_factor) {
            term = HoloExpr::constant(t.coeff);
        } else if (t.coeff == Complex(1)) {
            term = factors;
        } else if (t.coeff == Complex(-1)) {
            term = -factors;
        } else {
            term = HoloExpr::constant(t.coeff) * factors;
        }
        sum = first ? term : sum + term;
        first = false;
    }
    return sum;
}

}  // namespace bq::detail

namespace bq {

HoloExpr normalize(const HoloExpr& e, double drop_tol) {
    return detail::rebuild(detail::canonicalize(e, drop_tol));
}

bool is_zero(const HoloExpr& e, double drop_tol) {
    return detail::canonicalize(e, drop_tol).terms.empty();
}

bool norm_equal(const HoloExpr& a, const HoloExpr& b, double drop_tol) {
    return is_zero(a - b, drop_tol);
}

}  // namespace bq
