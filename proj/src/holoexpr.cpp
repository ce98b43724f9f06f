#include "bq/holoexpr.hpp"

#include <cassert>
#include <cmath>
#include <numbers>

namespace bq {

struct HoloExpr::Node {
    Kind kind;
    Complex value{};        // Const
    int var = 0;            // Var
    int exponent = 0;       // Pow
    std::shared_ptr<const Node> a, b;
};

namespace {

HoloExpr make_const(Complex v) { return HoloExpr::constant(v); }

}  // namespace

HoloExpr::HoloExpr() : HoloExpr(constant(Complex(0))) {}
HoloExpr::HoloExpr(double v) : HoloExpr(constant(Complex(v))) {}
HoloExpr::HoloExpr(Complex v) : HoloExpr(constant(v)) {}

HoloExpr HoloExpr::constant(Complex v) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Const;
    n->value = v;
    return HoloExpr(std::move(n));
}

HoloExpr HoloExpr::var(int index) {
    if (index < 1 || index > 4) throw InvalidParameter("variable index must be in 1..4");
    auto n = std::make_shared<Node>();
    n->kind = Kind::Var;
    n->var = index;
    return HoloExpr(std::move(n));
}

HoloExpr HoloExpr::pow(const HoloExpr& base, int exponent) {
    if (exponent < 0) throw InvalidParameter("exponent must be a nonnegative integer");
    auto n = std::make_shared<Node>();
    n->kind = Kind::Pow;
    n->exponent = exponent;
    n->a = base.node_;
    return HoloExpr(std::move(n));
}

HoloExpr HoloExpr::exp(const HoloExpr& arg) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Exp;
    n->a = arg.node_;
    return HoloExpr(std::move(n));
}

HoloExpr::Kind HoloExpr::kind() const { return node_->kind; }
Complex HoloExpr::const_value() const { return node_->value; }
int HoloExpr::var_index() const { return node_->var; }
int HoloExpr::exponent() const { return node_->exponent; }

HoloExpr HoloExpr::child(int which) const {
    const auto& p = which == 0 ? node_->a : node_->b;
    assert(p);
    return HoloExpr(p);
}

HoloExpr operator+(const HoloExpr& a, const HoloExpr& b) {
    auto n = std::make_shared<HoloExpr::Node>();
    n->kind = HoloExpr::Kind::Add;
    n->a = a.node_;
    n->b = b.node_;
    return HoloExpr(std::move(n));
}

HoloExpr operator-(const HoloExpr& a, const HoloExpr& b) { return a + (-b); }

HoloExpr operator*(const HoloExpr& a, const HoloExpr& b) {
    auto n = std::make_shared<HoloExpr::Node>();
    n->kind = HoloExpr::Kind::Mul;
    n->a = a.node_;
    n->b = b.node_;
    return HoloExpr(std::move(n));
}

HoloExpr HoloExpr::operator-() const {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Neg;
    n->a = node_;
    return HoloExpr(std::move(n));
}

namespace {

// Integer power by repeated squaring; std::pow on complex goes through
// exp/log and would blur exact values like (2i)^2.
Complex ipow(Complex base, int e) {
    Complex r(1);
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

}  // namespace

namespace {

Complex eval_node(const HoloExpr::Node& n, const Point4& p) {
    using K = HoloExpr::Kind;
    switch (n.kind) {
        case K::Const: return n.value;
        case K::Var: return p[static_cast<std::size_t>(n.var - 1)];
        case K::Add: return eval_node(*n.a, p) + eval_node(*n.b, p);
        case K::Mul: return eval_node(*n.a, p) * eval_node(*n.b, p);
        case K::Neg: return -eval_node(*n.a, p);
        case K::Pow: return ipow(eval_node(*n.a, p), n.exponent);
        case K::Exp: return std::exp(eval_node(*n.a, p));
    }
    return {};
}

}  // namespace

Complex eval(const HoloExpr& e, const Point4& p) { return eval_node(*e.node_, p); }

HoloExpr diff(const HoloExpr& e, int v) {
    using K = HoloExpr::Kind;
    switch (e.kind()) {
        case K::Const: return make_const(Complex(0));
        case K::Var: return make_const(Complex(e.var_index() == v ? 1 : 0));
        case K::Add: return diff(e.child(0), v) + diff(e.child(1), v);
        case K::Mul:
            return diff(e.child(0), v) * e.child(1) + e.child(0) * diff(e.child(1), v);
        case K::Neg: return -diff(e.child(0), v);
        case K::Pow: {
            const int k = e.exponent();
            if (k == 0) return make_const(Complex(0));
            return make_const(Complex(k)) * HoloExpr::pow(e.child(0), k - 1) *
                   diff(e.child(0), v);
        }
        case K::Exp: return diff(e.child(0), v) * e;
    }
    return {};
}

HoloExpr substitute(const HoloExpr& e, const VarMap& map) {
    using K = HoloExpr::Kind;
    switch (e.kind()) {
        case K::Const: return e;
        case K::Var: {
            auto it = map.find(e.var_index());
            return it == map.end() ? e : it->second;
        }
        case K::Add: return substitute(e.child(0), map) + substitute(e.child(1), map);
        case K::Mul: return substitute(e.child(0), map) * substitute(e.child(1), map);
        case K::Neg: return -substitute(e.child(0), map);
        case K::Pow: return HoloExpr::pow(substitute(e.child(0), map), e.exponent());
        case K::Exp: return HoloExpr::exp(substitute(e.child(0), map));
    }
    return {};
}

bool depends_on(const HoloExpr& e, int v) {
    using K = HoloExpr::Kind;
    switch (e.kind()) {
        case K::Const: return false;
        case K::Var: return e.var_index() == v;
        case K::Add:
        case K::Mul: return depends_on(e.child(0), v) || depends_on(e.child(1), v);
        case K::Neg:
        case K::Pow:
        case K::Exp: return depends_on(e.child(0), v);
    }
    return false;
}

Complex cauchy_derivative(const HoloExpr& e, int v, const Point4& p, double radius, int n) {
    if (radius <= 0.0) throw InvalidParameter("cauchy_derivative: radius must be > 0");
    if (n < 8) throw InvalidParameter("cauchy_derivative: need at least 8 nodes");
    if (v < 1 || v > 4) throw InvalidParameter("variable index must be in 1..4");

    Complex sum(0);
    Point4 q = p;
    for (int k = 0; k < n; ++k) {
        const double theta = 2.0 * std::numbers::pi * k / n;
        const Complex w = std::polar(1.0, theta);
        q[static_cast<std::size_t>(v - 1)] = p[static_cast<std::size_t>(v - 1)] + radius * w;
        sum += eval(e, q) / w;
    }
    return sum / (static_cast<double>(n) * radius);
}

}  // namespace bq
