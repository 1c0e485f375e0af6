#include "weil/oracle.hpp"

#include <cmath>
#include <memory>

#include "weil/errors.hpp"

namespace weil::oracle {

namespace {

// A private term language with division, so that derivatives of sqrt and log
// stay expressible.  Deliberately separate from weil::Expr.
struct Sym;
using SymPtr = std::shared_ptr<const Sym>;

enum class K { Var, Const, Add, Mul, Div, Exp, Log, Sin, Cos, Sqrt };

struct Sym {
    K k;
    double c = 0;
    SymPtr a, b;
};

SymPtr mk(K k, SymPtr a = nullptr, SymPtr b = nullptr, double c = 0) {
    auto s = std::make_shared<Sym>();
    s->k = k;
    s->a = std::move(a);
    s->b = std::move(b);
    s->c = c;
    return s;
}

SymPtr cnst(double v) { return mk(K::Const, nullptr, nullptr, v); }
SymPtr var() { return mk(K::Var); }
SymPtr add(SymPtr a, SymPtr b) { return mk(K::Add, std::move(a), std::move(b)); }
SymPtr mul(SymPtr a, SymPtr b) { return mk(K::Mul, std::move(a), std::move(b)); }
SymPtr divi(SymPtr a, SymPtr b) { return mk(K::Div, std::move(a), std::move(b)); }

SymPtr diff(const SymPtr& s) {
    switch (s->k) {
        case K::Var: return cnst(1);
        case K::Const: return cnst(0);
        case K::Add: return add(diff(s->a), diff(s->b));
        case K::Mul: return add(mul(diff(s->a), s->b), mul(s->a, diff(s->b)));
        case K::Div:
            // (a/b)' = a'/b - a b'/b^2
            return add(divi(diff(s->a), s->b),
                       mul(cnst(-1), divi(mul(s->a, diff(s->b)), mul(s->b, s->b))));
        case K::Exp: return mul(diff(s->a), mk(K::Exp, s->a));
        case K::Log: return divi(diff(s->a), s->a);
        case K::Sin: return mul(diff(s->a), mk(K::Cos, s->a));
        case K::Cos: return mul(cnst(-1), mul(diff(s->a), mk(K::Sin, s->a)));
        case K::Sqrt: return divi(diff(s->a), mul(cnst(2), mk(K::Sqrt, s->a)));
    }
    throw Error("unreachable");
}

double eval(const SymPtr& s, double x) {
    switch (s->k) {
        case K::Var: return x;
        case K::Const: return s->c;
        case K::Add: return eval(s->a, x) + eval(s->b, x);
        case K::Mul: return eval(s->a, x) * eval(s->b, x);
        case K::Div: return eval(s->a, x) / eval(s->b, x);
        case K::Exp: return std::exp(eval(s->a, x));
        case K::Log: return std::log(eval(s->a, x));
        case K::Sin: return std::sin(eval(s->a, x));
        case K::Cos: return std::cos(eval(s->a, x));
        case K::Sqrt: return std::sqrt(eval(s->a, x));
    }
    throw Error("unreachable");
}

SymPtr from_expr(const Expr& e) {
    switch (e->kind) {
        case ExprKind::Var:
            if (e->var_index != 0) throw MismatchError("oracle handles unary expressions only");
            return var();
        case ExprKind::Const: return cnst(rat_double(e->value));
        case ExprKind::Sum: {
            SymPtr s = from_expr(e->kids[0]);
            for (size_t i = 1; i < e->kids.size(); ++i) s = add(s, from_expr(e->kids[i]));
            return s;
        }
        case ExprKind::Prod: {
            SymPtr s = from_expr(e->kids[0]);
            for (size_t i = 1; i < e->kids.size(); ++i) s = mul(s, from_expr(e->kids[i]));
            return s;
        }
        case ExprKind::Neg: return mul(cnst(-1), from_expr(e->kids[0]));
        case ExprKind::Pow: {
            if (e->exponent == 0) return cnst(1);
            SymPtr b = from_expr(e->kids[0]);
            SymPtr s = b;
            for (uint32_t i = 1; i < e->exponent; ++i) s = mul(s, b);
            return s;
        }
        case ExprKind::Func: {
            SymPtr a = from_expr(e->kids[0]);
            switch (e->func) {
                case ExprFunc::Exp: return mk(K::Exp, a);
                case ExprFunc::Log: return mk(K::Log, a);
                case ExprFunc::Sin: return mk(K::Sin, a);
                case ExprFunc::Cos: return mk(K::Cos, a);
                case ExprFunc::Sqrt: return mk(K::Sqrt, a);
                case ExprFunc::PowReal:
                    // u^r = exp(r log u), valid on the positive domain
                    return mk(K::Exp, mul(cnst(rat_double(e->real_exponent)), mk(K::Log, a)));
            }
        }
    }
    throw Error("unreachable");
}

} // namespace

std::vector<double> taylor_by_symbolic_diff(const Expr& f, double x0, uint32_t k) {
    SymPtr s = from_expr(f);
    std::vector<double> out;
    out.reserve(k + 1);
    double fact = 1;
    for (uint32_t j = 0; j <= k; ++j) {
        if (j > 0) {
            s = diff(s);
            fact *= j;
        }
        out.push_back(eval(s, x0) / fact);
    }
    return out;
}

double central_difference(const Expr& f, double x0, double h) {
    return (expr_eval_double(f, {x0 + h}) - expr_eval_double(f, {x0 - h})) / (2 * h);
}

} // namespace weil::oracle
