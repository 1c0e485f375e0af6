// Expression trees standing in for smooth maps R^m -> R: rational constants,
// variables u0, u1, ..., sums, products, integer powers, and the elementary
// functions exp, log, sin, cos, sqrt and pow with a real exponent.
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "weil/rational.hpp"

namespace weil {

struct ExprNode;
using Expr = std::shared_ptr<const ExprNode>;

enum class ExprKind { Var, Const, Sum, Prod, Neg, Pow, Func };
enum class ExprFunc { Exp, Log, Sin, Cos, Sqrt, PowReal };

struct ExprNode {
    ExprKind kind;
    size_t var_index = 0;      // Var
    Rat value;                 // Const
    std::vector<Expr> kids;    // Sum/Prod: >=2, Neg/Pow/Func: 1
    uint32_t exponent = 0;     // Pow (>= 0)
    ExprFunc func = ExprFunc::Exp;
    Rat real_exponent;         // PowReal
};

Expr ex_var(size_t i);
Expr ex_const(Rat c);
Expr ex_add(Expr a, Expr b);
Expr ex_sub(Expr a, Expr b);
Expr ex_mul(Expr a, Expr b);
Expr ex_neg(Expr a);
Expr ex_pow(Expr a, uint32_t n);
Expr ex_func(ExprFunc f, Expr a);
Expr ex_pow_real(Expr a, Rat r);

// 1 + largest variable index mentioned (0 for constant expressions).
size_t expr_arity(const Expr& e);

// Composition: every variable i of f is replaced by args[i].
Expr expr_substitute(const Expr& f, const std::vector<Expr>& args);

// Plain floating evaluation; the finite-difference oracle runs on this.
double expr_eval_double(const Expr& e, const std::vector<double>& xs);

std::string expr_str(const Expr& e);

// Parses the grammar with variables u0, u1, ..., infix + - * ^, rational and
// decimal literals, and function application exp(...), pow(e, r).
Expr parse_expr(const std::string& text);

} // namespace weil
