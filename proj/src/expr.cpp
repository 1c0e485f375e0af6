#include "weil/expr.hpp"

#include <cctype>
#include <cmath>

#include "weil/errors.hpp"

namespace weil {

namespace {
Expr node(ExprNode n) { return std::make_shared<const ExprNode>(std::move(n)); }
} // namespace

Expr ex_var(size_t i) {
    ExprNode n;
    n.kind = ExprKind::Var;
    n.var_index = i;
    return node(std::move(n));
}

Expr ex_const(Rat c) {
    ExprNode n;
    n.kind = ExprKind::Const;
    n.value = std::move(c);
    return node(std::move(n));
}

Expr ex_add(Expr a, Expr b) {
    ExprNode n;
    n.kind = ExprKind::Sum;
    n.kids = {std::move(a), std::move(b)};
    return node(std::move(n));
}

Expr ex_sub(Expr a, Expr b) { return ex_add(std::move(a), ex_neg(std::move(b))); }

Expr ex_mul(Expr a, Expr b) {
    ExprNode n;
    n.kind = ExprKind::Prod;
    n.kids = {std::move(a), std::move(b)};
    return node(std::move(n));
}

Expr ex_neg(Expr a) {
    ExprNode n;
    n.kind = ExprKind::Neg;
    n.kids = {std::move(a)};
    return node(std::move(n));
}

Expr ex_pow(Expr a, uint32_t p) {
    ExprNode n;
    n.kind = ExprKind::Pow;
    n.kids = {std::move(a)};
    n.exponent = p;
    return node(std::move(n));
}

Expr ex_func(ExprFunc f, Expr a) {
    ExprNode n;
    n.kind = ExprKind::Func;
    n.func = f;
    n.kids = {std::move(a)};
    return node(std::move(n));
}

Expr ex_pow_real(Expr a, Rat r) {
    ExprNode n;
    n.kind = ExprKind::Func;
    n.func = ExprFunc::PowReal;
    n.kids = {std::move(a)};
    n.real_exponent = std::move(r);
    return node(std::move(n));
}

size_t expr_arity(const Expr& e) {
    switch (e->kind) {
        case ExprKind::Var: return e->var_index + 1;
        case ExprKind::Const: return 0;
        default: {
            size_t a = 0;
            for (const Expr& k : e->kids) a = std::max(a, expr_arity(k));
            return a;
        }
    }
}

Expr expr_substitute(const Expr& f, const std::vector<Expr>& args) {
    switch (f->kind) {
        case ExprKind::Var:
            if (f->var_index >= args.size())
                throw MismatchError("substitution misses variable u" + std::to_string(f->var_index));
            return args[f->var_index];
        case ExprKind::Const: return f;
        default: {
            ExprNode n(*f);
            for (Expr& k : n.kids) k = expr_substitute(k, args);
            return node(std::move(n));
        }
    }
}

double expr_eval_double(const Expr& e, const std::vector<double>& xs) {
    switch (e->kind) {
        case ExprKind::Var:
            if (e->var_index >= xs.size()) throw MismatchError("too few arguments");
            return xs[e->var_index];
        case ExprKind::Const: return rat_double(e->value);
        case ExprKind::Sum: {
            double s = 0;
            for (const Expr& k : e->kids) s += expr_eval_double(k, xs);
            return s;
        }
        case ExprKind::Prod: {
            double s = 1;
            for (const Expr& k : e->kids) s *= expr_eval_double(k, xs);
            return s;
        }
        case ExprKind::Neg: return -expr_eval_double(e->kids[0], xs);
        case ExprKind::Pow: return std::pow(expr_eval_double(e->kids[0], xs), e->exponent);
        case ExprKind::Func: {
            double a = expr_eval_double(e->kids[0], xs);
            switch (e->func) {
                case ExprFunc::Exp: return std::exp(a);
                case ExprFunc::Log:
                    if (a <= 0) throw DomainError("log of a non-positive value");
                    return std::log(a);
                case ExprFunc::Sin: return std::sin(a);
                case ExprFunc::Cos: return std::cos(a);
                case ExprFunc::Sqrt:
                    if (a <= 0) throw DomainError("sqrt of a non-positive value");
                    return std::sqrt(a);
                case ExprFunc::PowReal:
                    if (a <= 0 && !rat_is_integer(e->real_exponent))
                        throw DomainError("pow of a non-positive base with non-integer exponent");
                    return std::pow(a, rat_double(e->real_exponent));
            }
        }
    }
    throw Error("unreachable expression kind");
}

namespace {

const char* func_name(ExprFunc f) {
    switch (f) {
        case ExprFunc::Exp: return "exp";
        case ExprFunc::Log: return "log";
        case ExprFunc::Sin: return "sin";
        case ExprFunc::Cos: return "cos";
        case ExprFunc::Sqrt: return "sqrt";
        case ExprFunc::PowReal: return "pow";
    }
    return "?";
}

} // namespace

std::string expr_str(const Expr& e) {
    switch (e->kind) {
        case ExprKind::Var: return "u" + std::to_string(e->var_index);
        case ExprKind::Const: return rat_str(e->value);
        case ExprKind::Sum: {
            std::string s = "(";
            for (size_t i = 0; i < e->kids.size(); ++i) {
                if (i) s += " + ";
                s += expr_str(e->kids[i]);
            }
            return s + ")";
        }
        case ExprKind::Prod: {
            std::string s = "(";
            for (size_t i = 0; i < e->kids.size(); ++i) {
                if (i) s += "*";
                s += expr_str(e->kids[i]);
            }
            return s + ")";
        }
        case ExprKind::Neg: return "(-" + expr_str(e->kids[0]) + ")";
        case ExprKind::Pow: return expr_str(e->kids[0]) + "^" + std::to_string(e->exponent);
        case ExprKind::Func:
            if (e->func == ExprFunc::PowReal)
                return "pow(" + expr_str(e->kids[0]) + ", " + rat_str(e->real_exponent) + ")";
            return std::string(func_name(e->func)) + "(" + expr_str(e->kids[0]) + ")";
    }
    return "?";
}

namespace {

class ExprParser {
public:
    explicit ExprParser(const std::string& text) : t_(text) {}

    Expr parse() {
        Expr e = sum();
        ws();
        if (p_ < t_.size()) fail("unexpected character '" + std::string(1, t_[p_]) + "'");
        return e;
    }

private:
    const std::string& t_;
    size_t p_ = 0;
    int line_ = 1, col_ = 1;

    [[noreturn]] void fail(const std::string& m) { throw ParseError(m, line_, col_); }
    void adv() {
        if (t_[p_] == '\n') {
            ++line_;
            col_ = 1;
        } else
            ++col_;
        ++p_;
    }
    void ws() {
        while (p_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[p_]))) adv();
    }
    char peek() {
        ws();
        return p_ < t_.size() ? t_[p_] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) {
            adv();
            return true;
        }
        return false;
    }

    Expr sum() {
        bool neg = false;
        if (eat('-')) neg = true;
        else eat('+');
        Expr acc = term();
        if (neg) acc = ex_neg(acc);
        while (true) {
            char c = peek();
            if (c == '+') {
                eat('+');
                acc = ex_add(acc, term());
            } else if (c == '-') {
                eat('-');
                acc = ex_sub(acc, term());
            } else
                return acc;
        }
    }

    Expr term() {
        Expr acc = factor();
        while (peek() == '*') {
            eat('*');
            acc = ex_mul(acc, factor());
        }
        return acc;
    }

    Expr factor() {
        Expr base = atom();
        if (peek() == '^') {
            eat('^');
            ws();
            if (p_ >= t_.size() || !std::isdigit(static_cast<unsigned char>(t_[p_])))
                fail("expected an exponent");
            unsigned long v = 0;
            while (p_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[p_]))) {
                v = v * 10 + static_cast<unsigned long>(t_[p_] - '0');
                if (v > 64) fail("exponent too large");
                adv();
            }
            return ex_pow(base, static_cast<uint32_t>(v));
        }
        return base;
    }

    Expr atom() {
        char c = peek();
        if (c == '(') {
            eat('(');
            Expr e = sum();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (c == '-') {
            eat('-');
            return ex_neg(atom());
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
        fail("unexpected character '" + std::string(1, c) + "'");
    }

    Expr number() {
        std::string s;
        while (p_ < t_.size() &&
               (std::isdigit(static_cast<unsigned char>(t_[p_])) || t_[p_] == '.' || t_[p_] == '/')) {
            s += t_[p_];
            adv();
        }
        try {
            return ex_const(rat_from_string(s));
        } catch (const Error& e) {
            fail(e.what());
        }
    }

    Rat number_literal() {
        ws();
        std::string s;
        if (peek() == '-') {
            eat('-');
            s = "-";
        }
        while (p_ < t_.size() &&
               (std::isdigit(static_cast<unsigned char>(t_[p_])) || t_[p_] == '.' || t_[p_] == '/')) {
            s += t_[p_];
            adv();
        }
        try {
            return rat_from_string(s);
        } catch (const Error& e) {
            fail(e.what());
        }
    }

    Expr identifier() {
        std::string name;
        while (p_ < t_.size() &&
               (std::isalnum(static_cast<unsigned char>(t_[p_])) || t_[p_] == '_')) {
            name += t_[p_];
            adv();
        }
        if (name.size() >= 2 && name[0] == 'u' &&
            std::all_of(name.begin() + 1, name.end(),
                        [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
            return ex_var(std::stoul(name.substr(1)));
        }
        if (name == "pow") {
            if (!eat('(')) fail("expected '(' after pow");
            Expr base = sum();
            if (!eat(',')) fail("pow takes two arguments");
            Rat r = number_literal();
            if (!eat(')')) fail("expected ')'");
            return ex_pow_real(base, r);
        }
        ExprFunc f;
        if (name == "exp") f = ExprFunc::Exp;
        else if (name == "log") f = ExprFunc::Log;
        else if (name == "sin") f = ExprFunc::Sin;
        else if (name == "cos") f = ExprFunc::Cos;
        else if (name == "sqrt") f = ExprFunc::Sqrt;
        else fail("unknown identifier '" + name + "' (variables are u0, u1, ...)");
        if (!eat('(')) fail("expected '(' after " + name);
        Expr arg = sum();
        if (!eat(')')) fail("expected ')'");
        return ex_func(f, arg);
    }
};

} // namespace

Expr parse_expr(const std::string& text) { return ExprParser(text).parse(); }

} // namespace weil
