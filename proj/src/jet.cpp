#include "weil/jet.hpp"

#include <cmath>

#include "weil/errors.hpp"

namespace weil {

WPoint w_point(const AlgebraPtr& W, const RatVec& base,
               const std::map<std::string, RatVec>& infinitesimal) {
    size_t n = base.size();
    std::vector<RatVec> coords(n, RatVec(W->dim(), Rat(0)));
    for (size_t i = 0; i < n; ++i) coords[i][0] = base[i];
    for (const auto& [label, vec] : infinitesimal) {
        if (vec.size() != n) throw MismatchError("nilpotent part '" + label + "' has wrong length");
        size_t idx = W->dim();
        for (size_t b = 1; b < W->dim(); ++b)
            if (W->basis_label(b) == label) {
                idx = b;
                break;
            }
        if (idx == W->dim())
            throw MismatchError("'" + label + "' is not a non-unit basis monomial of the algebra");
        for (size_t i = 0; i < n; ++i) coords[i][idx] = vec[i];
    }
    WPoint p;
    p.alg = W;
    for (size_t i = 0; i < n; ++i) p.coords.push_back(W->element(std::move(coords[i])));
    return p;
}

RatVec base_point(const WPoint& p) {
    RatVec out;
    out.reserve(p.coords.size());
    for (const Element& e : p.coords) out.push_back(augment(e));
    return out;
}

namespace {

// Taylor coefficients g^(j)(a0)/j! for j < count, exact.  ModeError when a
// coefficient is irrational, DomainError outside the smooth domain.
std::vector<Rat> exact_series(ExprFunc f, const Rat& r, const Rat& a0, uint32_t count) {
    std::vector<Rat> c(count, Rat(0));
    switch (f) {
        case ExprFunc::Exp:
            if (a0 != 0) throw ModeError("exact mode: exp requires base point 0");
            for (uint32_t j = 0; j < count; ++j) c[j] = 1 / rat_factorial(j);
            return c;
        case ExprFunc::Log:
            if (a0 <= 0) throw DomainError("log at a non-positive base point");
            if (a0 != 1) throw ModeError("exact mode: log requires base point 1");
            for (uint32_t j = 1; j < count; ++j)
                c[j] = rat(j % 2 == 1 ? 1 : -1, static_cast<long>(j));
            return c;
        case ExprFunc::Sin:
            if (a0 != 0) throw ModeError("exact mode: sin requires base point 0");
            for (uint32_t j = 1; j < count; j += 2)
                c[j] = Rat((j / 2) % 2 == 0 ? 1 : -1) / rat_factorial(j);
            return c;
        case ExprFunc::Cos:
            if (a0 != 0) throw ModeError("exact mode: cos requires base point 0");
            for (uint32_t j = 0; j < count; j += 2)
                c[j] = Rat((j / 2) % 2 == 0 ? 1 : -1) / rat_factorial(j);
            return c;
        case ExprFunc::Sqrt: {
            if (a0 <= 0) throw DomainError("sqrt at a non-positive base point");
            auto s = rat_sqrt_exact(a0);
            if (!s) throw ModeError("exact mode: sqrt of a base point that is not a rational square");
            for (uint32_t j = 0; j < count; ++j)
                c[j] = rat_binomial(rat(1, 2), j) * (*s) / rat_pow_int(a0, j);
            return c;
        }
        case ExprFunc::PowReal: {
            if (a0 == 0) {
                if (!rat_is_integer(r) || r < 0)
                    throw DomainError("pow at base point 0 needs a nonnegative integer exponent");
                unsigned long e = mpz_class(r.get_num()).get_ui();
                if (e < count) c[e] = 1;
                return c;
            }
            if (rat_is_integer(r)) {
                long e = static_cast<long>(mpz_get_si(r.get_num().get_mpz_t()));
                for (uint32_t j = 0; j < count; ++j)
                    c[j] = rat_binomial(r, j) * rat_pow_int(a0, e - static_cast<long>(j));
                return c;
            }
            if (a0 == 1) {
                for (uint32_t j = 0; j < count; ++j) c[j] = rat_binomial(r, j);
                return c;
            }
            if (a0 < 0) throw DomainError("pow of a negative base with non-integer exponent");
            throw ModeError("exact mode: pow with non-integer exponent requires base point 1");
        }
    }
    throw Error("unreachable function kind");
}

std::vector<double> float_series(ExprFunc f, const Rat& r, double a0, uint32_t count) {
    std::vector<double> c(count, 0.0);
    auto fact = [](uint32_t j) {
        double v = 1;
        for (uint32_t i = 2; i <= j; ++i) v *= i;
        return v;
    };
    switch (f) {
        case ExprFunc::Exp: {
            double e = std::exp(a0);
            for (uint32_t j = 0; j < count; ++j) c[j] = e / fact(j);
            return c;
        }
        case ExprFunc::Log: {
            if (a0 <= 0) throw DomainError("log at a non-positive base point");
            c[0] = std::log(a0);
            double ap = a0;
            for (uint32_t j = 1; j < count; ++j, ap *= a0)
                c[j] = (j % 2 == 1 ? 1.0 : -1.0) / (j * ap);
            return c;
        }
        case ExprFunc::Sin:
        case ExprFunc::Cos: {
            double s = std::sin(a0), k = std::cos(a0);
            double cycle[4] = {s, k, -s, -k}; // sin and its derivatives
            uint32_t off = (f == ExprFunc::Cos) ? 1 : 0;
            for (uint32_t j = 0; j < count; ++j) c[j] = cycle[(j + off) % 4] / fact(j);
            return c;
        }
        case ExprFunc::Sqrt: {
            if (a0 <= 0) throw DomainError("sqrt at a non-positive base point");
            for (uint32_t j = 0; j < count; ++j)
                c[j] = rat_double(rat_binomial(rat(1, 2), j)) * std::pow(a0, 0.5 - j);
            return c;
        }
        case ExprFunc::PowReal: {
            double rx = rat_double(r);
            if (a0 == 0) {
                if (!rat_is_integer(r) || r < 0)
                    throw DomainError("pow at base point 0 needs a nonnegative integer exponent");
                unsigned long e = mpz_class(r.get_num()).get_ui();
                if (e < count) c[e] = 1;
                return c;
            }
            if (a0 < 0 && !rat_is_integer(r))
                throw DomainError("pow of a negative base with non-integer exponent");
            for (uint32_t j = 0; j < count; ++j)
                c[j] = rat_double(rat_binomial(r, j)) * std::pow(a0, rx - j);
            return c;
        }
    }
    throw Error("unreachable function kind");
}

Element eval_exact(const Expr& e, const WPoint& p) {
    const AlgebraPtr& W = p.alg;
    switch (e->kind) {
        case ExprKind::Var:
            if (e->var_index >= p.coords.size())
                throw MismatchError("expression arity exceeds the W-point dimension");
            return p.coords[e->var_index];
        case ExprKind::Const: return e->value * W->one();
        case ExprKind::Sum: {
            Element acc = W->zero();
            for (const Expr& k : e->kids) acc = acc + eval_exact(k, p);
            return acc;
        }
        case ExprKind::Prod: {
            Element acc = W->one();
            for (const Expr& k : e->kids) acc = multiply(acc, eval_exact(k, p));
            return acc;
        }
        case ExprKind::Neg: return -eval_exact(e->kids[0], p);
        case ExprKind::Pow: return element_pow(eval_exact(e->kids[0], p), e->exponent);
        case ExprKind::Func: {
            Element a = eval_exact(e->kids[0], p);
            Rat a0 = augment(a);
            Element h = a - a0 * W->one();
            uint32_t nu = *nilpotency_index(h); // aug(h) = 0, so always defined
            std::vector<Rat> c = exact_series(e->func, e->real_exponent, a0, nu);
            Element acc = W->zero();
            Element hp = W->one();
            for (uint32_t j = 0; j < nu; ++j) {
                acc = acc + c[j] * hp;
                hp = multiply(hp, h);
            }
            return acc;
        }
    }
    throw Error("unreachable expression kind");
}

using DVec = std::vector<double>;

DVec dmul(const WeilAlgebra& A, const DVec& a, const DVec& b) {
    DVec out(A.dim(), 0.0);
    for (size_t i = 0; i < A.dim(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < A.dim(); ++j) {
            if (b[j] == 0) continue;
            for (const auto& [t, v] : A.product(i, j)) out[t] += a[i] * b[j] * rat_double(v);
        }
    }
    return out;
}

DVec eval_float(const Expr& e, const AlgebraPtr& W, const std::vector<DVec>& coords) {
    size_t d = W->dim();
    switch (e->kind) {
        case ExprKind::Var:
            if (e->var_index >= coords.size())
                throw MismatchError("expression arity exceeds the W-point dimension");
            return coords[e->var_index];
        case ExprKind::Const: {
            DVec v(d, 0.0);
            v[0] = rat_double(e->value);
            return v;
        }
        case ExprKind::Sum: {
            DVec acc(d, 0.0);
            for (const Expr& k : e->kids) {
                DVec v = eval_float(k, W, coords);
                for (size_t i = 0; i < d; ++i) acc[i] += v[i];
            }
            return acc;
        }
        case ExprKind::Prod: {
            DVec acc(d, 0.0);
            acc[0] = 1;
            for (const Expr& k : e->kids) acc = dmul(*W, acc, eval_float(k, W, coords));
            return acc;
        }
        case ExprKind::Neg: {
            DVec v = eval_float(e->kids[0], W, coords);
            for (double& x : v) x = -x;
            return v;
        }
        case ExprKind::Pow: {
            DVec b = eval_float(e->kids[0], W, coords);
            DVec acc(d, 0.0);
            acc[0] = 1;
            for (uint32_t i = 0; i < e->exponent; ++i) acc = dmul(*W, acc, b);
            return acc;
        }
        case ExprKind::Func: {
            DVec a = eval_float(e->kids[0], W, coords);
            double a0 = a[0];
            DVec h = a;
            h[0] = 0;
            // the exact nilpotency bound of the whole maximal ideal serves as
            // the truncation order in float mode
            uint32_t nu = W->max_ideal_nilpotency();
            std::vector<double> c = float_series(e->func, e->real_exponent, a0, nu);
            DVec acc(d, 0.0);
            DVec hp(d, 0.0);
            hp[0] = 1;
            for (uint32_t j = 0; j < nu; ++j) {
                for (size_t i = 0; i < d; ++i) acc[i] += c[j] * hp[i];
                hp = dmul(*W, hp, h);
            }
            return acc;
        }
    }
    throw Error("unreachable expression kind");
}

} // namespace

Element eval_jet(const Expr& f, const WPoint& p) {
    for (const Element& e : p.coords)
        if (!same_algebra(e.alg, p.alg)) throw MismatchError("W-point coordinates disagree on the algebra");
    return eval_exact(f, p);
}

std::vector<double> eval_jet_float(const Expr& f, const AlgebraPtr& W,
                                   const std::vector<std::vector<double>>& coords) {
    for (const auto& c : coords)
        if (c.size() != W->dim()) throw MismatchError("float coordinates have the wrong length");
    return eval_float(f, W, coords);
}

WPoint ProlongedMap::operator()(const WPoint& p) const {
    if (!same_algebra(p.alg, W)) throw MismatchError("W-point lives over a different algebra");
    WPoint out;
    out.alg = p.alg;
    out.coords.reserve(components.size());
    for (const Expr& f : components) out.coords.push_back(eval_jet(f, p));
    return out;
}

ProlongedMap prolong_map(std::vector<Expr> components, AlgebraPtr W) {
    return ProlongedMap{std::move(components), std::move(W)};
}

AlgebraPtr jet_line(uint32_t k) {
    Presentation p;
    p.vars = {"x"};
    Poly rel(1);
    rel.add_term(Monomial::var(1, 0, k + 1), 1);
    p.relations = {rel};
    p.nilpotency_bound = k + 1;
    return build_weil_algebra(p);
}

std::vector<Rat> taylor_coefficients(const Expr& f, const Rat& x0, uint32_t k) {
    if (expr_arity(f) > 1) throw MismatchError("taylor_coefficients needs a unary expression");
    AlgebraPtr J = jet_line(k);
    RatVec c(J->dim(), Rat(0));
    c[0] = x0;
    if (k >= 1) c[1] = 1; // x0 + x
    WPoint p;
    p.alg = J;
    p.coords = {J->element(std::move(c))};
    return eval_jet(f, p).c;
}

std::vector<double> taylor_coefficients_float(const Expr& f, double x0, uint32_t k) {
    if (expr_arity(f) > 1) throw MismatchError("taylor_coefficients needs a unary expression");
    AlgebraPtr J = jet_line(k);
    std::vector<double> c(J->dim(), 0.0);
    c[0] = x0;
    if (k >= 1) c[1] = 1;
    return eval_jet_float(f, J, {c});
}

RatVec ProlongationSpace::project(const WPoint& p) const {
    if (p.arity() != n || !same_algebra(p.alg, W)) throw MismatchError("point is not in this space");
    return base_point(p);
}

std::vector<WPoint> ProlongationSpace::split(const WPoint& p) const {
    if (p.arity() != n || !same_algebra(p.alg, W)) throw MismatchError("point is not in this space");
    std::vector<WPoint> out;
    out.reserve(n);
    for (size_t i = 0; i < n; ++i) out.push_back(WPoint{p.alg, {p.coords[i]}});
    return out;
}

WPoint ProlongationSpace::join(const std::vector<WPoint>& parts) const {
    if (parts.size() != n) throw MismatchError("wrong number of parts");
    WPoint out;
    out.alg = W;
    for (const WPoint& q : parts) {
        if (q.arity() != 1 || !same_algebra(q.alg, W)) throw MismatchError("part is not a line point");
        out.coords.push_back(q.coords[0]);
    }
    return out;
}

ProlongationSpace prolongation_space(size_t n, AlgebraPtr W) {
    ProlongationSpace s;
    s.n = n;
    s.linear_dim = n * W->dim();
    s.W = std::move(W);
    return s;
}

bool approx_equal(double a, double b, double rel_tol) {
    double scale = std::max({std::abs(a), std::abs(b), 1.0});
    return std::abs(a - b) <= rel_tol * scale;
}

} // namespace weil
