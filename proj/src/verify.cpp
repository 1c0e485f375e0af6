#include "weil/verify.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>

#include "weil/bundle.hpp"
#include "weil/errors.hpp"
#include "weil/oracle.hpp"

namespace weil {

namespace {

AlgebraPtr family_algebra(const std::string& text) {
    return build_weil_algebra(parse_presentation(text));
}

struct SuiteDef {
    std::string name;
    std::string cite;
    std::function<void(SuiteReport&)> run;
};

Rat random_small_rat(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 3);
    return rat(num(rng), den(rng));
}

// random polynomial of total degree <= 4 in `arity` variables, as an Expr
Expr random_poly_expr(std::mt19937_64& rng, size_t arity) {
    std::uniform_int_distribution<int> nterms(1, 4);
    std::uniform_int_distribution<uint32_t> expo(0, 4);
    Expr acc = ex_const(random_small_rat(rng));
    int terms = nterms(rng);
    for (int t = 0; t < terms; ++t) {
        Expr term = ex_const(random_small_rat(rng));
        uint32_t budget = 4;
        for (size_t v = 0; v < arity; ++v) {
            uint32_t e = std::min(expo(rng), budget);
            budget -= e;
            if (e > 0) term = ex_mul(term, ex_pow(ex_var(v), e));
        }
        acc = ex_add(acc, term);
    }
    return acc;
}

WPoint random_wpoint(std::mt19937_64& rng, const AlgebraPtr& W, size_t n) {
    WPoint p;
    p.alg = W;
    for (size_t i = 0; i < n; ++i) {
        RatVec c(W->dim());
        for (Rat& q : c) q = random_small_rat(rng);
        p.coords.push_back(W->element(std::move(c)));
    }
    return p;
}

Json dims_json(size_t a, size_t b) { return Json{{"dim_left", a}, {"dim_right", b}}; }

// ---------------------------------------------------------------- lemma 3-2

void run_lemma_3_2(SuiteReport& rep) {
    AlgebraPtr WDxD = family_algebra("x,y | x^2, y^2 ; nil 3");
    AlgebraPtr WD = family_algebra("x | x^2 ; nil 2");
    AlgebraPtr WDp2 = family_algebra("x,y | x^2, y^2, x*y ; nil 2");

    AlgebraHom f1 = hom_from_image_strings(WDxD, WD, {"0", "x"}); // d |-> (0,d)
    AlgebraHom f2 = hom_from_image_strings(WDxD, WD, {"0", "0"}); // d |-> (0,0)
    LimitResult E = equalizer(f1, f2);

    {
        CheckResult c;
        c.name = "equalizer-subspace";
        c.pass = E.algebra->dim() == 3;
        c.details = Json{{"dim", E.algebra->dim()},
                         {"basis", Json::array({"1", "x", "x*y"})}};
        // the computed echelon basis must consist of exactly 1, x and x*y
        std::vector<std::string> labels = WDxD->basis_labels();
        for (size_t r = 0; r < E.space.dim() && c.pass; ++r) {
            RatVec row = E.space.rows().row(r);
            Element e = WDxD->element(row);
            std::string s = e.str();
            if (s != "1" && s != "x" && s != "x*y") c.pass = false;
        }
        rep.checks.push_back(std::move(c));
    }
    {
        // the hom induced by (d1,d2) |-> (d1, d1 d2) equalizes the pair and is
        // the canonical comparison from W_D(2)
        CheckResult c;
        c.name = "comparison-from-W_D(2)";
        Element gx = WDxD->generator(0);
        Element gxy = multiply(gx, WDxD->generator(1));
        AlgebraHom psi = hom_from_generator_images(WDp2, WDxD, {gx, gxy});
        bool equalizes = compose(f1, psi).matrix() == compose(f2, psi).matrix();
        AlgebraHom u = factor_equalizer(E, psi);
        c.pass = equalizes && u.is_bijective();
        c.details = Json{{"equalizes", equalizes}, {"bijective", u.is_bijective()}};
        rep.checks.push_back(std::move(c));
    }
    {
        // universal property on generated cones: existence and uniqueness
        CheckResult c;
        c.name = "universal-property-cones";
        std::mt19937_64 rng(verify_seed());
        size_t cones = 0;
        bool ok = true;
        // uniqueness of every factorization: the inclusion has full column rank
        ok = ok && E.cone.legs.at("src").matrix().rank() == E.algebra->dim();
        for (const auto& [tname, T] : test_family()) {
            for (int round = 0; round < 2; ++round) {
                std::vector<Element> images;
                for (size_t v = 0; v < T->presentation().nvars(); ++v) {
                    // random element of the equalizer's maximal ideal
                    Element im = random_small_rat(rng) * WDxD->generator(0) +
                                 random_small_rat(rng) *
                                     multiply(WDxD->generator(0), WDxD->generator(1));
                    images.push_back(im);
                }
                AlgebraHom h = hom_from_generator_images(T, WDxD, images);
                if (!(compose(f1, h).matrix() == compose(f2, h).matrix())) {
                    ok = false;
                    continue;
                }
                AlgebraHom u = factor_equalizer(E, h); // throws unless it factors exactly
                ok = ok && compose(E.cone.legs.at("src"), u).matrix() == h.matrix();
                ++cones;
            }
        }
        c.pass = ok && cones >= 10;
        c.details = Json{{"cones", cones}};
        rep.checks.push_back(std::move(c));
    }
}

// ----------------------------------------------------------------- prop 3-3

void run_prop_3_3(SuiteReport& rep) {
    AlgebraPtr WD = family_algebra("x | x^2 ; nil 2");
    AlgebraPtr WDp2 = family_algebra("x,y | x^2, y^2, x*y ; nil 2");
    FiberedTensor FT = fibered_tensor(WD, WD);

    CheckResult c;
    c.name = "fibered-tensor-of-dual-numbers";
    Element gx = FT.tensor.algebra->generator(0);
    Element gy = FT.tensor.algebra->generator(1);
    AlgebraHom psi_amb = hom_from_generator_images(WDp2, FT.tensor.algebra, {gx, multiply(gx, gy)});
    AlgebraHom psi = restrict_hom(full_view(WDp2), FT.view(), psi_amb);
    c.pass = FT.algebra->dim() == 3 && psi.is_bijective();
    c.details = Json{{"dim", FT.algebra->dim()},
                     {"dim_W_D(2)", WDp2->dim()},
                     {"comparison_bijective", psi.is_bijective()}};
    rep.checks.push_back(std::move(c));
}

// ----------------------------------------------------------------- thm 3-1

void run_thm_3_1(SuiteReport& rep) {
    uint64_t seed = verify_seed();
    for (const auto& [wname, W] : test_family()) {
        CheckResult c;
        c.name = "product-preservation-" + wname;
        c.pass = true;
        Json failures = Json::array();
        int cases = 0;
        for (size_t n = 0; n <= 2; ++n)
            for (size_t b = 0; b <= 2; ++b)
                for (size_t fc = 0; fc <= 2; ++fc) {
                    auto r = check_prolong_preserves_fibered_product(n, b, fc, W, seed + cases);
                    ++cases;
                    if (!r.pass()) {
                        c.pass = false;
                        failures.push_back(Json{{"n", n}, {"b", b}, {"c", fc}});
                    }
                }
        c.details = Json{{"cases", cases}, {"failures", failures}};
        rep.checks.push_back(std::move(c));
    }
}

// ----------------------------------------------------------------- thm 3-4

void run_thm_3_4(SuiteReport& rep) {
    for (const auto& [n1, W1] : test_family())
        for (const auto& [n2, W2] : test_family()) {
            CheckResult c;
            c.name = "iterated-prolongation-" + n1 + "-" + n2;
            c.pass = true;
            Json per_n = Json::array();
            for (size_t n = 1; n <= 3; ++n) {
                IteratedProlongation it = iterated_prolongation(n, W1, W2);
                per_n.push_back(Json{{"n", n},
                                     {"carrier_dim", it.carrier.dim()},
                                     {"expected", it.expected_dim},
                                     {"bijective", it.comparison_bijective}});
                c.pass = c.pass && it.pass();
            }
            c.details = Json{{"per_n", std::move(per_n)}};
            if (!c.pass)
                c.details["witness"] = Json{{"W1", W1->presentation().str()},
                                            {"W2", W2->presentation().str()}};
            rep.checks.push_back(std::move(c));
        }
}

// ----------------------------------------------------------------- prop 4-6

void run_prop_4_6(SuiteReport& rep) {
    for (const auto& [n1, W1] : test_family())
        for (const auto& [n2, W2] : test_family())
            for (const auto& [n3, W3] : test_family()) {
                CheckResult c;
                c.name = "assoc-" + n1 + "-" + n2 + "-" + n3;
                AssocReport r = check_fibered_assoc(W1, W2, W3);
                c.pass = r.pass();
                c.details = dims_json(r.dim_left, r.dim_right);
                if (!c.pass) {
                    c.details["witness"] = Json{{"W1", W1->presentation().str()},
                                                {"W2", W2->presentation().str()},
                                                {"W3", W3->presentation().str()}};
                }
                rep.checks.push_back(std::move(c));
            }
}

// ----------------------------------------------------------------- thm 4-7

void run_thm_4_7(SuiteReport& rep) {
    const auto& fam = test_family();
    std::vector<std::pair<std::string, AlgebraPtr>> small(fam.begin(), fam.begin() + 4);
    for (const auto& [nw, W] : small)
        for (const auto& [n1, W1] : small)
            for (const auto& [n2, W2] : small) {
                CheckResult c;
                c.name = "exponentiable-" + nw + "-" + n1 + "-" + n2;
                ExponentiabilityReport r = weil_exponentiability_check(1, W, W1, W2);
                c.pass = r.pass();
                c.details = Json{{"dim_left", r.dim_left},
                                 {"dim_right", r.dim_right},
                                 {"assoc_step", r.step_assoc}};
                rep.checks.push_back(std::move(c));
            }
    // a few instances involving W_DxD and a higher base dimension
    AlgebraPtr WDxD = fam[4].second, WD = fam[1].second, WD2 = fam[2].second;
    struct Extra {
        std::string name;
        size_t n;
        AlgebraPtr a, b, c;
    };
    std::vector<Extra> extras = {{"exponentiable-W_DxD-W_D-W_D", 1, WDxD, WD, WD},
                                 {"exponentiable-W_D-W_DxD-W_D", 1, WD, WDxD, WD},
                                 {"exponentiable-n2-W_D-W_D2-W_D", 2, WD, WD2, WD}};
    for (const Extra& e : extras) {
        CheckResult c;
        c.name = e.name;
        ExponentiabilityReport r = weil_exponentiability_check(e.n, e.a, e.b, e.c);
        c.pass = r.pass();
        c.details = Json{{"dim_left", r.dim_left}, {"dim_right", r.dim_right}};
        rep.checks.push_back(std::move(c));
    }
}

// ---------------------------------------------------------------- lemma 5-7

void run_lemma_5_7(SuiteReport& rep) {
    for (const auto& [wname, W] : test_family())
        for (const auto& [dname, d] : stock_diagrams()) {
            CheckResult c;
            c.name = "limit-swap-" + wname + "-" + dname;
            ComparisonReport r = check_limit_fibered_tensor_swap(W, d);
            c.pass = r.pass();
            c.details = dims_json(r.dim_left, r.dim_right);
            if (!c.pass) c.details["witness"] = Json{{"W", W->presentation().str()}};
            rep.checks.push_back(std::move(c));
        }
}

// ----------------------------------------------------------------- thm 5-6

void run_thm_5_6(SuiteReport& rep) {
    for (const auto& [wname, W] : test_family())
        for (const auto& [dname, d] : stock_diagrams())
            for (size_t n = 1; n <= 2; ++n) {
                CheckResult c;
                c.name = "microlinear-" + wname + "-" + dname + "-n" + std::to_string(n);
                MicrolinearityReport r = m_microlinearity_check(n, W, d);
                c.pass = r.pass();
                c.details = dims_json(r.dim_left, r.dim_right);
                if (!c.pass) c.details["witness"] = Json{{"W", W->presentation().str()}};
                rep.checks.push_back(std::move(c));
            }
}

// ----------------------------------------------------------------- thm 6-6

void run_thm_6_6(SuiteReport& rep) {
    for (size_t n = 0; n <= 4; ++n) {
        CheckResult c;
        c.name = "euclidean-n" + std::to_string(n);
        EuclideanReport r = euclidean_check(n);
        c.pass = r.pass();
        c.details = Json{{"dim_left", r.dim_left},
                         {"dim_right", r.dim_right},
                         {"projection_compatible", r.projection_compatible}};
        rep.checks.push_back(std::move(c));
    }
    {
        // fiberwise linear structure commutes with prolonged linear maps
        CheckResult c;
        c.name = "linear-structure-naturality";
        AlgebraPtr WD = family_algebra("x | x^2 ; nil 2");
        std::mt19937_64 rng(verify_seed() ^ 0x66);
        bool ok = true;
        for (size_t n = 1; n <= 3 && ok; ++n) {
            size_t m = 2;
            for (int round = 0; round < 10 && ok; ++round) {
                // random linear map R^n -> R^m as expressions
                std::vector<Expr> L;
                for (size_t i = 0; i < m; ++i) {
                    Expr row = ex_const(Rat(0));
                    for (size_t j = 0; j < n; ++j)
                        row = ex_add(row, ex_mul(ex_const(random_small_rat(rng)), ex_var(j)));
                    L.push_back(row);
                }
                ProlongedMap PL = prolong_map(L, WD);
                // two tangent vectors over a shared base
                RatVec base(n);
                for (Rat& q : base) q = random_small_rat(rng);
                RatVec v1(n), v2(n);
                for (Rat& q : v1) q = random_small_rat(rng);
                for (Rat& q : v2) q = random_small_rat(rng);
                WPoint p = w_point(WD, base, {{"x", v1}});
                WPoint q = w_point(WD, base, {{"x", v2}});
                // addition of nilpotent parts over the shared base
                WPoint sum = p;
                for (size_t i = 0; i < n; ++i)
                    sum.coords[i] = sum.coords[i] + q.coords[i] - augment(q.coords[i]) * WD->one();
                WPoint lhs = PL(sum);
                WPoint a = PL(p), b = PL(q);
                for (size_t i = 0; i < m; ++i) {
                    Element expect = a.coords[i] + b.coords[i] - augment(b.coords[i]) * WD->one();
                    if (!(lhs.coords[i] == expect)) ok = false;
                }
                // scalar multiplication on the nilpotent part
                Rat s = random_small_rat(rng);
                WPoint sp = p;
                for (size_t i = 0; i < n; ++i) {
                    Rat b0 = augment(sp.coords[i]);
                    sp.coords[i] = b0 * WD->one() + s * (sp.coords[i] - b0 * WD->one());
                }
                WPoint lhs2 = PL(sp);
                for (size_t i = 0; i < m; ++i) {
                    Rat b0 = augment(a.coords[i]);
                    Element expect = b0 * WD->one() + s * (a.coords[i] - b0 * WD->one());
                    if (!(lhs2.coords[i] == expect)) ok = false;
                }
            }
        }
        c.pass = ok;
        c.details = Json{{"rounds", 30}};
        rep.checks.push_back(std::move(c));
    }
}

// -------------------------------------------------------------------- jets

// exact evaluation of a polynomial expression at a rational point,
// independent of the jet path
Rat eval_poly_expr_rat(const Expr& e, const std::vector<Rat>& xs) {
    switch (e->kind) {
        case ExprKind::Var: return xs.at(e->var_index);
        case ExprKind::Const: return e->value;
        case ExprKind::Sum: {
            Rat s = 0;
            for (const Expr& k : e->kids) s += eval_poly_expr_rat(k, xs);
            return s;
        }
        case ExprKind::Prod: {
            Rat s = 1;
            for (const Expr& k : e->kids) s *= eval_poly_expr_rat(k, xs);
            return s;
        }
        case ExprKind::Neg: return -eval_poly_expr_rat(e->kids[0], xs);
        case ExprKind::Pow: return rat_pow_int(eval_poly_expr_rat(e->kids[0], xs), e->exponent);
        default: throw ModeError("not a polynomial expression");
    }
}

void run_jets(SuiteReport& rep) {
    std::mt19937_64 rng(verify_seed());

    for (const auto& [wname, W] : test_family()) {
        CheckResult c;
        c.name = "functor-laws-" + wname;
        bool ok = true;
        for (int round = 0; round < 100 && ok; ++round) {
            WPoint p = random_wpoint(rng, W, 2);
            Expr f = random_poly_expr(rng, 2);
            Expr g0 = random_poly_expr(rng, 2);
            Expr g1 = random_poly_expr(rng, 2);

            // identity
            ProlongedMap idm = prolong_map({ex_var(0), ex_var(1)}, W);
            WPoint idp = idm(p);
            ok = ok && idp.coords[0] == p.coords[0] && idp.coords[1] == p.coords[1];

            // composition f . (g0, g1)
            Expr comp = expr_substitute(f, {g0, g1});
            Element lhs = eval_jet(comp, p);
            ProlongedMap gm = prolong_map({g0, g1}, W);
            Element rhs = eval_jet(f, gm(p));
            ok = ok && lhs == rhs;

            // pairing
            ProlongedMap pair = prolong_map({f, g0}, W);
            WPoint pr = pair(p);
            ok = ok && pr.coords[0] == eval_jet(f, p) && pr.coords[1] == eval_jet(g0, p);

            // base-point compatibility: aug . eval = classical evaluation
            std::vector<Rat> base = base_point(p);
            ok = ok && augment(lhs) == eval_poly_expr_rat(comp, base);

            if (!ok) {
                // reproduction witness for the failing round
                Json point = Json::array();
                for (const Element& e : p.coords) point.push_back(e.str());
                c.details = Json{{"round", round},
                                 {"f", expr_str(f)},
                                 {"g0", expr_str(g0)},
                                 {"g1", expr_str(g1)},
                                 {"point", point},
                                 {"algebra", W->presentation().str()}};
            }
        }
        c.pass = ok;
        if (ok) c.details = Json{{"rounds", 100}};
        rep.checks.push_back(std::move(c));
    }

    {
        // naturality in W for coordinatewise homs
        CheckResult c;
        c.name = "naturality-in-W";
        const auto& fam = test_family();
        AlgebraPtr WD = fam[1].second, WD2 = fam[2].second, WDxD = fam[4].second;
        std::vector<AlgebraHom> homs;
        for (const auto& [nm, W] : fam) homs.push_back(augmentation_hom(W, terminal()));
        homs.push_back(hom_from_image_strings(WD, WD2, {"x^2"})); // d in D2 |-> d^2 in D
        homs.push_back(hom_from_image_strings(WD2, WD, {"x"}));   // truncation
        homs.push_back(hom_from_image_strings(WD, WD, {"-1*x"})); // d |-> -d
        homs.push_back(hom_from_image_strings(WDxD, WD, {"0", "x"}));
        homs.push_back(hom_from_image_strings(WD, WDxD, {"y"}));
        bool ok = true;
        for (const AlgebraHom& phi : homs)
            for (int round = 0; round < 20 && ok; ++round) {
                WPoint p = random_wpoint(rng, phi.src(), 2);
                Expr f = random_poly_expr(rng, 2);
                Element lhs = phi.apply(eval_jet(f, p));
                WPoint pp;
                pp.alg = phi.dst();
                for (const Element& e : p.coords) pp.coords.push_back(phi.apply(e));
                Element rhs = eval_jet(f, pp);
                ok = ok && lhs == rhs;
            }
        c.pass = ok;
        c.details = Json{{"homs", homs.size()}, {"rounds_each", 20}};
        rep.checks.push_back(std::move(c));
    }

    {
        // Taylor coefficients against the symbolic-differentiation oracle
        CheckResult c;
        c.name = "taylor-symbolic-oracle";
        struct Case {
            std::string text;
            double x0;
        };
        std::vector<Case> cases = {{"exp(u0)", 0.0},      {"exp(u0)", 0.5},
                                   {"sin(u0)", 0.0},      {"sin(u0)", 0.7},
                                   {"log(1 + u0)", 0.0},  {"log(1 + u0)", 0.3},
                                   {"exp(sin(u0))", 0.2}, {"sqrt(1 + u0)", 0.5}};
        bool ok = true;
        Json detail = Json::array();
        for (const Case& cs : cases) {
            Expr f = parse_expr(cs.text);
            std::vector<double> jet = taylor_coefficients_float(f, cs.x0, 6);
            std::vector<double> orc = oracle::taylor_by_symbolic_diff(f, cs.x0, 6);
            bool match = true;
            for (size_t j = 0; j <= 6; ++j) match = match && approx_equal(jet[j], orc[j], 1e-10);
            ok = ok && match;
            detail.push_back(Json{{"f", cs.text}, {"x0", cs.x0}, {"match", match}});
        }
        c.pass = ok;
        c.details = std::move(detail);
        rep.checks.push_back(std::move(c));
    }

    {
        // first jet coefficient against central finite differences
        CheckResult c;
        c.name = "first-jet-central-differences";
        struct Case {
            std::string text;
            double x0;
        };
        std::vector<Case> cases = {{"exp(u0)", 0.3},          {"sin(u0)", 1.1},
                                   {"cos(u0)", 0.4},          {"log(1 + u0)", 0.5},
                                   {"sqrt(1 + u0)", 0.2},     {"u0^3 + 2*u0", 0.9},
                                   {"exp(u0)*sin(u0)", 0.6},  {"pow(1 + u0^2, 1/2)", 0.8}};
        AlgebraPtr WD = test_family()[1].second;
        bool ok = true;
        for (const Case& cs : cases) {
            Expr f = parse_expr(cs.text);
            std::vector<double> v = eval_jet_float(f, WD, {{cs.x0, 1.0}});
            double fd = oracle::central_difference(f, cs.x0);
            ok = ok && approx_equal(v[1], fd, 1e-6);
        }
        c.pass = ok;
        c.details = Json{{"cases", cases.size()}};
        rep.checks.push_back(std::move(c));
    }

    {
        // truncation consistency: evaluate at order k+1, truncate, compare
        CheckResult c;
        c.name = "truncation-consistency";
        bool ok = true;
        for (uint32_t k = 1; k <= 4 && ok; ++k) {
            AlgebraPtr big = jet_line(k + 1), small = jet_line(k);
            AlgebraHom trunc = hom_from_image_strings(big, small, {"x"});
            for (int round = 0; round < 10 && ok; ++round) {
                Expr f = random_poly_expr(rng, 1);
                WPoint p = random_wpoint(rng, big, 1);
                Element over_big = eval_jet(f, p);
                WPoint ps;
                ps.alg = small;
                ps.coords = {trunc.apply(p.coords[0])};
                Element over_small = eval_jet(f, ps);
                ok = ok && trunc.apply(over_big) == over_small;
            }
        }
        c.pass = ok;
        c.details = Json{{"orders", "1..4"}};
        rep.checks.push_back(std::move(c));
    }

    {
        // frozen expected values
        CheckResult c;
        c.name = "taylor-frozen-examples";
        bool ok = true;
        std::vector<Rat> cube = taylor_coefficients(parse_expr("u0^3"), Rat(1), 3);
        ok = ok && cube == std::vector<Rat>{Rat(1), Rat(3), Rat(3), Rat(1)};
        std::vector<Rat> cst = taylor_coefficients(parse_expr("7/2"), Rat(2), 3);
        ok = ok && cst == std::vector<Rat>{rat(7, 2), Rat(0), Rat(0), Rat(0)};
        std::vector<double> sine = taylor_coefficients_float(parse_expr("sin(u0)"), 0.0, 5);
        std::vector<double> expect = {0, 1, 0, -1.0 / 6, 0, 1.0 / 120};
        for (size_t j = 0; j <= 5; ++j) ok = ok && std::abs(sine[j] - expect[j]) <= 1e-12;
        std::vector<Rat> es = taylor_coefficients(parse_expr("exp(u0)"), Rat(0), 3);
        ok = ok && es == std::vector<Rat>{Rat(1), Rat(1), rat(1, 2), rat(1, 6)};
        c.pass = ok;
        c.details = Json{{"examples", 4}};
        rep.checks.push_back(std::move(c));
    }
}

const std::vector<SuiteDef>& suite_defs() {
    static const std::vector<SuiteDef> defs = {
        {"lemma-3-2", "W_D(2) -> W_DxD => W_D is an equalizer diagram", run_lemma_3_2},
        {"prop-3-3", "W_D ~(x) W_D = W_D(2)", run_prop_3_3},
        {"thm-3-1", "(E x_M F) (x)_M W = (E (x)_M W) x_M (F (x)_M W)", run_thm_3_1},
        {"thm-3-4", "(M (x) W1) (x)_M W2 = M (x) (W1 ~(x) W2)", run_thm_3_4},
        {"prop-4-6", "(W1 ~(x) W2) ~(x) W3 = W1 ~(x) (W2 (x) W3)", run_prop_4_6},
        {"thm-4-7", "((M (x) W) (x)_M W1) (x)_M W2 = (M (x) W) (x)_M (W1 (x) W2)", run_thm_4_7},
        {"lemma-5-7", "Lim (W ~(x) D) = W ~(x) Lim D", run_lemma_5_7},
        {"thm-5-6", "Lim ((M (x) W) (x)_M D) = (M (x) W) (x)_M Lim D", run_thm_5_6},
        {"thm-6-6", "E (x)_M W_D = E x_M E for E = M (x) W_D", run_thm_6_6},
        {"jets", "functor laws and Taylor coefficients of jet evaluation", run_jets},
    };
    return defs;
}

} // namespace

bool SuiteReport::ok() const {
    for (const CheckResult& c : checks)
        if (!c.pass) return false;
    return true;
}

Json SuiteReport::to_json() const {
    Json j;
    j["suite"] = suite;
    Json arr = Json::array();
    for (const CheckResult& c : checks)
        arr.push_back(Json{{"name", c.name},
                           {"cite", c.cite},
                           {"status", c.pass ? "pass" : "fail"},
                           {"details", c.details}});
    j["checks"] = std::move(arr);
    j["duration_ms"] = duration_ms;
    return j;
}

void SuiteReport::print_table(std::ostream& os) const {
    os << "suite " << suite << "  (" << duration_ms << " ms)\n";
    for (const CheckResult& c : checks) {
        os << "  " << (c.pass ? "pass" : "FAIL") << "  " << c.name;
        if (c.details.is_object()) {
            if (c.details.contains("dim_left"))
                os << "  [" << c.details.at("dim_left").dump() << " = "
                   << c.details.at("dim_right").dump() << "]";
            else if (c.details.contains("dim"))
                os << "  [dim " << c.details.at("dim").dump() << "]";
        }
        if (!c.pass) os << "  " << c.details.dump();
        os << "\n";
    }
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const SuiteDef& d : suite_defs()) out.push_back(d.name);
        return out;
    }();
    return names;
}

const std::string& suite_cite(const std::string& name) {
    for (const SuiteDef& d : suite_defs())
        if (d.name == name) return d.cite;
    throw UnknownSuiteError("unknown suite '" + name + "'");
}

SuiteReport run_suite(const std::string& name) {
    for (const SuiteDef& d : suite_defs()) {
        if (d.name != name) continue;
        SuiteReport rep;
        rep.suite = name;
        auto t0 = std::chrono::steady_clock::now();
        d.run(rep);
        auto t1 = std::chrono::steady_clock::now();
        rep.duration_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
        for (CheckResult& c : rep.checks) c.cite = d.cite;
        return rep;
    }
    throw UnknownSuiteError("unknown suite '" + name + "'");
}

std::vector<SuiteReport> run_all_suites() {
    std::vector<SuiteReport> out;
    for (const std::string& n : suite_names()) out.push_back(run_suite(n));
    return out;
}

const std::vector<std::pair<std::string, AlgebraPtr>>& test_family() {
    static const std::vector<std::pair<std::string, AlgebraPtr>> fam = {
        {"Q", family_algebra("| ; nil 1")},
        {"W_D", family_algebra("x | x^2 ; nil 2")},
        {"W_D2", family_algebra("x | x^3 ; nil 3")},
        {"W_D(2)", family_algebra("x,y | x^2, y^2, x*y ; nil 2")},
        {"W_DxD", family_algebra("x,y | x^2, y^2 ; nil 3")},
    };
    return fam;
}

std::vector<std::pair<std::string, Diagram>> stock_diagrams() {
    const auto& fam = test_family();
    AlgebraPtr WD = fam[1].second, WDxD = fam[4].second;

    Diagram single;
    single.nodes.emplace("A", WD);

    Diagram discrete;
    discrete.nodes.emplace("A", WD);
    discrete.nodes.emplace("B", WD);

    Diagram parallel;
    parallel.nodes.emplace("A", WDxD);
    parallel.nodes.emplace("B", WD);
    parallel.edges.push_back({"A", "B", hom_from_image_strings(WDxD, WD, {"0", "x"})});
    parallel.edges.push_back({"A", "B", hom_from_image_strings(WDxD, WD, {"0", "0"})});

    return {{"single", single}, {"discrete-pair", discrete}, {"parallel-pair", parallel}};
}

uint64_t verify_seed() {
    if (const char* env = std::getenv("WEIL_VERIFY_SEED")) {
        try {
            return std::stoull(env);
        } catch (...) {
            throw Error("WEIL_VERIFY_SEED must be an unsigned integer");
        }
    }
    return 0xC0FFEEull;
}

} // namespace weil
