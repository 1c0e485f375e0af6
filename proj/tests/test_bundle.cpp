#include <doctest.h>

#include "weil/bundle.hpp"
#include "weil/errors.hpp"

using namespace weil;

namespace {

AlgebraPtr build(const std::string& text) {
    return build_weil_algebra(parse_presentation(text));
}

} // namespace

TEST_CASE("fibered prolongation of trivial bundles") {
    AlgebraPtr WD = build("x | x^2 ; nil 2");
    AlgebraPtr W = build("x,y | x^2, y^2, x*y ; nil 2");

    // vertical tangent bundle of R x R over R: 1 + 1*2 = 3
    CHECK(fibered_prolong({1, 1}, WD).total_linear_dim == 3);
    // zero fiber: the identity bundle
    CHECK(fibered_prolong({4, 0}, W).total_linear_dim == 4);
    // zero base: absolute prolongation R^b (x) W
    CHECK(fibered_prolong({0, 3}, WD).total_linear_dim == 6);
    // W = Q is the identity construction
    CHECK(fibered_prolong({2, 5}, terminal()).total_linear_dim == 7);
}

TEST_CASE("fibered points, projection, linear structure") {
    AlgebraPtr WD = build("x | x^2 ; nil 2");
    FiberedProlongation fp = fibered_prolong({2, 2}, WD);
    WPoint f1 = w_point(WD, {Rat(1), Rat(2)}, {{"x", {Rat(5), Rat(6)}}});
    WPoint f2 = w_point(WD, {Rat(3), Rat(4)}, {{"x", {Rat(7), Rat(8)}}});
    FiberedPoint p = fibered_point(fp, {Rat(9), Rat(10)}, f1);
    FiberedPoint q = fibered_point(fp, {Rat(9), Rat(10)}, f2);
    CHECK(bundle_projection(p) == RatVec{Rat(9), Rat(10)});

    FiberedPoint s = fiber_add(p, q);
    CHECK(s.base == p.base);
    CHECK(s.fiber.coords[0] == WD->parse_element("4 + 12*x"));
    FiberedPoint sc = fiber_scale(rat(1, 2), p);
    CHECK(sc.fiber.coords[1] == WD->parse_element("1 + 3*x"));

    FiberedPoint other = fibered_point(fp, {Rat(0), Rat(0)}, f1);
    CHECK_THROWS_AS(fiber_add(p, other), MismatchError);

    // fiberwise linear maps act through the jet engine and are additive
    std::vector<Expr> L = {parse_expr("u0 + 2*u1"), parse_expr("3*u0 - u1")};
    FiberedPoint lp = apply_fiber_map(L, p), lq = apply_fiber_map(L, q);
    FiberedPoint lsum = apply_fiber_map(L, fiber_add(p, q));
    CHECK(lsum.fiber.coords[0] == (lp.fiber.coords[0] + lq.fiber.coords[0]));
    CHECK(lsum.fiber.coords[1] == (lp.fiber.coords[1] + lq.fiber.coords[1]));
}

TEST_CASE("iterated prolongation carries the fibered tensor blockwise") {
    AlgebraPtr WD = build("x | x^2 ; nil 2");
    AlgebraPtr WD2 = build("x | x^3 ; nil 3");
    AlgebraPtr R = build("| ; nil 1");

    IteratedProlongation it = iterated_prolongation(1, WD, WD);
    CHECK(it.carrier.dim() == 3); // = dim W_D(2)
    CHECK(it.pass());

    // W2 = Q leaves the prolongation unchanged
    IteratedProlongation it2 = iterated_prolongation(3, WD2, R);
    CHECK(it2.carrier.dim() == 9);
    CHECK(it2.pass());

    IteratedProlongation it3 = iterated_prolongation(2, WD2, WD);
    CHECK(it3.carrier.dim() == 2 * (6 - 2 + 1));
    CHECK(it3.pass());
}

TEST_CASE("euclidean law for the tangent functor") {
    for (size_t n = 0; n <= 4; ++n) {
        EuclideanReport r = euclidean_check(n);
        CHECK(r.dim_left == 3 * n);
        CHECK(r.dim_right == 3 * n);
        CHECK(r.pass());
    }
}

TEST_CASE("model-level microlinearity on the stock diagrams") {
    AlgebraPtr WD = build("x | x^2 ; nil 2");
    AlgebraPtr WDxD = build("x,y | x^2, y^2 ; nil 3");

    Diagram single;
    single.nodes.emplace("A", WD);
    CHECK(m_microlinearity_check(1, WD, single).pass());

    Diagram disc;
    disc.nodes.emplace("A", WD);
    disc.nodes.emplace("B", WD);
    MicrolinearityReport r = m_microlinearity_check(1, WD, disc);
    CHECK(r.pass());
    CHECK(r.dim_right == 4); // (R (x) W_D) (x)_M product = R (x) (W_D ~(x) W_D(2) shape)

    Diagram par;
    par.nodes.emplace("A", WDxD);
    par.nodes.emplace("B", WD);
    par.edges.push_back({"A", "B", hom_from_image_strings(WDxD, WD, {"0", "x"})});
    par.edges.push_back({"A", "B", hom_from_image_strings(WDxD, WD, {"0", "0"})});
    CHECK(m_microlinearity_check(1, WD, par).pass());
    CHECK(m_microlinearity_check(2, WDxD, par).pass());
}

TEST_CASE("model-level Weil exponentiability") {
    AlgebraPtr WD = build("x | x^2 ; nil 2");
    AlgebraPtr WD2 = build("x | x^3 ; nil 3");
    AlgebraPtr WDp2 = build("x,y | x^2, y^2, x*y ; nil 2");
    AlgebraPtr R = build("| ; nil 1");

    ExponentiabilityReport r1 = weil_exponentiability_check(1, WD, WD, WD);
    CHECK(r1.pass());
    ExponentiabilityReport r2 = weil_exponentiability_check(2, WD2, R, R);
    CHECK(r2.pass());
    ExponentiabilityReport r3 = weil_exponentiability_check(1, WDp2, WD, WD2);
    CHECK(r3.pass());
}

TEST_CASE("prolongation preserves fibered products of trivial bundles") {
    AlgebraPtr WD2 = build("x | x^3 ; nil 3");
    for (size_t n = 0; n <= 2; ++n)
        for (size_t b = 0; b <= 2; ++b)
            for (size_t c = 0; c <= 2; ++c)
                CHECK(check_prolong_preserves_fibered_product(n, b, c, WD2, 42).pass());
}
