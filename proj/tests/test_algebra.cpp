#include <doctest.h>

#include <algorithm>
#include <random>

#include "weil/algebra.hpp"
#include "weil/errors.hpp"

using namespace weil;

namespace {

AlgebraPtr build(const std::string& text) {
    return build_weil_algebra(parse_presentation(text));
}

} // namespace

TEST_CASE("the named algebras have the expected bases") {
    AlgebraPtr WD = build("x | x^2 ; nil 2");
    CHECK(WD->dim() == 2);
    CHECK(WD->basis_labels() == std::vector<std::string>{"1", "x"});

    AlgebraPtr WD2 = build("x | x^3 ; nil 3");
    CHECK(WD2->dim() == 3);
    CHECK(WD2->basis_labels() == std::vector<std::string>{"1", "x", "x^2"});

    AlgebraPtr WDp2 = build("x,y | x^2, y^2, x*y ; nil 2");
    CHECK(WDp2->dim() == 3);
    CHECK(WDp2->basis_labels() == std::vector<std::string>{"1", "x", "y"});
    CHECK(multiply(WDp2->generator(0), WDp2->generator(0)).is_zero());
    CHECK(multiply(WDp2->generator(1), WDp2->generator(1)).is_zero());
    CHECK(multiply(WDp2->generator(0), WDp2->generator(1)).is_zero());

    AlgebraPtr R = build("| ; nil 1");
    CHECK(R->dim() == 1);
    CHECK(R->max_ideal_nilpotency() == 1);
}

TEST_CASE("a relation can rewrite a generator: x^2 = y") {
    // Q[x,y]/(x^2 - y, y^2) is Q[x]/(x^4) in disguise
    AlgebraPtr A = build("x,y | x^2 - y, y^2 ; nil 4");
    CHECK(A->dim() == 4);
    CHECK(A->basis_labels() == std::vector<std::string>{"1", "x", "y", "x*y"});
    Element x = A->generator(0), y = A->generator(1);
    CHECK(multiply(x, x) == y);
    CHECK(multiply(x, y) == A->parse_element("x*y"));
    CHECK(multiply(y, y).is_zero());                  // x^4 = 0
    CHECK(multiply(x, multiply(x, y)).is_zero());     // x^4 again
    CHECK(*nilpotency_index(x) == 4);
}

TEST_CASE("multiplication, augmentation, nilpotency examples") {
    AlgebraPtr WD = build("x | x^2 ; nil 2");
    AlgebraPtr WD2 = build("x | x^3 ; nil 3");
    AlgebraPtr WDp2 = build("x,y | x^2, y^2, x*y ; nil 2");

    // (1+x)^2 = 1 + 2x + x^2 in W_D2
    Element u = WD2->one() + WD2->generator(0);
    CHECK(multiply(u, u) == WD2->parse_element("1 + 2*x + x^2"));

    // x*x = 0 in W_D
    CHECK(multiply(WD->generator(0), WD->generator(0)).is_zero());

    CHECK(augment(WD->parse_element("3 + 5*x")) == Rat(3));
    CHECK(augment(WD2->parse_element("x^2")) == Rat(0));
    CHECK(augment(WD->zero()) == Rat(0));

    CHECK(*nilpotency_index(WD2->generator(0)) == 3);
    CHECK(!nilpotency_index(WD->one() + WD->generator(0)).has_value());
    CHECK(*nilpotency_index(WDp2->parse_element("x + y")) == 2);
    CHECK(*nilpotency_index(WD->zero()) == 1);
}

TEST_CASE("algebra mismatch is detected") {
    AlgebraPtr WD = build("x | x^2 ; nil 2");
    AlgebraPtr WD2 = build("x | x^3 ; nil 3");
    CHECK_THROWS_AS(multiply(WD->one(), WD2->one()), MismatchError);
    // structurally equal algebras interoperate
    AlgebraPtr WDagain = build("x | x^2 ; nil 2");
    CHECK(multiply(WD->generator(0), WDagain->generator(0)).is_zero());
}

TEST_CASE("build is independent of relation order") {
    AlgebraPtr a = build("x,y | x^2, y^2, x*y ; nil 2");
    AlgebraPtr b = build("x,y | x*y, y^2, x^2 ; nil 2");
    REQUIRE(a->dim() == b->dim());
    CHECK(a->basis_labels() == b->basis_labels());
    for (size_t i = 0; i < a->dim(); ++i)
        for (size_t j = 0; j < a->dim(); ++j) CHECK(a->product(i, j) == b->product(i, j));

    AlgebraPtr c = build("x,y | x^2 - y, y^2 ; nil 4");
    AlgebraPtr d = build("x,y | y^2, x^2 - y ; nil 4");
    CHECK(c->basis_labels() == d->basis_labels());
    for (size_t i = 0; i < c->dim(); ++i)
        for (size_t j = 0; j < c->dim(); ++j) CHECK(c->product(i, j) == d->product(i, j));
}

TEST_CASE("random relation permutations never change the structure table") {
    std::mt19937_64 rng(0x9e3779b9);
    const std::vector<std::string> texts = {
        "x,y | x^2 - y, y^2, x*y^2 ; nil 4",
        "x,y,z | x^2, y^2, z^2, x*y - z ; nil 4",
        "x,y | x^3, y^2, x^2*y ; nil 4",
    };
    for (const std::string& text : texts) {
        Presentation base = parse_presentation(text);
        AlgebraPtr ref = build_weil_algebra(base);
        for (int round = 0; round < 5; ++round) {
            Presentation perm = base;
            std::shuffle(perm.relations.begin(), perm.relations.end(), rng);
            AlgebraPtr got = build_weil_algebra(perm);
            REQUIRE(got->dim() == ref->dim());
            CHECK(got->basis_labels() == ref->basis_labels());
            for (size_t i = 0; i < ref->dim(); ++i)
                for (size_t j = 0; j < ref->dim(); ++j)
                    CHECK(got->product(i, j) == ref->product(i, j));
        }
    }
}

TEST_CASE("inconsistent nilpotency bounds are rejected") {
    // X^3 does not kill degree-2 monomials, so nil 2 misdescribes the ideal
    CHECK_THROWS_AS(build("x | x^3 ; nil 2"), NotWeilError);
    // here nil 2 is fine: x^2 is a relation
    CHECK(build("x | x^2 ; nil 2")->dim() == 2);
    // a generator that is forced to zero is consistent
    CHECK(build("x | x ; nil 1")->dim() == 1);
}

TEST_CASE("elements print like polynomials") {
    AlgebraPtr WD2 = build("x | x^3 ; nil 3");
    CHECK(WD2->parse_element("1 + 2*x - 1/2*x^2").str() == "1 + 2*x - 1/2*x^2");
    CHECK(WD2->zero().str() == "0");
    CHECK(WD2->parse_element("(1 + x)^2").str() == "1 + 2*x + x^2");
}

TEST_CASE("hand-built presentations go through the same validation") {
    Presentation p;
    p.vars = {"x"};
    Poly bad(1);
    bad.add_term(Monomial(1), Rat(1));        // constant term 1
    bad.add_term(Monomial::var(1, 0), Rat(1)); // + x
    p.relations = {bad};
    p.nilpotency_bound = 2;
    CHECK_THROWS_AS(build_weil_algebra(p), Error);
}
