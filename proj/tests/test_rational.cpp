#include <doctest.h>

#include "weil/errors.hpp"
#include "weil/rational.hpp"

using namespace weil;

TEST_CASE("rational parsing") {
    CHECK(rat_from_string("3/4") == rat(3, 4));
    CHECK(rat_from_string("-6/8") == rat(-3, 4));
    CHECK(rat_from_string("42") == Rat(42));
    CHECK(rat_from_string("1.25") == rat(5, 4));
    CHECK(rat_from_string("-0.5") == rat(-1, 2));
    CHECK(rat_str(rat_from_string("10/4")) == "5/2");
    CHECK(rat_str(Rat(-7)) == "-7");
    CHECK_THROWS_AS(rat_from_string("1/0"), Error);
    CHECK_THROWS_AS(rat_from_string("abc"), Error);
}

TEST_CASE("exact square roots") {
    CHECK(*rat_sqrt_exact(rat(9, 4)) == rat(3, 2));
    CHECK(*rat_sqrt_exact(Rat(0)) == Rat(0));
    CHECK(!rat_sqrt_exact(Rat(2)).has_value());
    CHECK(!rat_sqrt_exact(Rat(-1)).has_value());
}

TEST_CASE("binomials and powers") {
    CHECK(rat_binomial(Rat(5), 2) == Rat(10));
    CHECK(rat_binomial(rat(1, 2), 2) == rat(-1, 8));
    CHECK(rat_binomial(Rat(3), 5) == Rat(0));
    CHECK(rat_factorial(5) == Rat(120));
    CHECK(rat_pow_int(rat(2, 3), 3) == rat(8, 27));
    CHECK(rat_pow_int(rat(2, 3), -1) == rat(3, 2));
    CHECK_THROWS_AS(rat_pow_int(Rat(0), -1), DomainError);
}
