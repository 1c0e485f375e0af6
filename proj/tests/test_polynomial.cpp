#include <doctest.h>

#include "weil/errors.hpp"
#include "weil/polynomial.hpp"

using namespace weil;

namespace {
const std::vector<std::string> xy = {"x", "y"};
}

TEST_CASE("graded-lex order lists 1, x, y, x^2, x*y, y^2") {
    std::vector<Monomial> ms = enumerate_monomials(2, 2);
    std::vector<std::string> got;
    for (const Monomial& m : ms) got.push_back(m.str(xy));
    CHECK(got == std::vector<std::string>{"1", "x", "y", "x^2", "x*y", "y^2"});
    CHECK(count_monomials(2, 2) == 6);
}

TEST_CASE("polynomial arithmetic and printing") {
    Poly p = parse_poly("x^2 - 2*x*y + y^2", xy);
    Poly q = parse_poly("(x - y)^2", xy);
    CHECK(p == q);
    CHECK(p.str(xy) == "x^2 - 2*x*y + y^2");
    CHECK(p.degree() == 2);
    CHECK(parse_poly("x - x", xy).is_zero());
    CHECK(parse_poly("1/2*x + 1/2*x", xy) == parse_poly("x", xy));
    CHECK(parse_poly("x*y - y*x", xy).is_zero());
}

TEST_CASE("polynomial parse errors carry positions") {
    CHECK_THROWS_AS(parse_poly("x + z", xy), ParseError);
    CHECK_THROWS_AS(parse_poly("x +", xy), ParseError);
    CHECK_THROWS_AS(parse_poly("x ^ y", xy), ParseError);
    try {
        parse_poly("x +\n  q", xy);
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.col == 3);
    }
}

TEST_CASE("shifting into a larger variable space") {
    Poly p = parse_poly("x*y", xy);
    Poly s = p.shifted(4, 2);
    std::vector<std::string> vars4 = {"a", "b", "x", "y"};
    CHECK(s.str(vars4) == "x*y");
    CHECK(s.nvars() == 4);
}
