#include <doctest.h>

#include "weil/errors.hpp"
#include "weil/presentation.hpp"

using namespace weil;

TEST_CASE("parsing the dual-number presentation") {
    Presentation p = parse_presentation("x | x^2 ; nil 2");
    CHECK(p.vars == std::vector<std::string>{"x"});
    REQUIRE(p.relations.size() == 1);
    CHECK(p.relations[0].str(p.vars) == "x^2");
    CHECK(p.nilpotency_bound == 2);
}

TEST_CASE("parsing W_D(2)") {
    Presentation p = parse_presentation("x,y | x^2, y^2, x*y ; nil 2");
    CHECK(p.vars.size() == 2);
    CHECK(p.relations.size() == 3);
    CHECK(p.nilpotency_bound == 2);
}

TEST_CASE("the empty presentation is the rationals") {
    Presentation p = parse_presentation("| ; nil 1");
    CHECK(p.vars.empty());
    CHECK(p.relations.empty());
    CHECK(p.nilpotency_bound == 1);
}

TEST_CASE("rejected inputs") {
    // nonzero constant term violates locality
    CHECK_THROWS_AS(parse_presentation("x | x^2 + 1 ; nil 2"), ParseError);
    // undeclared variable
    CHECK_THROWS_AS(parse_presentation("x | x*y ; nil 2"), ParseError);
    // empty relation list with variables present
    CHECK_THROWS_AS(parse_presentation("x | ; nil 2"), ParseError);
    // duplicate variables
    CHECK_THROWS_AS(parse_presentation("x,x | x^2 ; nil 2"), ParseError);
    // malformed clauses
    CHECK_THROWS_AS(parse_presentation("x | x^2"), ParseError);
    CHECK_THROWS_AS(parse_presentation("x | x^2 ; nil 0"), ParseError);
    CHECK_THROWS_AS(parse_presentation("x | x^2 ; nil 2 garbage"), ParseError);
}

TEST_CASE("rendering round-trips") {
    for (const char* text : {"x | x^2 ; nil 2", "x,y | x^2, y^2, x*y ; nil 2", "| ; nil 1",
                             "x,y | x^2 - y, y^2 ; nil 4"}) {
        Presentation p = parse_presentation(text);
        Presentation q = parse_presentation(p.str());
        CHECK(p.structural_key() == q.structural_key());
    }
}

TEST_CASE("structural key ignores relation order") {
    Presentation a = parse_presentation("x,y | x^2, y^2, x*y ; nil 2");
    Presentation b = parse_presentation("x,y | y^2, x*y, x^2 ; nil 2");
    CHECK(a.structural_key() == b.structural_key());
    Presentation c = parse_presentation("x,y | x^2, y^2 ; nil 3");
    CHECK(a.structural_key() != c.structural_key());
}
