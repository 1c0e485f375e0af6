#include <doctest.h>

#include <fstream>
#include <set>

#include "weil/cli.hpp"
#include "weil/errors.hpp"
#include "weil/verify.hpp"

using namespace weil;

TEST_CASE("suite registry covers every claim exactly once") {
    const std::vector<std::string> expected = {"lemma-3-2", "prop-3-3", "thm-3-1", "thm-3-4",
                                               "prop-4-6",  "thm-4-7",  "lemma-5-7", "thm-5-6",
                                               "thm-6-6",   "jets"};
    CHECK(suite_names() == expected);
    std::set<std::string> cites;
    for (const std::string& n : suite_names()) {
        const std::string& c = suite_cite(n);
        CHECK(!c.empty());
        CHECK(cites.insert(c).second); // no claim is shared between suites
    }
    CHECK_THROWS_AS(suite_cite("bogus"), UnknownSuiteError);
    CHECK_THROWS_AS(run_suite("bogus"), UnknownSuiteError);
}

TEST_CASE("the test family") {
    const auto& fam = test_family();
    REQUIRE(fam.size() == 5);
    CHECK(fam[0].second->dim() == 1);
    CHECK(fam[1].second->dim() == 2);
    CHECK(fam[2].second->dim() == 3);
    CHECK(fam[3].second->dim() == 3);
    CHECK(fam[4].second->dim() == 4);
    CHECK(stock_diagrams().size() == 3);
}

TEST_CASE("prop-3-3 suite passes and reports dimensions") {
    SuiteReport r = run_suite("prop-3-3");
    CHECK(r.ok());
    REQUIRE(r.checks.size() == 1);
    CHECK(r.checks[0].details.at("dim") == 3);
    CHECK(r.checks[0].cite == suite_cite("prop-3-3"));
}

TEST_CASE("lemma-3-2 suite generates at least ten cones") {
    SuiteReport r = run_suite("lemma-3-2");
    CHECK(r.ok());
    bool found = false;
    for (const CheckResult& c : r.checks)
        if (c.name == "universal-property-cones") {
            found = true;
            CHECK(c.details.at("cones").get<int>() >= 10);
        }
    CHECK(found);
}

TEST_CASE("suite reports are deterministic") {
    Json a = run_suite("prop-3-3").to_json();
    Json b = run_suite("prop-3-3").to_json();
    a.erase("duration_ms");
    b.erase("duration_ms");
    CHECK(a == b);
    Json c = run_suite("lemma-3-2").to_json();
    Json d = run_suite("lemma-3-2").to_json();
    c.erase("duration_ms");
    d.erase("duration_ms");
    CHECK(c == d);
}

TEST_CASE("diagram json round trip") {
    std::string text = R"({
      "nodes": {"A": "x,y | x^2, y^2 ; nil 3", "B": "x | x^2 ; nil 2"},
      "edges": [
        {"from": "A", "to": "B", "images": ["0", "x"]},
        {"from": "A", "to": "B", "images": ["0", "0"]}
      ]
    })";
    Diagram d = diagram_from_json_text(text);
    CHECK(d.nodes.size() == 2);
    CHECK(d.edges.size() == 2);
    LimitResult L = finite_limit(d);
    CHECK(L.algebra->dim() == 3);

    CHECK_THROWS(diagram_from_json_text("{\"nodes\": {\"A\": \"x | x^2\"}}"));
    CHECK_THROWS(diagram_from_json_text("not json"));
}

TEST_CASE("algebra json carries the five documented fields") {
    AlgebraPtr WD2 = build_weil_algebra(parse_presentation("x | x^3 ; nil 3"));
    Json j = algebra_to_json(*WD2);
    CHECK(j.at("vars") == Json::array({"x"}));
    CHECK(j.at("relations") == Json::array({"x^3"}));
    CHECK(j.at("nil") == 3);
    CHECK(j.at("basis") == Json::array({"1", "x", "x^2"}));
    // structure[1][1] is the expansion of x*x
    CHECK(j.at("structure")[1][1] == Json::array({"0", "0", "1"}));
    Presentation p = presentation_from_json(j);
    CHECK(p.structural_key() == WD2->presentation().structural_key());
}

namespace {

int run_cli(std::vector<std::string> args) {
    std::vector<const char*> argv = {"weil"};
    for (const std::string& a : args) argv.push_back(a.c_str());
    return cli_main(static_cast<int>(argv.size()), argv.data());
}

} // namespace

TEST_CASE("cli exit codes") {
    CHECK(run_cli({"parse", "x | x^2 ; nil 2"}) == 0);
    CHECK(run_cli({"parse", "x | x^2 + 1 ; nil 2"}) == 2); // parse error
    CHECK(run_cli({"verify", "bogus"}) == 2);              // unknown suite
    CHECK(run_cli({"nonsense"}) == 2);                      // usage error
    CHECK(run_cli({"fibered-tensor", "x | x^2 ; nil 2", "x | x^2 ; nil 2"}) == 0);
    CHECK(run_cli({"tensor", "x | x^2 ; nil 2", "x | x^3 ; nil 3", "--json"}) == 0);
    CHECK(run_cli({"jet", "--expr", "u0^3", "--algebra", "x | x^4 ; nil 4", "--at", "1",
                   "--mode", "exact"}) == 0);
    CHECK(run_cli({"jet", "--expr", "u0^3", "--algebra", "x | x^4 ; nil 4", "--at", "1,2"}) == 2);
    // more arguments than the algebra has generators
    CHECK(run_cli({"jet", "--expr", "u0*u1", "--algebra", "x | x^2 ; nil 2", "--at", "1,2"}) == 2);
    // exact mode refuses the irrational series, float mode accepts it
    CHECK(run_cli({"jet", "--expr", "exp(u0)", "--algebra", "x | x^2 ; nil 2", "--at", "1",
                   "--mode", "exact"}) == 2);
    CHECK(run_cli({"jet", "--expr", "exp(u0)", "--algebra", "x | x^2 ; nil 2", "--at", "1",
                   "--mode", "float"}) == 0);
    CHECK(run_cli({"verify", "prop-3-3", "--json"}) == 0);
}

TEST_CASE("cli diagram subcommands") {
    std::string path = "/tmp/weil_test_diagram.json";
    {
        std::ofstream out(path);
        out << R"({"nodes": {"A": "x,y | x^2, y^2 ; nil 3", "B": "x | x^2 ; nil 2"},
                   "edges": [{"from": "A", "to": "B", "images": ["0", "x"]},
                             {"from": "A", "to": "B", "images": ["0", "0"]}]})";
    }
    CHECK(run_cli({"equalizer", path}) == 0);
    CHECK(run_cli({"limit", path, "--json"}) == 0);
    CHECK(run_cli({"equalizer", "/nonexistent/diagram.json"}) == 2);
    {
        std::ofstream out(path);
        out << R"({"nodes": {"A": "x | x^2 ; nil 2"}, "edges": []})";
    }
    CHECK(run_cli({"equalizer", path}) == 2); // not a parallel pair
    CHECK(run_cli({"limit", path}) == 0);
}
