// Acceptance gate: runs every top-level criterion at its stated scale and
// tolerance, printing one pass/fail line each.  Exit code 0 only when all
// criteria hold.
#include <chrono>
#include <iostream>

#include "weil/verify.hpp"

using namespace weil;

namespace {

struct Criterion {
    std::string name;
    bool pass = false;
    std::string detail;
    int64_t ms = 0;
};

int64_t now_ms() {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

size_t count_checks(const SuiteReport& r) { return r.checks.size(); }

} // namespace

int main() {
    std::vector<Criterion> results;
    int64_t t_start = now_ms();

    auto run = [&](const std::string& name, const std::string& suite, int64_t budget_ms,
                   const std::function<std::string(const SuiteReport&)>& describe) {
        Criterion c;
        c.name = name;
        int64_t t0 = now_ms();
        try {
            SuiteReport rep = run_suite(suite);
            c.ms = now_ms() - t0;
            c.pass = rep.ok() && (budget_ms <= 0 || c.ms <= budget_ms);
            c.detail = describe(rep);
            if (budget_ms > 0 && c.ms > budget_ms)
                c.detail += " [exceeded " + std::to_string(budget_ms) + " ms budget]";
            if (!rep.ok()) {
                for (const CheckResult& chk : rep.checks)
                    if (!chk.pass) {
                        c.detail += " [failed: " + chk.name + "]";
                        break;
                    }
            }
        } catch (const std::exception& e) {
            c.ms = now_ms() - t0;
            c.pass = false;
            c.detail = std::string("exception: ") + e.what();
        }
        results.push_back(std::move(c));
    };

    run("prop-3-3  dim(W_D ~(x) W_D) = 3 with bijective comparison", "prop-3-3", 1000,
        [](const SuiteReport& r) {
            return "dims (" + r.checks[0].details.at("dim").dump() + ", " +
                   r.checks[0].details.at("dim_W_D(2)").dump() + ")";
        });

    run("lemma-3-2 equalizer diagram with unique factorization for >= 10 cones", "lemma-3-2",
        1000, [](const SuiteReport& r) {
            for (const CheckResult& c : r.checks)
                if (c.name == "universal-property-cones")
                    return "cones=" + c.details.at("cones").dump();
            return std::string();
        });

    run("prop-4-6  fibered associativity over all 125 ordered triples", "prop-4-6", 60000,
        [](const SuiteReport& r) { return "triples=" + std::to_string(count_checks(r)); });

    run("thm-3-4  iterated prolongation, n in {1,2,3}, all 25 pairs", "thm-3-4", 60000,
        [](const SuiteReport& r) { return "pairs=" + std::to_string(count_checks(r)); });

    run("lemma-5-7 limit / fibered-tensor swap on the stock diagrams", "lemma-5-7", 0,
        [](const SuiteReport& r) { return "instances=" + std::to_string(count_checks(r)); });

    run("thm-5-6  model-level microlinearity on the stock diagrams", "thm-5-6", 0,
        [](const SuiteReport& r) { return "instances=" + std::to_string(count_checks(r)); });

    run("thm-6-6  Euclidean law, n in {0..4}, with linear structure", "thm-6-6", 0,
        [](const SuiteReport& r) { return "checks=" + std::to_string(count_checks(r)); });

    run("thm-3-1  prolongation preserves fibered products (n<=2, b,c<=2)", "thm-3-1", 0,
        [](const SuiteReport& r) {
            size_t cases = 0;
            for (const CheckResult& c : r.checks) cases += c.details.at("cases").get<size_t>();
            return "cases=" + std::to_string(cases);
        });

    run("jets      functor laws, Taylor oracles (1e-10), finite differences (1e-6)", "jets", 0,
        [](const SuiteReport& r) { return "checks=" + std::to_string(count_checks(r)); });

    int64_t total_ms = now_ms() - t_start;
    bool all = true;
    for (const Criterion& c : results) {
        std::cout << (c.pass ? "PASS" : "FAIL") << "  " << c.name;
        if (!c.detail.empty()) std::cout << "  [" << c.detail << "]";
        std::cout << "  (" << c.ms << " ms)\n";
        all = all && c.pass;
    }
    bool under_budget = total_ms <= 300000; // the whole gate is the `verify all` budget
    std::cout << (under_budget ? "PASS" : "FAIL") << "  total verification time "
              << total_ms << " ms (budget 300000 ms)\n";
    all = all && under_budget;
    std::cout << (all ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED") << "\n";
    return all ? 0 : 1;
}
