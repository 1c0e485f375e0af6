// Named verification suites: each one certifies one law of the Weil-algebra
// calculus by exact computation (or by oracle comparison, for the jet
// engine), reporting one pass/fail check per instance.
#pragma once

#include "weil/json_io.hpp"

namespace weil {

struct CheckResult {
    std::string name;
    std::string cite;   // the claim being certified, in formula shorthand
    bool pass = false;
    Json details;       // dimensions, counterexample witnesses, ...
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    int64_t duration_ms = 0;

    bool ok() const;
    Json to_json() const;
    void print_table(std::ostream& os) const;
};

// Suite ids, in execution order for `verify all`.
const std::vector<std::string>& suite_names();

// The claim a suite certifies; every suite has exactly one.
const std::string& suite_cite(const std::string& name);

// Runs one suite; throws UnknownSuiteError for unknown ids.  The sampling
// seed comes from WEIL_VERIFY_SEED when set.
SuiteReport run_suite(const std::string& name);

std::vector<SuiteReport> run_all_suites();

// The five algebras every quantified check ranges over:
// Q, W_D, W_D2, W_D(2), W_DxD.
const std::vector<std::pair<std::string, AlgebraPtr>>& test_family();

// The three stock diagrams: one node, a discrete pair, and the
// W_DxD => W_D parallel pair.
std::vector<std::pair<std::string, Diagram>> stock_diagrams();

uint64_t verify_seed();

} // namespace weil
