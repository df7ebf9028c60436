#pragma once

// Runnable property suites, one per module, driven by the `verify` CLI
// subcommand. Each suite re-checks its module's invariants at desk scale
// and reports pass/fail per property.

#include <string>
#include <vector>

namespace ordpath::verify {

struct PropertyResult {
    std::string name;
    bool pass = true;
    std::string detail;
};

struct SuiteResult {
    std::string suite;
    std::vector<PropertyResult> results;
    bool all_pass() const {
        for (const auto& r : results)
            if (!r.pass) return false;
        return true;
    }
};

std::vector<std::string> suite_names();

// name in {core, patterns, extremal, solvers, ktt, oracles};
// quick runs reduced sizes.
SuiteResult run_suite(const std::string& name, bool quick);

std::vector<SuiteResult> run_all(bool quick);

}  // namespace ordpath::verify
