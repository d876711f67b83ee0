#pragma once

#include <string>
#include <vector>

namespace partfin {

struct CheckResult {
    std::string suite;
    std::string name;
    bool passed = false;
    std::string detail;         // what was checked, e.g. "121 sequences"
    std::string counterexample; // first failure, when !passed
};

/// Suite names accepted by run_suite, in the order "all" runs them.
const std::vector<std::string>& suite_names();

/// Runs the exhaustive property checks of one suite ("all" runs every one).
/// Output is deterministic. Throws std::invalid_argument for an unknown name.
std::vector<CheckResult> run_suite(const std::string& name);

} // namespace partfin
