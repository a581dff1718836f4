#pragma once

#include <string>
#include <vector>

namespace crystalline {

struct SuiteResult {
    std::string name;
    bool passed = false;
    std::string detail;  // first failure, or a short summary on success
};

// Registered suite names, in canonical run order.
const std::vector<std::string>& suite_names();

// Run one suite with the given seed. Unknown name -> IndexOutOfRange.
SuiteResult run_suite(const std::string& name, unsigned long long seed);

std::vector<SuiteResult> run_suites(const std::vector<std::string>& names,
                                    unsigned long long seed);

}  // namespace crystalline
