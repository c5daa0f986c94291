#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace genera {

struct SuiteResult {
    std::string name;
    bool pass = false;
    double seconds = 0.0;
    std::string detail; // first failing check when pass is false
};

// Names of every invariant suite, in the order `run_all_verify_suites` uses.
const std::vector<std::string>& verify_suite_names();

// Runs one suite; randomized property suites derive their cases from `seed`.
// Throws std::domain_error for an unknown suite name.
SuiteResult run_verify_suite(const std::string& name, std::uint64_t seed);

std::vector<SuiteResult> run_all_verify_suites(std::uint64_t seed);

} // namespace genera
