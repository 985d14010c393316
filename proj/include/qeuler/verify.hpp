#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qeuler/report.hpp"

namespace qeuler {

// One verification run: which identity family to exercise, the archimedean
// tolerance for hand-assembled comparisons, a seed for the randomized grid
// points, and how many worker threads may share the grid.
struct SuiteConfig {
    std::string suite = "all";
    double tol = 1e-10;
    std::uint64_t seed = 0;
    unsigned jobs = 1;
};

const std::vector<std::string>& suite_names();  // excludes "all"

// Runs every check of the requested suite and returns the records in a fixed
// canonical order. The same config yields the same records regardless of
// jobs. Throws std::domain_error for an unknown suite name.
std::vector<VerificationRecord> run_suite(const SuiteConfig& cfg);

// True when no record outside the expected-fail ledger failed.
bool suite_passed(const std::vector<VerificationRecord>& records);

}  // namespace qeuler
