#pragma once

#include "polyhodge/report/report.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace polyhodge::report {

struct SuiteOptions {
    double tol = 1e-12;
    std::uint64_t seed = 0;
    long long samples = 100000;
    bool include_n7 = false;  // n = 7 Arnol'd and poset homology
};

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    Json detail = Json::object();
};

inline constexpr int kSuiteCriteria = 8;

// One criterion, 1 <= id <= kSuiteCriteria. Exceptions become failures.
CriterionResult run_criterion(int id, const SuiteOptions& options);

// Criteria 1-8 of the acceptance battery, evaluated in process. Criterion 9
// (byte reproducibility of the CLI) needs two processes and is checked by the
// callers.
std::vector<CriterionResult> run_suite(const SuiteOptions& options);

Json to_json(const std::vector<CriterionResult>& results);

// "%.3e" rendering used for deviations in suite details.
std::string short_decimal(const Real& x);

}  // namespace polyhodge::report
