#include "polyhodge/real.hpp"
#include "polyhodge/report/suite.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <sys/wait.h>

namespace {

using polyhodge::report::CriterionResult;

// Wall-clock budgets in seconds; 0 means none.
constexpr double kBudget[] = {0, 30, 0, 120, 0, 0, 0, 120, 0};

struct Capture {
    int code = -1;
    std::string out;
};

Capture capture(const std::string& command) {
    Capture c;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return c;
    std::array<char, 4096> buffer{};
    std::size_t got;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) c.out.append(buffer.data(), got);
    const int status = pclose(pipe);
    c.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return c;
}

void print(int id, const std::string& title, bool pass, const std::string& detail) {
    std::cout << "criterion " << id << " (" << title << "): " << (pass ? "PASS" : "FAIL");
    if (!detail.empty()) std::cout << " - " << detail;
    std::cout << std::endl;
}

}  // namespace

int main() {
    polyhodge::WorkingPrecision precision(polyhodge::kDefaultPrecisionBits);
    polyhodge::report::SuiteOptions options;
    options.include_n7 = std::getenv("POLYHODGE_FULL") != nullptr;

    bool all = true;
    for (int id = 1; id <= polyhodge::report::kSuiteCriteria; ++id) {
        const auto start = std::chrono::steady_clock::now();
        const CriterionResult r = polyhodge::report::run_criterion(id, options);
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_budget = kBudget[id] == 0 || seconds < kBudget[id];
        std::string detail = r.detail.dump();
        if (detail.size() > 300) detail = detail.substr(0, 297) + "...";
        char timing[64];
        std::snprintf(timing, sizeof timing, "%.2fs%s ", seconds, in_budget ? "" : " over budget");
        print(id, r.title, r.pass && in_budget, timing + detail);
        all = all && r.pass && in_budget;
    }

    const std::string suite = std::string(POLYHODGE_CLI) + " suite --seed 0 2>&1";
    const Capture first = capture(suite);
    const Capture second = capture(suite);
    const bool same = first.code == 0 && second.code == 0 && !first.out.empty() && first.out == second.out;
    print(9, "determinism", same,
          "exit codes " + std::to_string(first.code) + "/" + std::to_string(second.code) + ", " +
              std::to_string(first.out.size()) + " bytes, " + (first.out == second.out ? "identical" : "different"));
    all = all && same;
    return all ? 0 : 1;
}
