#pragma once

#include <string>
#include <vector>

namespace hilbtaut {

enum class Tier { fast, full };

struct CheckResult {
    std::string name;
    bool pass = false;
    double seconds = 0.0;
    std::string detail;  // failure description or summary counts
};

// Runs the property suites. `suite` is "all" or one of: grading, symrep,
// ringmodel, cech, danila, multitor, specseq, cohomology. max_n <= 0 picks
// the tier default. Throws only on unknown suite names; check failures are
// reported in the results.
std::vector<CheckResult> run_verify(const std::string& suite, Tier tier, int max_n = 0);

}  // namespace hilbtaut
