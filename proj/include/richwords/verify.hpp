#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace richwords::verify {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;   // deterministic, goes into reports
    double seconds = 0.0; // timing, for logs only (never serialized)
};

struct Criterion {
    int id;
    std::string name;
    std::function<CriterionResult()> run;
};

// The full verification suite, in order.  Each criterion is self-contained
// and deterministic.
const std::vector<Criterion>& criteria();

// Runs every criterion; when progress is non-null, one "PASS/FAIL" line per
// criterion is printed as it finishes (with timing).
std::vector<CriterionResult> run_all(std::ostream* progress);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace richwords::verify
