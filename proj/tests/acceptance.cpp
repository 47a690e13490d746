// Acceptance suite: runs every verification criterion end to end and prints
// one pass/fail line per criterion.  Exit status 0 iff all pass.

#include <cstdio>
#include <iostream>

#include "richwords/parallel.hpp"
#include "richwords/verify.hpp"

int main() {
    richwords::set_jobs(richwords::effective_jobs(0));
    auto results = richwords::verify::run_all(&std::cout);
    int passed = 0;
    for (const auto& r : results) passed += r.pass;
    std::printf("acceptance: %d/%zu criteria passed\n", passed, results.size());
    return richwords::verify::all_passed(results) ? 0 : 1;
}
