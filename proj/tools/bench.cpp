// Benchmark: the OpenMP kernels against their single-thread runs and against
// the brute-force serial references the tests use.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "richwords/morphism.hpp"
#include "richwords/parallel.hpp"
#include "richwords/rational.hpp"
#include "richwords/reference.hpp"
#include "richwords/repetition.hpp"
#include "richwords/sturmian.hpp"
#include "richwords/word.hpp"

using namespace richwords;
using Clock = std::chrono::steady_clock;

namespace {

template <typename F>
double time_once(F&& fn) {
    auto start = Clock::now();
    fn();
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void report(const char* name, std::size_t n, const char* a, double ta, const char* b, double tb) {
    std::printf("%-28s n=%-7zu %s %9.4fs   %s %9.4fs   ratio %6.2fx\n", name, n, a, ta, b, tb,
                tb > 0 ? ta / tb : 0.0);
}

}  // namespace

int main(int argc, char** argv) {
    int jobs = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::string(argv[i]) == "--jobs" && i + 1 < argc) jobs = std::atoi(argv[i + 1]);
    }
    const int workers = effective_jobs(jobs);
    std::printf("workers: %d\n\n", workers);

    std::printf("-- brute-force reference vs kernel (identical results checked) --\n");
    for (std::size_t n : {100, 200}) {
        Word w = generate(Recipe::FGH, n);
        set_jobs(workers);
        Rational ref(1), fast(1);
        double t_ref = time_once([&] { ref = reference::max_exponent_factor(w).first; });
        double t_fast = time_once([&] { fast = max_exponent_factor(w).first; });
        if (ref != fast) {
            std::printf("MISMATCH: reference %s vs kernel %s\n", ref.str().c_str(),
                        fast.str().c_str());
            return 1;
        }
        report("max exponent factor", n, "brute", t_ref, "kernel", t_fast);
    }
    std::printf("\n-- kernel, 1 worker vs %d workers --\n", workers);
    for (std::size_t n : {2000, 5000, 10000}) {
        Word w = generate(Recipe::FGH, n);
        volatile bool sink = false;
        set_jobs(1);
        double t1 = time_once([&] { sink = is_alpha_free(w, Rational(14, 5)); });
        set_jobs(workers);
        double tn = time_once([&] { sink = is_alpha_free(w, Rational(14, 5)); });
        report("alpha-freeness 14/5", n, "1-way", t1, "n-way", tn);

        set_jobs(1);
        double e1 = time_once([&] { (void)max_exponent_factor(w); });
        set_jobs(workers);
        double en = time_once([&] { (void)max_exponent_factor(w); });
        report("max exponent factor", n, "1-way", e1, "n-way", en);
    }

    {
        Word w = generate(Recipe::FGH, 100000);
        std::size_t total = 0;
        double t_ref = time_once([&] {
            for (std::size_t n = 1; n <= 30; ++n) total += reference::factor_complexity(w, n);
        });
        set_jobs(workers);
        double t_fast = time_once([&] { (void)rote_check(w, 30); });
        std::printf("\n(reference factor-complexity sum: %zu)\n", total);
        report("factor complexity n<=30", w.size(), "set", t_ref, "kernel", t_fast);
    }

    return 0;
}
