#include "richwords/parallel.hpp"

#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace richwords {

int hardware_jobs() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

int effective_jobs(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("RICHWORD_JOBS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    return hardware_jobs();
}

void set_jobs(int jobs) {
#ifdef _OPENMP
    if (jobs > 0) omp_set_num_threads(jobs);
#else
    (void)jobs;
#endif
}

}  // namespace richwords
