#include "heinz/threading.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace heinz {

int worker_count() {
#ifdef _OPENMP
    int workers = omp_get_max_threads();
    if (const char* env = std::getenv("HEINZ_THREADS")) {
        try {
            int cap = std::stoi(env);
            if (cap >= 1 && cap < workers) workers = cap;
        } catch (...) {
            // ignore malformed value, keep the OpenMP default
        }
    }
    return workers;
#else
    return 1;
#endif
}

} // namespace heinz
