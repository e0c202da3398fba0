#include "gcat/parallel.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gcat {

int worker_count() {
#ifdef _OPENMP
    int n = omp_get_max_threads();
    if (const char* env = std::getenv("GCAT_THREADS")) {
        try {
            int cap = std::stoi(env);
            if (cap > 0 && cap < n) n = cap;
        } catch (...) {
            // ignore malformed values
        }
    }
    return n > 0 ? n : 1;
#else
    return 1;
#endif
}

} // namespace gcat
