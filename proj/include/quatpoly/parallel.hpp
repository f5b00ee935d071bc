#pragma once

#include <omp.h>

#include <cstdlib>

namespace qp {

/// Worker-count hint: QUATPOLY_THREADS if set and positive, else the
/// available parallelism. Callers pass the result to omp num_threads.
inline int worker_count() {
    if (const char* env = std::getenv("QUATPOLY_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    return omp_get_max_threads();
}

}  // namespace qp
