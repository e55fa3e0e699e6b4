#include "qframe/parallel.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qframe::par {

int max_threads() {
#ifdef _OPENMP
    int hw = omp_get_max_threads();
#else
    int hw = 1;
#endif
    if (const char* env = std::getenv("QFRAME_THREADS")) {
        try {
            int cap = std::stoi(env);
            if (cap >= 1 && cap < hw) hw = cap;
            if (cap >= 1 && hw < 1) hw = cap;
        } catch (...) {
            // unparsable cap: ignore
        }
    }
    return hw < 1 ? 1 : hw;
}

bool enabled() {
#ifdef _OPENMP
    return max_threads() > 1;
#else
    return false;
#endif
}

} // namespace qframe::par
