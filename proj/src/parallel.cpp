#include "delab/parallel.hpp"

#include <cstdlib>
#include <numbers>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace delab {

int thread_cap() {
#ifdef _OPENMP
    int cap = omp_get_max_threads();
#else
    int cap = 1;
#endif
    if (const char* env = std::getenv("DELAB_THREADS")) {
        try {
            const int v = std::stoi(env);
            if (v > 0) cap = std::min(cap, v);
        } catch (...) {
        }
    }
    return std::max(cap, 1);
}

double Grid2::th(std::size_t j) const {
    return -std::numbers::pi + 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(nth);
}

}  // namespace delab
