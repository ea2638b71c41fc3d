#include "teachdim/parallel.hpp"

#include <atomic>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace teachdim::parallel {

namespace {
std::atomic<int> g_max_threads{0};
}

void set_max_threads(int k) { g_max_threads.store(k > 0 ? k : 0); }

int max_threads() {
    int k = g_max_threads.load();
    if (k > 0) return k;
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace teachdim::parallel
