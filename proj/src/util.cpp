#include "hfk/util.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hfk {

namespace {
int g_threads = 0;
}

void set_threads(int n) {
    g_threads = n < 0 ? 0 : n;
#ifdef _OPENMP
    omp_set_num_threads(g_threads > 0 ? g_threads : omp_get_num_procs());
#endif
}

int threads() { return g_threads; }

bool parallel_enabled() {
#ifdef _OPENMP
    return g_threads != 1;
#else
    return false;
#endif
}

} // namespace hfk
