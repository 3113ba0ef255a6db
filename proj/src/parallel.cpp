#include "csrec/parallel.hpp"

#include <atomic>

namespace csrec::par {

namespace {
std::atomic<int> g_threads{0};
}

int hardware_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

int threads() {
    int t = g_threads.load();
    return t > 0 ? t : hardware_threads();
}

void set_threads(int n) { g_threads.store(n); }

}  // namespace csrec::par
