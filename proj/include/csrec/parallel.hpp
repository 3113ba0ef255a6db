#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace csrec::par {

// Worker-pool width used by the parallel kernels. 0 = hardware default.
int threads();
void set_threads(int n);
int hardware_threads();

// Data-parallel map over [0, n). threads == 1 is the serial reference path;
// results must be written into per-index slots so serial and parallel runs
// produce identical output.
template <class Fn>
void for_each_index(std::size_t n, Fn&& fn, int nthreads = 0) {
    if (nthreads <= 0) nthreads = threads();
#ifdef _OPENMP
    if (nthreads > 1 && n > 1) {
#pragma omp parallel for schedule(dynamic) num_threads(nthreads)
        for (long i = 0; i < static_cast<long>(n); ++i) fn(static_cast<std::size_t>(i));
        return;
    }
#endif
    for (std::size_t i = 0; i < n; ++i) fn(i);
}

}  // namespace csrec::par
