#pragma once

#include <cstddef>

#ifdef SMT_HAVE_OPENMP
#include <omp.h>
#endif

namespace smt {

// Runs fn(i) for i in [0, n). threads <= 1 takes the plain serial loop, which
// is the reference path; the OpenMP path must produce identical results
// because every task writes only to its own slot. Exceptions thrown inside
// parallel tasks are rethrown after the loop.
template <class Fn>
void parallel_for(std::size_t n, int threads, Fn&& fn) {
#ifdef SMT_HAVE_OPENMP
    if (threads > 1 && n > 1) {
        std::exception_ptr err = nullptr;
#pragma omp parallel for schedule(dynamic) num_threads(threads)
        for (long long i = 0; i < static_cast<long long>(n); ++i) {
            try {
                fn(static_cast<std::size_t>(i));
            } catch (...) {
#pragma omp critical
                {
                    if (!err) err = std::current_exception();
                }
            }
        }
        if (err) std::rethrow_exception(err);
        return;
    }
#else
    (void)threads;
#endif
    for (std::size_t i = 0; i < n; ++i) fn(i);
}

inline int hardware_threads() {
#ifdef SMT_HAVE_OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace smt
