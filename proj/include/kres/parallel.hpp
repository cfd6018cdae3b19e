#pragma once

// Execution policy shared by the data-parallel kernels. Every kernel takes
// an Exec argument; Exec::serial runs the identical loop body in index
// order and is the reference the parallel path is tested against.

#include <cstddef>
#include <exception>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace kres {

enum class Exec { serial, parallel };

inline int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

inline void set_threads(int n) {
#ifdef _OPENMP
    if (n > 0) omp_set_num_threads(n);
#else
    (void)n;
#endif
}

/// Runs body(i) for i in [0, n). Under Exec::parallel the iterations are
/// distributed over OpenMP threads; the first exception thrown by any
/// iteration is rethrown on the calling thread after the loop.
template <class Body>
void for_each_index(Exec exec, std::size_t n, Body&& body) {
#ifdef _OPENMP
    if (exec == Exec::parallel && n > 1 && omp_get_max_threads() > 1 && !omp_in_parallel()) {
        std::exception_ptr failure;
        std::mutex guard;
        const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 1)
        for (long long i = 0; i < count; ++i) {
            try {
                body(static_cast<std::size_t>(i));
            } catch (...) {
                std::lock_guard lock(guard);
                if (!failure) failure = std::current_exception();
            }
        }
        if (failure) std::rethrow_exception(failure);
        return;
    }
#endif
    (void)exec;
    for (std::size_t i = 0; i < n; ++i) body(i);
}

}  // namespace kres
