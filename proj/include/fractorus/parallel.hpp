// fractorus — minimal OpenMP shim.
//
// All hot loops in the library go through for_each_index so that the code
// builds and runs identically with or without OpenMP.  Loop bodies must write
// only to disjoint outputs (no cross-iteration accumulation), which keeps
// parallel and serial results bitwise identical; reductions are done by the
// caller after the loop (max/min are order-independent anyway).
#pragma once

#include <cstddef>
#include <cstdint>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace fractorus {

inline int max_threads() {
#if defined(_OPENMP)
    return omp_get_max_threads();
#else
    return 1;
#endif
}

inline void set_threads(int n) {
#if defined(_OPENMP)
    if (n > 0) omp_set_num_threads(n);
#else
    (void)n;
#endif
}

// Run fn(i) for i in [0, count).  `parallel == false` forces the serial path
// (used by the benchmark harness and by tests that compare the two).
template <class Fn>
void for_each_index(std::size_t count, bool parallel, Fn&& fn) {
    const std::int64_t n = static_cast<std::int64_t>(count);
#if defined(_OPENMP)
    if (parallel && n > 1) {
#pragma omp parallel for schedule(static)
        for (std::int64_t i = 0; i < n; ++i) fn(static_cast<std::size_t>(i));
        return;
    }
#else
    (void)parallel;
#endif
    for (std::int64_t i = 0; i < n; ++i) fn(static_cast<std::size_t>(i));
}

} // namespace fractorus
