#pragma once

#include <cstddef>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace shufflelab::par {

/// Worker-thread cap: min(OpenMP max threads, SHUFFLE_LAB_THREADS if set).
int max_threads();

/// Override the cap programmatically (0 = back to env/OpenMP default).
void set_thread_cap(int cap);

/// Reduce fn(acc, i) over i in [0, count) into per-thread accumulators,
/// merged in thread order. With exact coefficient arithmetic the result is
/// identical for any thread count. Body must not throw.
template <typename Acc, typename MakeAcc, typename Body, typename Merge>
Acc parallel_reduce(std::size_t count, MakeAcc make, Body body, Merge merge) {
#ifdef _OPENMP
    int nthreads = max_threads();
    if (nthreads > 1 && count > 1 && !omp_in_parallel()) {
        if (static_cast<std::size_t>(nthreads) > count) nthreads = static_cast<int>(count);
        std::vector<Acc> parts;
        parts.reserve(static_cast<std::size_t>(nthreads));
        for (int t = 0; t < nthreads; ++t) parts.push_back(make());
#pragma omp parallel num_threads(nthreads)
        {
            Acc& local = parts[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic, 1)
            for (long long i = 0; i < static_cast<long long>(count); ++i) {
                body(local, static_cast<std::size_t>(i));
            }
        }
        Acc result = std::move(parts[0]);
        for (int t = 1; t < nthreads; ++t) merge(result, std::move(parts[static_cast<std::size_t>(t)]));
        return result;
    }
#endif
    Acc result = make();
    for (std::size_t i = 0; i < count; ++i) body(result, i);
    return result;
}

}  // namespace shufflelab::par
