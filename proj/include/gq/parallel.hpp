#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gq {

// Fold fold(acc, i) over i in [0, count). init must be the identity for
// merge. The parallel version folds contiguous index blocks into private
// accumulators and merges them in block order, so for associative merges
// the result is bit-identical to the serial fold regardless of thread
// count.

template <class Result, class Fold, class Merge>
Result sweep_serial(std::int64_t count, Result init, Fold&& fold, Merge&&) {
    Result acc = std::move(init);
    for (std::int64_t i = 0; i < count; ++i) fold(acc, i);
    return acc;
}

template <class Result, class Fold, class Merge>
Result sweep_parallel(std::int64_t count, Result init, Fold fold, Merge merge, int threads = 0) {
#ifdef _OPENMP
    int T = threads > 0 ? threads : omp_get_max_threads();
    if (count < T) T = count > 0 ? static_cast<int>(count) : 1;
    if (T > 1) {
        std::vector<Result> partial(T, init);
#pragma omp parallel for num_threads(T) schedule(static, 1)
        for (int t = 0; t < T; ++t) {
            std::int64_t lo = count * t / T;
            std::int64_t hi = count * (t + 1) / T;
            for (std::int64_t i = lo; i < hi; ++i) fold(partial[t], i);
        }
        Result acc = std::move(init);
        for (int t = 0; t < T; ++t) merge(acc, std::move(partial[t]));
        return acc;
    }
#else
    (void)threads;
#endif
    return sweep_serial(count, std::move(init), fold, merge);
}

} // namespace gq
