#pragma once

#include <array>
#include <cstdint>
#include <type_traits>
#include <utility>

namespace hyperlab::sweep {

enum class Mode { Serial, Parallel, Auto };

/// Number of worker threads the parallel kernels may use. Honors the
/// HYPERLAB_THREADS environment variable (clamped to the OpenMP maximum);
/// 1 when OpenMP is unavailable.
int thread_budget();

namespace detail {
bool resolve_parallel(Mode mode, std::int64_t n);
}

/// Smallest index i in [0, n) with pred(i) true, or -1 if none.
///
/// The parallel path scans fixed-size blocks in index order and reduces each
/// block to its minimal hit, so the result (and therefore every witness
/// derived from it) is identical to the serial scan regardless of schedule.
/// pred must be pure and safe to call concurrently.
template <class Pred>
std::int64_t first_match(std::int64_t n, Mode mode, Pred&& pred) {
    if (n <= 0) return -1;
    if (!detail::resolve_parallel(mode, n)) {
        for (std::int64_t i = 0; i < n; ++i)
            if (pred(i)) return i;
        return -1;
    }
    constexpr std::int64_t kBlock = 1 << 18;
    const int threads = thread_budget();
    for (std::int64_t lo = 0; lo < n; lo += kBlock) {
        const std::int64_t hi = lo + kBlock < n ? lo + kBlock : n;
        std::int64_t found = hi;
#if defined(_OPENMP)
#pragma omp parallel for num_threads(threads) reduction(min : found) schedule(static)
#endif
        for (std::int64_t i = lo; i < hi; ++i) {
            if (i < found && pred(i)) found = i;
        }
        if (found < hi) return found;
    }
    return -1;
}

template <class Pred>
bool all_of(std::int64_t n, Mode mode, Pred&& pred) {
    return first_match(n, mode, [&](std::int64_t i) { return !pred(i); }) < 0;
}

/// Flattens (a,b) over [0,m)^2 in lexicographic order.
inline std::pair<std::int64_t, std::int64_t> decode_pair(std::int64_t idx, std::int64_t m) {
    return {idx / m, idx % m};
}

/// Flattens (a,b,c) over [0,m)^3 in lexicographic order.
inline std::array<std::int64_t, 3> decode_triple(std::int64_t idx, std::int64_t m) {
    return {idx / (m * m), (idx / m) % m, idx % m};
}

}  // namespace hyperlab::sweep
