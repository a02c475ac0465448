#include "hyperlab/sweep.hpp"

#include <cstdlib>
#include <mutex>
#include <string>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace hyperlab::sweep {

namespace {

int compute_budget() {
#if defined(_OPENMP)
    int budget = omp_get_max_threads();
#else
    int budget = 1;
#endif
    if (const char* env = std::getenv("HYPERLAB_THREADS")) {
        try {
            int cap = std::stoi(env);
            if (cap >= 1 && cap < budget) budget = cap;
        } catch (const std::exception&) {
            // ignore malformed values, keep the OpenMP default
        }
    }
    return budget;
}

}  // namespace

int thread_budget() {
    static const int budget = compute_budget();
    return budget;
}

namespace detail {

bool resolve_parallel(Mode mode, std::int64_t n) {
    switch (mode) {
        case Mode::Serial: return false;
        case Mode::Parallel: return thread_budget() > 1;
        case Mode::Auto: return thread_budget() > 1 && n >= (1 << 14);
    }
    return false;
}

}  // namespace detail

}  // namespace hyperlab::sweep
