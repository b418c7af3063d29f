#include "hh/parallel.hpp"

#include <atomic>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hh {

namespace {
std::atomic<int> g_threads{0};  // 0 = not yet resolved

int resolve_default() {
    if (const char* env = std::getenv("HERMITEHEAT_THREADS")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
    }
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}
} // namespace

int max_threads() {
    int n = g_threads.load(std::memory_order_relaxed);
    if (n == 0) {
        n = resolve_default();
        g_threads.store(n, std::memory_order_relaxed);
    }
    return n;
}

void set_threads(int n) {
    g_threads.store(n >= 1 ? n : 1, std::memory_order_relaxed);
}

namespace detail {

void parallel_for_impl(std::size_t n, void* ctx, void (*body)(void*, std::size_t)) {
    const int threads = max_threads();
#ifdef _OPENMP
    if (threads > 1 && n > 1) {
#pragma omp parallel for schedule(static) num_threads(threads)
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i)
            body(ctx, static_cast<std::size_t>(i));
        return;
    }
#endif
    (void)threads;
    for (std::size_t i = 0; i < n; ++i) body(ctx, i);
}

} // namespace detail
} // namespace hh
