#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <type_traits>

namespace hh {

// Global thread budget for the batch loops. 1 = serial. Initialized from
// HERMITEHEAT_THREADS (falls back to the OpenMP default).
int max_threads();
void set_threads(int n);

namespace detail {
void parallel_for_impl(std::size_t n, void* ctx, void (*body)(void*, std::size_t));
}

// Static-scheduled loop over [0, n). Every iteration writes only its own
// slots, so the results do not depend on the schedule or thread count.
template <class F>
void parallel_for(std::size_t n, F&& f) {
    using Fn = std::remove_reference_t<F>;
    detail::parallel_for_impl(n, const_cast<void*>(static_cast<const void*>(std::addressof(f))),
                              [](void* ctx, std::size_t i) { (*static_cast<Fn*>(ctx))(i); });
}

// Serial reference loop, kept next to the parallel path for testing and the
// benchmark target.
template <class F>
void serial_for(std::size_t n, F&& f) {
    for (std::size_t i = 0; i < n; ++i) f(i);
}

} // namespace hh
