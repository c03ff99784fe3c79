#pragma once

#include <cstddef>
#include <exception>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sfd {

/// Every data-parallel kernel keeps a serial path. The two must produce
/// bit-identical results: work items are independent and each writes only
/// its own output slot.
enum class Execution { serial, parallel };

template <class Body>
void for_each_index(Execution exec, std::size_t count, Body&& body) {
    if (exec == Execution::serial || count < 2) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    // Exceptions may not cross the parallel region; the one from the lowest
    // index is rethrown so failures match the serial path.
    const auto n = static_cast<long long>(count);
    std::exception_ptr first;
    long long first_index = n;
    std::mutex guard;
#pragma omp parallel for schedule(dynamic, 1)
    for (long long i = 0; i < n; ++i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
            std::lock_guard lock(guard);
            if (i < first_index) {
                first_index = i;
                first = std::current_exception();
            }
        }
    }
    if (first) std::rethrow_exception(first);
}

inline int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace sfd
