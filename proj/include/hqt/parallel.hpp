#ifndef HQT_PARALLEL_HPP
#define HQT_PARALLEL_HPP

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hqt {

// Execution policy for the data-parallel kernels. Results must be identical
// under either policy; Serial exists for cross-checking and benchmarks.
enum class Exec { Serial, Parallel };

// Exceptions thrown by the body are rethrown on the calling thread after the
// loop finishes; they must not unwind through an OpenMP region.
template <typename F>
inline void parallel_for(Exec policy, long n, F&& body) {
#ifdef _OPENMP
    if (policy == Exec::Parallel) {
        std::exception_ptr err;
        std::mutex err_mutex;
        std::atomic<bool> failed{false};
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < n; ++i) {
            if (failed.load(std::memory_order_relaxed)) continue;
            try {
                body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lk(err_mutex);
                if (!err) err = std::current_exception();
                failed.store(true, std::memory_order_relaxed);
            }
        }
        if (err) std::rethrow_exception(err);
        return;
    }
#else
    (void)policy;
#endif
    for (long i = 0; i < n; ++i)
        body(i);
}

} // namespace hqt

#endif
