#pragma once
// Work distribution for column-parallel matrix builds. Tasks write to
// disjoint output slots, so results never depend on scheduling order.

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace deckops {

namespace detail {
inline std::atomic<int> g_parallelism{0};  // 0 = hardware concurrency
}

inline void set_parallelism(int jobs) { detail::g_parallelism.store(jobs < 0 ? 0 : jobs); }

inline int parallelism() {
    int j = detail::g_parallelism.load();
    if (j > 0) return j;
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

// Runs fn(i) for every i in [0, count). Exceptions from workers are
// rethrown on the calling thread (first one wins).
template <typename F>
void parallel_for(std::size_t count, F&& fn) {
    std::size_t jobs = static_cast<std::size_t>(parallelism());
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mu;
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mu);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::size_t nthreads = jobs < count ? jobs : count;
    std::vector<std::thread> pool;
    pool.reserve(nthreads - 1);
    for (std::size_t t = 1; t < nthreads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace deckops
