#ifndef COGRAPHIC_PARALLEL_HPP
#define COGRAPHIC_PARALLEL_HPP

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace cographic {

// Internal parallelism cap: COGRAPHIC_THREADS overrides hardware concurrency.
inline unsigned thread_budget() {
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("COGRAPHIC_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(v));
    }
    return n;
}

// Static partition; f(i) must be pure per index so results are
// schedule-independent.
template <class F>
void parallel_for(size_t count, F&& f) {
    const unsigned workers = std::min<size_t>(thread_budget(), count);
    if (workers <= 1) {
        for (size_t i = 0; i < count; ++i) f(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (size_t i = w; i < count; i += workers) f(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace cographic

#endif
