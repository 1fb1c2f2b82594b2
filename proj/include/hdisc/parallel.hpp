#pragma once

#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace hdisc {

// Worker cap: min(hardware, HDISC_THREADS when set). At least 1.
inline unsigned thread_cap() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("HDISC_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1 && static_cast<unsigned>(v) < hw) hw = static_cast<unsigned>(v);
    }
    return hw;
}

// Applies fn to every index and collects results in index order, so the
// outcome never depends on scheduling.
template <class T>
std::vector<T> parallel_map(size_t count, const std::function<T(size_t)>& fn) {
    std::vector<T> out(count);
    unsigned workers = thread_cap();
    if (workers <= 1 || count <= 1) {
        for (size_t i = 0; i < count; ++i) out[i] = fn(i);
        return out;
    }
    std::vector<std::thread> pool;
    std::atomic<size_t> next{0};
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&]() {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= count) return;
                out[i] = fn(i);
            }
        });
    for (auto& t : pool) t.join();
    return out;
}

} // namespace hdisc
