#ifndef HIGGS_PARALLEL_HPP
#define HIGGS_PARALLEL_HPP

#include <atomic>
#include <functional>
#include <optional>
#include <thread>
#include <vector>

namespace higgs {

// Evaluate fn over [0, n) with at most `threads` workers; results land in
// fixed slots, so downstream combination order is independent of the
// thread count.
template <typename T, typename Fn>
std::vector<T> parallel_map(int n, int threads, Fn fn) {
    std::vector<std::optional<T>> slots(static_cast<size_t>(n));
    if (threads <= 1 || n <= 1) {
        for (int i = 0; i < n; ++i) slots[static_cast<size_t>(i)] = fn(i);
    } else {
        std::atomic<int> next{0};
        auto worker = [&] {
            for (;;) {
                int i = next.fetch_add(1);
                if (i >= n) return;
                slots[static_cast<size_t>(i)] = fn(i);
            }
        };
        std::vector<std::thread> pool;
        const int k = std::min(threads, n);
        pool.reserve(static_cast<size_t>(k));
        for (int t = 0; t < k; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    std::vector<T> out;
    out.reserve(static_cast<size_t>(n));
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

}  // namespace higgs

#endif
