#pragma once

#include <atomic>
#include <exception>
#include <thread>
#include <vector>

namespace oehhg {

/// Run fn(0..count-1) on up to `degree` worker threads (0 = hardware
/// concurrency). Work items must be independent; results written by index
/// stay deterministic regardless of the degree. The first exception (by
/// index) is rethrown after all workers finish.
template <typename Fn>
void parallel_for(std::size_t count, unsigned degree, Fn&& fn) {
    if (count == 0) return;
    if (degree == 0) degree = std::max(1u, std::thread::hardware_concurrency());
    degree = static_cast<unsigned>(std::min<std::size_t>(degree, count));

    if (degree <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(count);
    std::vector<std::thread> workers;
    workers.reserve(degree);
    for (unsigned t = 0; t < degree; ++t) {
        workers.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count) break;
                try {
                    fn(i);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        });
    }
    for (auto& w : workers) w.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace oehhg
