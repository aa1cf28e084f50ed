#pragma once

#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace vf {

/**
 * @brief Deterministic parallel reduction over the index range [0, n).
 *
 * The range splits into contiguous chunks, each chunk folds in index order,
 * and the per-chunk results combine in chunk order.  The result is therefore
 * the same association as the serial left fold for any thread count, so
 * outputs never depend on scheduling.
 */
template <class R, class PerIndex, class Combine>
R chunked_reduce(std::size_t n, int threads, R zero, PerIndex per_index, Combine combine) {
    if (threads < 1) threads = 1;
    if (threads <= 1 || n < 2) {
        R acc = zero;
        for (std::size_t i = 0; i < n; ++i) acc = combine(std::move(acc), per_index(i));
        return acc;
    }
    std::size_t chunks = std::min<std::size_t>(threads, n);
    std::vector<R> partial(chunks, zero);
    std::vector<std::exception_ptr> errors(chunks);
    std::vector<std::thread> pool;
    pool.reserve(chunks);
    for (std::size_t c = 0; c < chunks; ++c) {
        std::size_t lo = n * c / chunks, hi = n * (c + 1) / chunks;
        pool.emplace_back([&, c, lo, hi] {
            try {
                for (std::size_t i = lo; i < hi; ++i)
                    partial[c] = combine(std::move(partial[c]), per_index(i));
            } catch (...) {
                errors[c] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& err : errors)
        if (err) std::rethrow_exception(err);
    R acc = zero;
    for (auto& p : partial) acc = combine(std::move(acc), std::move(p));
    return acc;
}

} // namespace vf
