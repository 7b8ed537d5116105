#pragma once

#include <exception>
#include <thread>
#include <vector>

namespace rcc {

// Runs fn(i) for every i in [0, count) on up to `threads` workers and
// returns the results in index order.  Work is assigned by stride, and each
// call site seeds any randomness from the index, so the output is a pure
// function of fn and count; the thread count only affects wall time.
template <typename Fn>
auto run_indexed(long long count, int threads, Fn&& fn) {
    using R = decltype(fn(static_cast<long long>(0)));
    std::vector<R> out(static_cast<std::size_t>(count > 0 ? count : 0));
    if (count <= 0) return out;
    if (threads < 1) threads = 1;
    if (threads == 1 || count == 1) {
        for (long long i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = fn(i);
        return out;
    }
    const int workers = static_cast<int>(std::min<long long>(threads, count));
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (long long i = w; i < count; i += workers)
                    out[static_cast<std::size_t>(i)] = fn(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

}  // namespace rcc
