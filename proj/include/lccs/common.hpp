#pragma once

#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <random>
#include <thread>
#include <vector>

namespace lccs {

/// Deterministic random source. mt19937_64 has a standard-mandated output
/// sequence, and the Gaussian/uniform transforms below avoid the
/// implementation-defined std::*_distribution classes, so the whole stream is
/// a pure function of the seed across compilers.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform in [0, 1).
    double uniform() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Standard normal via Box-Muller, one cached spare.
    double gaussian() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        // top 53 bits shifted into (0,1] so the log argument is never zero
        double u1 = (static_cast<double>(gen_() >> 11) + 1.0) * 0x1.0p-53;
        double u2 = static_cast<double>(gen_() >> 11) * 0x1.0p-53;
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        has_spare_ = true;
        return r * std::cos(a);
    }

    /// Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) {
        // rejection sampling keeps the draw unbiased
        std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
        std::uint64_t x;
        do {
            x = gen_();
        } while (x >= limit);
        return x % n;
    }

private:
    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

/// Worker count for parallel sections; LCCS_THREADS overrides the hardware
/// default.
inline unsigned worker_count() {
    if (const char* env = std::getenv("LCCS_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

/// Runs f(i) for i in [begin, end) across worker threads. Iterations must be
/// independent; scheduling is dynamic so uneven work balances out.
template <typename F>
void parallel_for(std::size_t begin, std::size_t end, F&& f) {
    if (end <= begin) return;
    std::size_t count = end - begin;
    unsigned workers = worker_count();
    if (workers > count) workers = static_cast<unsigned>(count);
    if (workers <= 1) {
        for (std::size_t i = begin; i < end; ++i) f(i);
        return;
    }
    std::atomic<std::size_t> cursor{begin};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) {
        pool.emplace_back([&]() {
            for (;;) {
                std::size_t i = cursor.fetch_add(1, std::memory_order_relaxed);
                if (i >= end) return;
                f(i);
            }
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace lccs
