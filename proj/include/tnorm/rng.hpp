#pragma once

#include <cmath>
#include <cstdint>

namespace tnorm {

/// Counter-based pseudo-random generator (splitmix64 finalizer applied to a
/// seed/stream/counter triple). Stateless apart from the counter, so streams
/// can be jumped to any index and sample loops can be partitioned across
/// workers while staying bit-reproducible.
class CounterRng {
public:
    explicit CounterRng(uint64_t seed, uint64_t stream = 0)
        : seed_(seed), stream_(stream), counter_(0) {}

    /// Jump directly to a counter position.
    void seek(uint64_t counter) { counter_ = counter; has_spare_ = false; }

    uint64_t next_u64() {
        uint64_t x = seed_ + 0x9e3779b97f4a7c15ULL * (counter_++ + 1)
                     + 0xbf58476d1ce4e5b9ULL * (stream_ + 1);
        x ^= x >> 30; x *= 0xbf58476d1ce4e5b9ULL;
        x ^= x >> 27; x *= 0x94d049bb133111ebULL;
        x ^= x >> 31;
        return x;
    }

    /// Uniform in (0,1); never returns 0 so it is safe inside log().
    double next_uniform() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    /// Standard normal via Box-Muller; caches the second value of each pair.
    double next_gaussian() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = next_uniform();
        double u2 = next_uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 2.0 * M_PI * u2;
        spare_ = r * std::sin(a);
        has_spare_ = true;
        return r * std::cos(a);
    }

    /// Uniform integer in [0, n).
    uint64_t next_below(uint64_t n) { return next_u64() % n; }

private:
    uint64_t seed_;
    uint64_t stream_;
    uint64_t counter_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace tnorm
