#pragma once

#include <cstdint>
#include <random>

#include "antipod/scalar.hpp"

namespace antipod {

// Deterministic bounded draws over mt19937_64. Rejection sampling instead of
// std distributions keeps streams identical across standard libraries.
class DetRng {
public:
    explicit DetRng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = eng_();
        } while (x >= limit);
        return x % n;
    }

    long range(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    // height-bounded rational: |numerator| <= num_bound, denominator <= den_bound
    Scalar rational(long num_bound, long den_bound) {
        return Scalar(range(-num_bound, num_bound), range(1, den_bound));
    }

private:
    std::mt19937_64 eng_;
};

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace antipod
