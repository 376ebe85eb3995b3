#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include <antipod/lp.hpp>
#include <antipod/vec.hpp>

namespace testutil {

using antipod::Scalar;
using antipod::Vec;

// Bounded draws on top of raw mt19937_64 output; avoids distribution
// implementation differences across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    // uniform in [0, n)
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

    Scalar rational(long num_bound, long den_bound = 4) {
        return Scalar(range(-num_bound, num_bound), range(1, den_bound));
    }

    Vec point(std::size_t dim, long num_bound, long den_bound = 4) {
        Vec p(dim);
        for (auto& c : p) {
            c = rational(num_bound, den_bound);
        }
        return p;
    }

private:
    std::mt19937_64 eng_;
};

// Random small-integer LP. `boxed` draws every variable inside a box (the
// region is a polytope: statuses Optimal/Infeasible only); otherwise all
// variables are bounded below by 0 and the region is pointed but may recede.
inline antipod::LinearProgram random_lp(Rng& rng, bool boxed) {
    using antipod::LinearProgram;
    using antipod::Rel;

    const std::size_t n = 1 + rng.below(4);
    const std::size_t m = 1 + rng.below(6);
    Vec obj(n);
    for (auto& c : obj) {
        c = Scalar(rng.range(-4, 4));
    }
    LinearProgram lp = rng.below(2) == 0 ? LinearProgram::minimize(obj)
                                         : LinearProgram::maximize(obj);
    for (std::size_t i = 0; i < m; ++i) {
        Vec row(n);
        bool nonzero = false;
        for (auto& c : row) {
            c = Scalar(rng.range(-4, 4));
            nonzero = nonzero || c != 0;
        }
        if (!nonzero) {
            row[rng.below(n)] = Scalar(1 + rng.range(0, 3));
        }
        const long pick = rng.range(0, 5);
        const Rel rel = pick < 3 ? Rel::Le : (pick < 5 ? Rel::Ge : Rel::Eq);
        lp.add(std::move(row), rel, Scalar(rng.range(-6, 6)));
    }
    for (std::size_t j = 0; j < n; ++j) {
        if (boxed) {
            const long lo = rng.range(-4, 0);
            lp.set_lower(j, Scalar(lo));
            lp.set_upper(j, Scalar(rng.range(lo, 5)));
        } else {
            lp.set_lower(j, Scalar(0));
        }
    }
    return lp;
}

}  // namespace testutil
