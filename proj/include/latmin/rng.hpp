#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "latmin/rational.hpp"

namespace latmin {

// Seeded generator for instance synthesis. Sampling is hand-rolled on top of
// mt19937_64 because the <random> distributions are implementation-defined;
// a fixed seed must reproduce byte-identical instances everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    // uniform in [lo, hi], inclusive
    long uniform_long(long lo, long hi) {
        if (hi < lo) throw DomainError("empty sampling range");
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(eng_() % span);
    }

    double uniform01() {
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }

    // uniform over the grid {lo + j/den} inside [lo, hi]
    Rational uniform_rational(long lo, long hi, long den = 64) {
        long steps = (hi - lo) * den;
        long j = uniform_long(0, steps);
        Rational q(lo * den + j, den);
        q.canonicalize();
        return q;
    }

private:
    std::mt19937_64 eng_;
};

// Nonincreasing vector of n rationals in [lo, hi].
inline std::vector<Rational> random_nonincreasing(Rng& rng, int n, long lo, long hi,
                                                  long den = 64) {
    std::vector<Rational> r(static_cast<std::size_t>(n));
    for (auto& x : r) x = rng.uniform_rational(lo, hi, den);
    std::sort(r.begin(), r.end(), [](const Rational& a, const Rational& b) { return a > b; });
    return r;
}

} // namespace latmin
