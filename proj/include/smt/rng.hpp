#pragma once

#include <cstdint>

#include "smt/rational.hpp"

namespace smt {

// SplitMix64 (Steele, Lea, Flood 2014). Chosen over std::mt19937 so that the
// exact stream is pinned by this file alone; every report records its seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound) by rejection; bound > 0.
    std::uint64_t next_below(std::uint64_t bound) {
        std::uint64_t limit = bound * (UINT64_MAX / bound);
        std::uint64_t v = next_u64();
        while (v >= limit) v = next_u64();
        return v % bound;
    }

    // Uniform integer in [lo, hi].
    long next_int(long lo, long hi) {
        return lo + static_cast<long>(next_below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    // Nonzero integer in [-mag, mag].
    long next_nonzero(long mag) {
        long v = next_int(1, 2 * mag);
        return v <= mag ? v : mag - v;  // 1..mag, then -1..-mag
    }

    // Rational with numerator in [-mag, mag] and denominator in [1, den].
    Rational next_rational(long mag, long den) {
        Rational q(next_int(-mag, mag), next_int(1, den));
        q.canonicalize();
        return q;
    }

    // Deterministic sub-stream for task i under this seed.
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t i) {
        Rng r(seed + 0x632be59bd9b4e019ULL * (i + 1));
        return r.next_u64();
    }

private:
    std::uint64_t state_;
};

}  // namespace smt
