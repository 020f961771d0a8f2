#pragma once

#include <cstdint>

namespace tropquot {

// 64-bit linear congruential generator with Knuth's MMIX constants:
//   state' = state * 6364136223846793005 + 1442695040888963407  (mod 2^64)
// The output is the top 32 bits of the new state; bounded draws use the
// multiply-shift reduction. Everything is fixed-width unsigned arithmetic, so
// a given seed produces the same stream on every platform.
class Lcg64 {
public:
    explicit Lcg64(std::uint64_t seed) : state_(seed) {}

    std::uint32_t next_u32() {
        state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<std::uint32_t>(state_ >> 32);
    }

    // uniform in [0, bound); bound must be positive
    std::uint64_t next_below(std::uint64_t bound) {
        return (static_cast<std::uint64_t>(next_u32()) * bound) >> 32;
    }

    // uniform in [lo, hi], inclusive
    long next_int(long lo, long hi) {
        return lo + static_cast<long>(next_below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    std::uint64_t state_;
};

}  // namespace tropquot
