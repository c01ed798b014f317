#pragma once

#include <cstdint>

namespace hotspot {

/// 64-bit finalizer with full avalanche (murmur3 variant).
inline std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 33;
    z *= 0xff51afd7ed558ccdull;
    z ^= z >> 33;
    z *= 0xc4ceb9fe1a85ec53ull;
    z ^= z >> 33;
    return z;
}

/// Counter-based generator: value at (seed, counter) is a pure function of
/// its inputs, so any position of a random stream can be regenerated without
/// stepping through the ones before it.
inline std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t counter) {
    std::uint64_t z = mix64(seed ^ 0x9e3779b97f4a7c15ull);
    return mix64(z + counter * 0xbf58476d1ce4e5b9ull);
}

/// Uniform double in [0, 1) with 53 random bits.
inline double counter_unit(std::uint64_t seed, std::uint64_t counter) {
    return static_cast<double>(counter_hash(seed, counter) >> 11) * 0x1.0p-53;
}

/// Sequential convenience wrapper over counter_hash; used by tests and
/// anywhere a stream of pseudo-random draws is simpler than indexing.
class SplitRng {
public:
    explicit SplitRng(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t next_u64() { return counter_hash(seed_, counter_++); }

    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform in [lo, hi] inclusive; unbiased via rejection.
    std::uint64_t next_range(std::uint64_t lo, std::uint64_t hi) {
        if (hi <= lo) return lo;
        const std::uint64_t span = hi - lo + 1;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t bits;
        do {
            bits = next_u64();
        } while (bits >= limit);
        return lo + bits % span;
    }

private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
};

}  // namespace hotspot
