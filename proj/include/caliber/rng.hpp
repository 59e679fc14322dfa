#pragma once

#include <cstdint>

namespace caliber {

// SplitMix64: seedable, splittable, and trivially reproducible across
// platforms. Per-restart streams are derived from a master seed by index so
// serial and parallel runs visit identical random sequences.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) with 53 bits; avoids implementation-defined
    // std::uniform_real_distribution so streams are identical everywhere.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Integer in [0, bound) via rejection-free multiply-shift; bound > 0.
    std::uint64_t next_below(std::uint64_t bound) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * bound) >> 64);
    }

    // Independent stream for substream `index` of the given master seed.
    static SplitMix64 stream(std::uint64_t master, std::uint64_t index) {
        SplitMix64 mixer(master ^ (0xA0761D6478BD642Full * (index + 1)));
        return SplitMix64(mixer.next());
    }
};

}  // namespace caliber
