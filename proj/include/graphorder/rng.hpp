#pragma once

#include <cstdint>

namespace graphorder {

// splitmix64. Deterministic across platforms, unlike the standard library
// distributions, so seeded output is part of the reproducibility contract.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound) via 128-bit multiply.
    std::uint64_t next_below(std::uint64_t bound) {
        using u128 = unsigned __int128;
        return static_cast<std::uint64_t>((static_cast<u128>(next()) * bound) >> 64);
    }

    // Uniform in [0, 1).
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

// Decorrelates (seed, stream index) pairs for per-edge / per-chunk
// substreams; generation order then never depends on thread count.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    SplitMix64 rng(seed ^ (stream + 0x517cc1b727220a95ULL) * 0x2545f4914f6cdd1dULL);
    return rng.next();
}

} // namespace graphorder
