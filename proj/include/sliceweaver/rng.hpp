#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace sliceweaver {

/// SplitMix64 generator. Tiny state, fully specified arithmetic, so the
/// same seed reproduces the same stream on every platform.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in (0, 1]; never 0, so log() stays finite.
    double next_unit() {
        return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
    }

    /// Standard normal via Box-Muller. Always consumes two uniforms.
    double next_normal() {
        const double u1 = next_unit();
        const double u2 = next_unit();
        return std::sqrt(-2.0 * std::log(u1)) *
               std::cos(2.0 * std::numbers::pi * u2);
    }

private:
    std::uint64_t state_;
};

/// Seed for the independent sub-stream of one replication. Mixing through
/// SplitMix64 keeps adjacent replication indices decorrelated, and the
/// derivation depends only on (seed, replication), never on worker order.
inline std::uint64_t replication_seed(std::uint64_t seed, std::uint64_t replication) {
    SplitMix64 mix(seed ^ (0x9E3779B97F4A7C15ULL * (replication + 1)));
    mix.next();
    return mix.next();
}

}  // namespace sliceweaver
