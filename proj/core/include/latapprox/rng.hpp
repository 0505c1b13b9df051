#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <utility>

namespace latapprox {

/// Deterministic 64-bit generator (splitmix64). All randomized operations in
/// this library draw from it in a documented order, so results are
/// bit-reproducible across platforms and thread counts:
///   - randomized CBC: one draw for N, then one draw per component z_s, s=2..d
///   - approximation: the CBC draws, then one unit draw per shift coordinate
///   - Monte Carlo trials: trial t runs on the substream derive(seed, t)
/// Bounded draws use a 128-bit multiply-shift and consume exactly one value.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform integer in [0, n). Bias is < n / 2^64, negligible at the
    /// range sizes used here (candidate sets, prime lists).
    std::uint64_t next_below(std::uint64_t n) noexcept {
        using u128 = unsigned __int128;
        return static_cast<std::uint64_t>((u128(next()) * u128(n)) >> 64);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double next_unit() noexcept { return (next() >> 11) * 0x1.0p-53; }

    /// Two independent standard normals (Box-Muller).
    std::pair<double, double> next_normal_pair() noexcept {
        double u1 = 1.0 - next_unit();  // (0, 1]
        double u2 = next_unit();
        double r = std::sqrt(-2.0 * std::log(u1));
        double t = 2.0 * std::numbers::pi * u2;
        return {r * std::cos(t), r * std::sin(t)};
    }

    /// Seed of an independent substream. Used for per-trial parallelism;
    /// results do not depend on how trials are scheduled.
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream) noexcept {
        std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (stream + 1);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

}  // namespace latapprox
