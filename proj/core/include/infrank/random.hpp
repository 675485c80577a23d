#pragma once

#include <cstdint>
#include <random>

namespace infrank {

using Rng = std::mt19937_64;

/// SplitMix64 finalizer. Used only to derive independent stream seeds.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Seed for stream `index` under `master`. Streams for different indices (and
/// different purposes, via `domain`) do not depend on evaluation order.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t domain,
                                    std::uint64_t index) noexcept {
    return mix64(mix64(mix64(master) ^ domain) + index);
}

namespace seed_domain {
inline constexpr std::uint64_t kIcr = 0x1c5;
inline constexpr std::uint64_t kThresholdRun = 0x7e7a;
}  // namespace seed_domain

/// Uniform double in [0, 1) with 53 random bits. Same sequence on every platform,
/// unlike std::uniform_real_distribution.
inline double uniform01(Rng& rng) noexcept {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace infrank
