// Copyright 2026 the fbaspower authors. Licensed under the Apache License,
// Version 2.0. See the COPYING file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstdint>

namespace fbaspower::detail
{

// splitmix64 (Steele, Lea, Flood). Small, fast, and splittable: every
// permutation draws its own stream derived from (seed, index), which makes
// sharded sampling order-independent and bit-reproducible.
class SplitMix64
{
  public:
    explicit SplitMix64(std::uint64_t seed) : mState(seed)
    {
    }

    std::uint64_t
    next()
    {
        std::uint64_t z = (mState += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform draw from [0, bound) via the fixed-point multiply reduction.
    std::uint64_t
    nextBounded(std::uint64_t bound)
    {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * bound) >> 64);
    }

    static std::uint64_t
    mix(std::uint64_t x)
    {
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
        return x ^ (x >> 31);
    }

  private:
    std::uint64_t mState;
};

// Stream seed for the index-th permutation of a run seeded with `seed`.
inline std::uint64_t
derive_stream_seed(std::uint64_t seed, std::uint64_t index)
{
    return SplitMix64::mix(seed + 0x9E3779B97F4A7C15ULL * (index + 1));
}

} // namespace fbaspower::detail
