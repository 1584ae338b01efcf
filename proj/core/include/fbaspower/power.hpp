// Copyright 2026 the fbaspower authors. Licensed under the Apache License,
// Version 2.0. See the COPYING file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include "fbaspower/game.hpp"
#include "fbaspower/rational.hpp"

#include <optional>
#include <vector>

namespace fbaspower
{

enum class PowerMethod
{
    exact,
    approximate
};

char const* to_string(PowerMethod method);

// Per-node power indices. `values` has one entry per node of the FBAS; nodes
// outside the player set hold exact zero. Both methods produce exact
// rationals: enumeration sums factorial weights, sampling yields
// pivot-count/m. Values over the player set always sum to exactly 1.
struct PowerIndexReport
{
    PowerMethod method{PowerMethod::exact};
    NodeSet playerSet;
    std::vector<Rational> values;
    std::optional<std::uint64_t> samples; // approximate only
    std::optional<std::uint64_t> seed;    // approximate only

    double
    valueAsDouble(NodeIndex i) const
    {
        return values.at(i).get_d();
    }
};

inline constexpr std::size_t DEFAULT_ENUMERATION_CAP = 25;

// Enumeration past this point would need multi-word coalition masks and a
// multi-gigabyte winning table; the cap cannot be raised beyond it.
inline constexpr std::size_t MAX_ENUMERATION_PLAYERS = 30;

struct ExactOptions
{
    // Enumeration walks 2^k coalitions; refuse beyond this many players.
    std::size_t enumerationCap = DEFAULT_ENUMERATION_CAP;
};

struct ApproxOptions
{
    std::uint64_t samples = 100000;
    std::uint64_t seed = 0;
    // Worker count for sharding the permutation range. Results are identical
    // for any shard count: permutation j always draws its own RNG stream.
    unsigned shards = 1;
};

// Exact Shapley-Shubik index of every player by full coalition enumeration.
// Throws EnumerationCapError when the player set exceeds the cap.
PowerIndexReport exact_power_indices(CooperativeGame const& game,
                                     ExactOptions const& options = {});

// Monte-Carlo estimate from `samples` random player permutations: each
// permutation contributes its unique pivot. Throws NoWinningCoalitionError
// when the player set contains no winning coalition.
PowerIndexReport approx_power_indices(CooperativeGame const& game,
                                      ApproxOptions const& options);

struct RewardRequest
{
    PowerMethod method = PowerMethod::exact;
    std::uint64_t samples = 100000; // approximate only
    std::uint64_t seed = 0;         // approximate only
    unsigned shards = 1;
    std::size_t enumerationCap = DEFAULT_ENUMERATION_CAP;
    // The reward function presumes quorum intersection; set to force a
    // distribution for a split FBAS anyway.
    bool ignoreQuorumIntersection = false;
};

// The reward share of every node: dist(i) is node i's power index in the
// game played over the top tier. Refuses FBASs without quorum intersection
// (NoQuorumIntersectionError) unless overridden, and FBASs with no quorums at
// all (NoQuorumsError).
PowerIndexReport reward_distribution(Fbas const& fbas,
                                     RewardRequest const& request);

} // namespace fbaspower
