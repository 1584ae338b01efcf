// Copyright 2026 the fbaspower authors. Licensed under the Apache License,
// Version 2.0. See the COPYING file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "fbaspower/power.hpp"
#include "fbaspower/detail/compiled_game.hpp"
#include "fbaspower/detail/rng.hpp"
#include "fbaspower/errors.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <numeric>
#include <thread>

namespace fbaspower
{

char const*
to_string(PowerMethod method)
{
    return method == PowerMethod::exact ? "exact" : "approximate";
}

namespace
{

// One bit per coalition mask: does the coalition contain a quorum?
class WinTable
{
  public:
    explicit WinTable(std::uint64_t maskCount)
        : mWords((maskCount + 63) / 64, 0)
    {
    }

    bool
    get(std::uint64_t mask) const
    {
        return (mWords[mask >> 6] >> (mask & 63)) & 1;
    }

    void
    set(std::uint64_t mask)
    {
        mWords[mask >> 6] |= std::uint64_t{1} << (mask & 63);
    }

  private:
    std::vector<std::uint64_t> mWords;
};

PowerIndexReport
makeReport(Fbas const& fbas, NodeSet playerSet, PowerMethod method)
{
    PowerIndexReport report;
    report.method = method;
    report.playerSet = std::move(playerSet);
    report.values.assign(fbas.size(), Rational(0));
    return report;
}

} // namespace

PowerIndexReport
exact_power_indices(CooperativeGame const& game, ExactOptions const& options)
{
    auto const& fbas = *game.fbas;
    detail::CompiledGame compiled(fbas, game.players);
    auto k = compiled.playerCount();
    auto cap = std::min(options.enumerationCap, MAX_ENUMERATION_PLAYERS);
    if (k > cap)
    {
        throw EnumerationCapError(
            "exact enumeration over " + std::to_string(k) +
            " players exceeds the cap of " + std::to_string(cap) +
            " (2^k coalitions); use the approximate method");
    }

    auto report = makeReport(fbas, game.players, PowerMethod::exact);
    if (k == 0)
    {
        return report;
    }

    auto maskCount = std::uint64_t{1} << k;

    // Winning coalitions, bottom-up: a coalition wins iff it wins already
    // without some member or is itself a quorum. Every proper sub-coalition
    // has a smaller mask value, so ascending mask order sees all of them.
    WinTable win(maskCount);
    for (std::uint64_t mask = 1; mask < maskCount; ++mask)
    {
        bool winning = false;
        for (auto bits = mask; bits && !winning; bits &= bits - 1)
        {
            winning = win.get(mask ^ (bits & (~bits + 1)));
        }
        if (!winning)
        {
            winning = compiled.isQuorum(&mask);
        }
        if (winning)
        {
            win.set(mask);
        }
    }

    // cnt[pos][s]: coalitions of size s in which player pos is critical.
    std::vector<std::vector<std::uint64_t>> cnt(
        k, std::vector<std::uint64_t>(k + 1, 0));
    for (std::uint64_t mask = 1; mask < maskCount; ++mask)
    {
        if (!win.get(mask))
        {
            continue;
        }
        auto size = static_cast<std::size_t>(std::popcount(mask));
        for (auto bits = mask; bits; bits &= bits - 1)
        {
            auto bit = bits & (~bits + 1);
            if (!win.get(mask ^ bit))
            {
                auto pos = static_cast<std::size_t>(std::countr_zero(bit));
                ++cnt[pos][size];
            }
        }
    }

    // sigma_i = sum over sizes s of cnt[i][s] * (s-1)!(k-s)!/k!, kept exact.
    std::vector<BigInt> fact(k + 1);
    for (std::size_t s = 0; s <= k; ++s)
    {
        mpz_fac_ui(fact[s].get_mpz_t(), static_cast<unsigned long>(s));
    }
    std::vector<Rational> weight(k + 1, Rational(0));
    for (std::size_t s = 1; s <= k; ++s)
    {
        Rational w(fact[s - 1] * fact[k - s], fact[k]);
        w.canonicalize();
        weight[s] = w;
    }

    for (std::size_t pos = 0; pos < k; ++pos)
    {
        Rational sigma(0);
        for (std::size_t s = 1; s <= k; ++s)
        {
            if (cnt[pos][s])
            {
                sigma += Rational(BigInt(
                             static_cast<unsigned long>(cnt[pos][s]))) *
                         weight[s];
            }
        }
        report.values[compiled.playerAt(pos)] = sigma;
    }
    return report;
}

namespace
{

struct SampleSlice
{
    std::uint64_t first;
    std::uint64_t last; // exclusive
    std::vector<std::uint64_t> pivots;
};

// Processes permutations [first, last): draws each from its own RNG stream,
// locates the pivot by binary search over prefix length, and counts it.
void
samplePermutations(detail::CompiledGame const& compiled, std::uint64_t seed,
                   SampleSlice& slice)
{
    auto k = compiled.playerCount();
    auto words = compiled.wordCount();
    slice.pivots.assign(k, 0);

    std::vector<std::uint32_t> perm(k);
    // prefix[len] = coalition of the first len elements, words each.
    std::vector<std::uint64_t> prefixes((k + 1) * words, 0);
    std::vector<std::uint64_t> scratch(words, 0);

    for (auto j = slice.first; j < slice.last; ++j)
    {
        detail::SplitMix64 rng(detail::derive_stream_seed(seed, j));
        std::iota(perm.begin(), perm.end(), 0);
        for (std::size_t i = k - 1; i > 0; --i)
        {
            auto r = rng.nextBounded(i + 1);
            std::swap(perm[i], perm[r]);
        }

        std::fill_n(prefixes.begin(), words, 0);
        for (std::size_t len = 1; len <= k; ++len)
        {
            auto* prev = prefixes.data() + (len - 1) * words;
            auto* cur = prefixes.data() + len * words;
            std::copy_n(prev, words, cur);
            auto p = perm[len - 1];
            cur[p >> 6] |= std::uint64_t{1} << (p & 63);
        }

        // The game is monotone, so prefix worth flips 0 -> 1 exactly once;
        // the player added at the flip is the permutation's pivot.
        std::size_t lo = 1;
        std::size_t hi = k;
        while (lo < hi)
        {
            auto mid = lo + (hi - lo) / 2;
            if (compiled.containsQuorum(prefixes.data() + mid * words,
                                        scratch.data()))
            {
                hi = mid;
            }
            else
            {
                lo = mid + 1;
            }
        }
        ++slice.pivots[perm[lo - 1]];
    }
}

} // namespace

PowerIndexReport
approx_power_indices(CooperativeGame const& game, ApproxOptions const& options)
{
    auto const& fbas = *game.fbas;
    if (options.samples < 1)
    {
        throw Error("sample count must be at least 1");
    }
    detail::CompiledGame compiled(fbas, game.players);
    auto k = compiled.playerCount();
    auto words = compiled.wordCount();
    if (k == 0)
    {
        throw NoWinningCoalitionError("the player set is empty");
    }

    std::vector<std::uint64_t> full(words, 0);
    for (std::size_t pos = 0; pos < k; ++pos)
    {
        full[pos >> 6] |= std::uint64_t{1} << (pos & 63);
    }
    std::vector<std::uint64_t> scratch(words, 0);
    if (!compiled.containsQuorum(full.data(), scratch.data()))
    {
        throw NoWinningCoalitionError(
            "the player set contains no winning coalition");
    }

    auto m = options.samples;
    auto shards = std::max<std::uint64_t>(1, options.shards);
    shards = std::min(shards, m);

    std::vector<SampleSlice> slices(shards);
    for (std::uint64_t s = 0; s < shards; ++s)
    {
        slices[s].first = m / shards * s + std::min(s, m % shards);
        slices[s].last = slices[s].first + m / shards + (s < m % shards);
    }

    if (shards == 1)
    {
        samplePermutations(compiled, options.seed, slices[0]);
    }
    else
    {
        std::vector<std::thread> workers;
        workers.reserve(shards);
        for (auto& slice : slices)
        {
            workers.emplace_back([&compiled, &options, &slice] {
                samplePermutations(compiled, options.seed, slice);
            });
        }
        for (auto& w : workers)
        {
            w.join();
        }
    }

    auto report = makeReport(fbas, game.players, PowerMethod::approximate);
    report.samples = m;
    report.seed = options.seed;
    for (std::size_t pos = 0; pos < k; ++pos)
    {
        std::uint64_t pivots = 0;
        for (auto const& slice : slices)
        {
            pivots += slice.pivots[pos];
        }
        report.values[compiled.playerAt(pos)] = make_rational(pivots, m);
    }
    return report;
}

PowerIndexReport
reward_distribution(Fbas const& fbas, RewardRequest const& request)
{
    auto minimal = find_minimal_quorums(fbas);
    if (minimal.empty())
    {
        throw NoQuorumsError("the FBAS has no quorums");
    }
    if (!quorums_intersect(fbas, minimal) && !request.ignoreQuorumIntersection)
    {
        throw NoQuorumIntersectionError(
            "the FBAS lacks quorum intersection; refusing to distribute "
            "rewards (override to proceed)");
    }

    auto game = CooperativeGame::over_players(
        fbas, top_tier_of(minimal, fbas.size()));
    if (request.method == PowerMethod::exact)
    {
        return exact_power_indices(game,
                                   ExactOptions{request.enumerationCap});
    }
    return approx_power_indices(
        game, ApproxOptions{request.samples, request.seed, request.shards});
}

} // namespace fbaspower
