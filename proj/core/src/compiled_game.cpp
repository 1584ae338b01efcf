// Copyright 2026 the fbaspower authors. Licensed under the Apache License,
// Version 2.0. See the COPYING file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "fbaspower/detail/compiled_game.hpp"

#include <bit>
#include <cstring>

namespace fbaspower::detail
{

namespace
{
CompiledQset
compile(QuorumSet const& qset, std::vector<std::int64_t> const& positionOf,
        std::size_t words)
{
    CompiledQset out;
    out.threshold = qset.threshold;
    out.validatorMask.assign(words, 0);
    for (auto v : qset.validators)
    {
        auto pos = positionOf[v];
        if (pos >= 0)
        {
            out.validatorMask[static_cast<std::size_t>(pos) >> 6] |=
                std::uint64_t{1} << (pos & 63);
        }
    }
    out.inner.reserve(qset.innerSets.size());
    for (auto const& inner : qset.innerSets)
    {
        out.inner.push_back(compile(inner, positionOf, words));
    }
    return out;
}
} // namespace

CompiledGame::CompiledGame(Fbas const& fbas, NodeSet const& players)
    : mPlayers(players.members())
{
    mWords = (mPlayers.size() + 63) / 64;
    if (mWords == 0)
    {
        mWords = 1;
    }
    std::vector<std::int64_t> positionOf(fbas.size(), -1);
    for (std::size_t pos = 0; pos < mPlayers.size(); ++pos)
    {
        positionOf[mPlayers[pos]] = static_cast<std::int64_t>(pos);
    }
    mQsets.reserve(mPlayers.size());
    for (auto p : mPlayers)
    {
        mQsets.push_back(compile(fbas.node(p).quorumSet, positionOf, mWords));
    }
}

bool
CompiledGame::satisfied(CompiledQset const& qset,
                        std::uint64_t const* mask) const
{
    std::uint64_t met = 0;
    for (std::size_t w = 0; w < mWords; ++w)
    {
        met += static_cast<std::uint64_t>(
            std::popcount(qset.validatorMask[w] & mask[w]));
    }
    if (met >= qset.threshold)
    {
        return true;
    }
    for (auto const& inner : qset.inner)
    {
        if (satisfied(inner, mask) && ++met >= qset.threshold)
        {
            return true;
        }
    }
    return false;
}

bool
CompiledGame::isQuorum(std::uint64_t const* mask) const
{
    bool empty = true;
    for (std::size_t w = 0; w < mWords; ++w)
    {
        auto bits = mask[w];
        empty = empty && bits == 0;
        while (bits)
        {
            auto pos = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
            if (!satisfied(mQsets[pos], mask))
            {
                return false;
            }
            bits &= bits - 1;
        }
    }
    return !empty;
}

bool
CompiledGame::containsQuorum(std::uint64_t const* mask,
                             std::uint64_t* scratch) const
{
    std::memcpy(scratch, mask, mWords * sizeof(std::uint64_t));
    bool changed = true;
    bool any = false;
    while (changed)
    {
        changed = false;
        any = false;
        for (std::size_t w = 0; w < mWords; ++w)
        {
            auto bits = scratch[w];
            while (bits)
            {
                auto bit = bits & (~bits + 1);
                auto pos =
                    w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
                if (!satisfied(mQsets[pos], scratch))
                {
                    scratch[w] &= ~bit;
                    changed = true;
                }
                else
                {
                    any = true;
                }
                bits &= bits - 1;
            }
        }
    }
    return any;
}

} // namespace fbaspower::detail
