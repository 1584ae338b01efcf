// Copyright 2026 the fbaspower authors. Licensed under the Apache License,
// Version 2.0. See the COPYING file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include "fbaspower/fbas.hpp"

#include <cstdint>
#include <vector>

namespace fbaspower::detail
{

// A quorum set lowered onto player positions: validators become a bit mask
// over 0..k-1 where k is the player count. Validators outside the player set
// are dropped; they can never occur in a coalition drawn from the players.
struct CompiledQset
{
    std::uint32_t threshold{0};
    std::vector<std::uint64_t> validatorMask;
    std::vector<CompiledQset> inner;
};

// Precompiled view of a cooperative game for tight enumeration and sampling
// loops. Coalitions are raw word arrays over player positions; all methods
// are const and touch no shared state, so one instance can serve many
// threads. Callers own their scratch buffers.
class CompiledGame
{
  public:
    CompiledGame(Fbas const& fbas, NodeSet const& players);

    std::size_t
    playerCount() const
    {
        return mPlayers.size();
    }

    // Words per coalition mask.
    std::size_t
    wordCount() const
    {
        return mWords;
    }

    NodeIndex
    playerAt(std::size_t pos) const
    {
        return mPlayers[pos];
    }

    std::vector<NodeIndex> const&
    players() const
    {
        return mPlayers;
    }

    bool satisfied(CompiledQset const& qset, std::uint64_t const* mask) const;

    // Direct quorum test: mask non-empty and every member's quorum set
    // satisfied by mask.
    bool isQuorum(std::uint64_t const* mask) const;

    // Winning test for the simple game: does the coalition contain a quorum?
    // Copies mask into scratch (wordCount() words) and prunes to the fixed
    // point.
    bool containsQuorum(std::uint64_t const* mask,
                        std::uint64_t* scratch) const;

  private:
    std::vector<CompiledQset> mQsets; // indexed by player position
    std::vector<NodeIndex> mPlayers;  // position -> node index, ascending
    std::size_t mWords{1};
};

} // namespace fbaspower::detail
