// Copyright 2026 the fbaspower authors. Licensed under the Apache License,
// Version 2.0. See the COPYING file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "fbaspower/game.hpp"

#include <cassert>

namespace fbaspower
{

CooperativeGame
CooperativeGame::over_top_tier(Fbas const& fbas)
{
    return CooperativeGame{&fbas, top_tier(fbas)};
}

CooperativeGame
CooperativeGame::over_all_nodes(Fbas const& fbas)
{
    return CooperativeGame{&fbas, fbas.allNodes()};
}

CooperativeGame
CooperativeGame::over_players(Fbas const& fbas, NodeSet players)
{
    assert(players.universeSize() == fbas.size());
    return CooperativeGame{&fbas, std::move(players)};
}

int
characteristic_value(CooperativeGame const& game, NodeSet const& coalition)
{
    assert(coalition.isSubsetOf(game.players));
    return greatest_quorum_within(*game.fbas, coalition).empty() ? 0 : 1;
}

bool
is_critical(CooperativeGame const& game, NodeIndex i, NodeSet const& coalition)
{
    assert(coalition.contains(i));
    if (characteristic_value(game, coalition) == 0)
    {
        return false;
    }
    auto without = coalition;
    without.erase(i);
    return characteristic_value(game, without) == 0;
}

} // namespace fbaspower
