// Copyright 2026 the fbaspower authors. Licensed under the Apache License,
// Version 2.0. See the COPYING file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include "fbaspower/fbas.hpp"

namespace fbaspower
{

// An FBAS cast as a simple cooperative game: coalitions are node sets drawn
// from `players`, and a coalition wins iff it contains a quorum. Only the top
// tier can ever be critical, so games default to playing over it; the
// full-node-set form exists for cross-checks.
struct CooperativeGame
{
    Fbas const* fbas{nullptr};
    NodeSet players;

    static CooperativeGame over_top_tier(Fbas const& fbas);
    static CooperativeGame over_all_nodes(Fbas const& fbas);
    static CooperativeGame over_players(Fbas const& fbas, NodeSet players);
};

// 1 iff the coalition contains a quorum, else 0.
int characteristic_value(CooperativeGame const& game, NodeSet const& coalition);

// True iff the coalition wins and stops winning when node i leaves it.
bool is_critical(CooperativeGame const& game, NodeIndex i,
                 NodeSet const& coalition);

} // namespace fbaspower
