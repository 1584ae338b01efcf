// Copyright 2026 the fbaspower authors. Licensed under the Apache License,
// Version 2.0. See the COPYING file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include "fbaspower/fbas.hpp"

#include <cstdint>

namespace fbaspower
{

enum class TopologyKind
{
    symmetric,
    organizational,
};

char const* to_string(TopologyKind kind);

// BFT supermajority threshold for k members: k - floor((k - 1) / 3),
// tolerating up to floor((k - 1) / 3) faulty members.
std::uint32_t supermajority_threshold(std::uint32_t k);

// n nodes, each trusting all n with the supermajority threshold.
// Nodes are named "n0".."n{n-1}".
Fbas gen_symmetric(std::uint32_t n);

// m organizations of 3 nodes each (3m nodes total). Every node requires a
// supermajority of organizations, where an organization counts as agreeing
// when 2 of its 3 nodes do. Nodes are named "org{j}-n{k}" with k in 0..2.
Fbas gen_organizational(std::uint32_t m);

} // namespace fbaspower
