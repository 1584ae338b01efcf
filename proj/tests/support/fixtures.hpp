// Copyright 2026 the fbaspower authors. Licensed under the Apache License,
// Version 2.0. See the COPYING file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <fbaspower/fbas.hpp>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>

namespace fbaspower::test
{

// Five nodes: a hub (node 0) content with any 3 of all 5, and two wings
// {1,2} and {3,4} that each insist on their own trio with the hub. The
// minimal quorums are {0,1,2} and {0,3,4}; exact shares are 7/15 for the
// hub and 2/15 for every wing node.
inline Fbas
hubAndWingsFbas()
{
    Fbas fbas;
    QuorumSet any3of5{3, {0, 1, 2, 3, 4}, {}};
    QuorumSet leftTrio{3, {0, 1, 2}, {}};
    QuorumSet rightTrio{3, {0, 3, 4}, {}};
    fbas.addNode("n0", any3of5);
    fbas.addNode("n1", leftTrio);
    fbas.addNode("n2", leftTrio);
    fbas.addNode("n3", rightTrio);
    fbas.addNode("n4", rightTrio);
    fbas.validate();
    return fbas;
}

// Two self-sufficient islands; both singletons are quorums, so the system
// has quorums but no quorum intersection.
inline Fbas
splitFbas()
{
    Fbas fbas;
    fbas.addNode("a", QuorumSet{1, {0}, {}});
    fbas.addNode("b", QuorumSet{1, {1}, {}});
    fbas.validate();
    return fbas;
}

// No subset satisfies anybody: a hand-built, deliberately unsatisfiable
// quorum set (legal for core operations, rejected by validate()).
inline Fbas
quorumlessFbas()
{
    Fbas fbas;
    fbas.addNode("stuck", QuorumSet{1, {}, {}});
    return fbas;
}

// Appends leaf nodes that trust nodes 0 and 1 but are trusted by nobody;
// no minimal quorum ever contains them, so their share must be exactly 0.
inline Fbas
withLeafNodes(Fbas fbas, std::uint32_t leaves)
{
    for (std::uint32_t k = 0; k < leaves; ++k)
    {
        fbas.addNode("leaf" + std::to_string(k), QuorumSet{2, {0, 1}, {}});
    }
    fbas.validate();
    return fbas;
}

// Structurally arbitrary FBAS: random validator subsets, random thresholds,
// occasionally one inner set. May or may not have quorums or intersection.
inline Fbas
randomFbas(std::mt19937_64& rng, std::uint32_t n)
{
    auto pick = [&rng](std::uint32_t lo, std::uint32_t hi) {
        return std::uniform_int_distribution<std::uint32_t>(lo, hi)(rng);
    };

    Fbas fbas;
    for (std::uint32_t i = 0; i < n; ++i)
    {
        QuorumSet qset;
        for (std::uint32_t j = 0; j < n; ++j)
        {
            if (pick(0, 99) < 55)
            {
                qset.validators.push_back(j);
            }
        }
        if (qset.validators.empty())
        {
            qset.validators.push_back(pick(0, n - 1));
        }

        if (n >= 3 && pick(0, 3) == 0)
        {
            std::vector<NodeIndex> pool(n);
            std::iota(pool.begin(), pool.end(), 0);
            std::shuffle(pool.begin(), pool.end(), rng);
            auto members = pick(2, 3);
            QuorumSet inner;
            inner.validators.assign(pool.begin(), pool.begin() + members);
            std::sort(inner.validators.begin(), inner.validators.end());
            inner.threshold = pick(1, members);
            qset.innerSets.push_back(std::move(inner));
        }

        qset.threshold = pick(
            1, static_cast<std::uint32_t>(qset.memberCount()));
        fbas.addNode("r" + std::to_string(i), qset);
    }
    fbas.validate();
    return fbas;
}

inline bool
sameModel(Fbas const& a, Fbas const& b)
{
    if (a.size() != b.size())
    {
        return false;
    }
    for (NodeIndex i = 0; i < a.size(); ++i)
    {
        if (a.node(i).alias != b.node(i).alias ||
            !(a.node(i).quorumSet == b.node(i).quorumSet))
        {
            return false;
        }
    }
    return true;
}

} // namespace fbaspower::test
