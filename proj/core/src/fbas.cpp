// Copyright 2026 the fbaspower authors. Licensed under the Apache License,
// Version 2.0. See the COPYING file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "fbaspower/fbas.hpp"
#include "fbaspower/errors.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace fbaspower
{

NodeIndex
Fbas::addNode(std::string alias, QuorumSet qset)
{
    mNodes.push_back(FbasNode{std::move(alias), std::move(qset)});
    return static_cast<NodeIndex>(mNodes.size() - 1);
}

std::optional<NodeIndex>
Fbas::findByAlias(std::string const& alias) const
{
    for (std::size_t i = 0; i < mNodes.size(); ++i)
    {
        if (mNodes[i].alias == alias)
        {
            return static_cast<NodeIndex>(i);
        }
    }
    return std::nullopt;
}

namespace
{
void
validateQuorumSet(QuorumSet const& qset, std::size_t nodeCount,
                  std::string const& owner)
{
    if (qset.threshold < 1 || qset.threshold > qset.memberCount())
    {
        throw ParseError("quorum set of '" + owner + "' has threshold " +
                         std::to_string(qset.threshold) + " but " +
                         std::to_string(qset.memberCount()) +
                         " direct members");
    }
    std::unordered_set<NodeIndex> seen;
    for (auto v : qset.validators)
    {
        if (v >= nodeCount)
        {
            throw ParseError("quorum set of '" + owner +
                             "' references unknown node index " +
                             std::to_string(v));
        }
        if (!seen.insert(v).second)
        {
            throw ParseError("quorum set of '" + owner +
                             "' lists validator " + std::to_string(v) +
                             " more than once");
        }
    }
    for (auto const& inner : qset.innerSets)
    {
        validateQuorumSet(inner, nodeCount, owner);
    }
}
} // namespace

void
Fbas::validate() const
{
    std::unordered_set<std::string> aliases;
    for (auto const& n : mNodes)
    {
        if (!n.alias.empty() && !aliases.insert(n.alias).second)
        {
            throw ParseError("duplicate node alias '" + n.alias + "'");
        }
    }
    for (auto const& n : mNodes)
    {
        validateQuorumSet(n.quorumSet, mNodes.size(), n.alias);
    }
}

bool
is_quorum_set_satisfied(QuorumSet const& qset, NodeSet const& s)
{
    std::uint64_t met = 0;
    for (auto v : qset.validators)
    {
        if (s.contains(v))
        {
            ++met;
        }
    }
    for (auto const& inner : qset.innerSets)
    {
        if (is_quorum_set_satisfied(inner, s))
        {
            ++met;
        }
    }
    return met >= qset.threshold;
}

bool
is_quorum(Fbas const& fbas, NodeSet const& u)
{
    if (u.empty())
    {
        return false;
    }
    for (auto i : u.members())
    {
        if (!is_quorum_set_satisfied(fbas.node(i).quorumSet, u))
        {
            return false;
        }
    }
    return true;
}

NodeSet
greatest_quorum_within(Fbas const& fbas, NodeSet c)
{
    // A node whose quorum set is unsatisfied by c cannot belong to any quorum
    // inside c (satisfaction is monotone), so pruning in any order reaches the
    // same fixed point: the union of all quorums contained in c.
    bool changed = true;
    while (changed)
    {
        changed = false;
        for (auto i : c.members())
        {
            if (!is_quorum_set_satisfied(fbas.node(i).quorumSet, c))
            {
                c.erase(i);
                changed = true;
            }
        }
    }
    return c;
}

namespace
{

// Reduces a known quorum to a minimal one: while removing some single member
// still leaves a quorum inside, continue from the greatest such quorum.
NodeSet
shrinkToMinimal(Fbas const& fbas, NodeSet quorum)
{
    bool shrunk = true;
    while (shrunk)
    {
        shrunk = false;
        for (auto i : quorum.members())
        {
            auto candidate = quorum;
            candidate.erase(i);
            auto g = greatest_quorum_within(fbas, candidate);
            if (!g.empty())
            {
                quorum = g;
                shrunk = true;
                break;
            }
        }
    }
    return quorum;
}

struct MinQuorumSearch
{
    Fbas const& fbas;
    std::vector<NodeIndex> candidates;
    std::set<NodeSet, bool (*)(NodeSet const&, NodeSet const&)> found{
        &NodeSet::lexLess};

    // Include/exclude branch and bound. `selection` holds the nodes committed
    // to so far, candidates[idx..] are still undecided, `available` is their
    // union.
    void
    recurse(NodeSet const& selection, NodeSet const& available,
            std::size_t idx)
    {
        if (greatest_quorum_within(fbas, available).empty())
        {
            return;
        }
        auto g = greatest_quorum_within(fbas, selection);
        if (!g.empty())
        {
            // Any quorum extending `selection` would strictly contain a
            // quorum already inside it, so nothing minimal lies deeper.
            found.insert(shrinkToMinimal(fbas, g));
            return;
        }
        if (idx == candidates.size())
        {
            return;
        }
        auto next = candidates[idx];
        auto withNext = selection;
        withNext.insert(next);
        recurse(withNext, available, idx + 1);
        auto without = available;
        without.erase(next);
        recurse(selection, without, idx + 1);
    }
};

} // namespace

std::vector<NodeSet>
find_minimal_quorums(Fbas const& fbas)
{
    // Nodes pruned from the full node set can never appear in any quorum.
    auto universe = greatest_quorum_within(fbas, fbas.allNodes());
    MinQuorumSearch search{fbas, universe.members()};
    search.recurse(NodeSet(fbas.size()), universe, 0);

    std::vector<NodeSet> result(search.found.begin(), search.found.end());
    std::sort(result.begin(), result.end(), &NodeSet::canonicalLess);
    return result;
}

NodeSet
top_tier_of(std::span<NodeSet const> minimalQuorums, std::size_t universeSize)
{
    NodeSet t(universeSize);
    for (auto const& q : minimalQuorums)
    {
        t |= q;
    }
    return t;
}

NodeSet
top_tier(Fbas const& fbas)
{
    auto minimal = find_minimal_quorums(fbas);
    return top_tier_of(minimal, fbas.size());
}

bool
all_pairwise_intersect(std::span<NodeSet const> sets)
{
    for (std::size_t a = 0; a < sets.size(); ++a)
    {
        for (std::size_t b = a + 1; b < sets.size(); ++b)
        {
            if (!sets[a].intersects(sets[b]))
            {
                return false;
            }
        }
    }
    return true;
}

bool
quorums_intersect(Fbas const& fbas, std::span<NodeSet const> minimalQuorums)
{
    if (minimalQuorums.empty())
    {
        return false;
    }
    std::size_t smallest = fbas.size();
    for (auto const& q : minimalQuorums)
    {
        smallest = std::min(smallest, q.count());
    }
    // Two disjoint quorums cannot fit when every quorum spans more than half
    // the nodes.
    if (2 * smallest > fbas.size())
    {
        return true;
    }
    for (auto const& q : minimalQuorums)
    {
        if (!greatest_quorum_within(fbas, fbas.allNodes() - q).empty())
        {
            return false;
        }
    }
    return true;
}

bool
has_quorum_intersection(Fbas const& fbas)
{
    auto minimal = find_minimal_quorums(fbas);
    return quorums_intersect(fbas, minimal);
}

} // namespace fbaspower
