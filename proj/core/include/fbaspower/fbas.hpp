// Copyright 2026 the fbaspower authors. Licensed under the Apache License,
// Version 2.0. See the COPYING file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include "fbaspower/node_set.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fbaspower
{

// Recursive threshold structure: "at least `threshold` of these validators
// and inner sets". Validators are dense node indices into the owning Fbas.
struct QuorumSet
{
    std::uint32_t threshold{0};
    std::vector<NodeIndex> validators;
    std::vector<QuorumSet> innerSets;

    // Direct members at this level (not recursive).
    std::size_t
    memberCount() const
    {
        return validators.size() + innerSets.size();
    }

    bool operator==(QuorumSet const& other) const = default;
};

struct FbasNode
{
    std::string alias;
    QuorumSet quorumSet;
};

// An FBAS: a list of nodes, each with a quorum set. Node identity is the
// dense index 0..n-1; the alias is a display name (public key) unique within
// the Fbas.
class Fbas
{
  public:
    Fbas() = default;

    NodeIndex addNode(std::string alias, QuorumSet qset);

    std::size_t
    size() const
    {
        return mNodes.size();
    }

    FbasNode const&
    node(NodeIndex i) const
    {
        return mNodes.at(i);
    }

    std::vector<FbasNode> const&
    nodes() const
    {
        return mNodes;
    }

    NodeSet
    allNodes() const
    {
        return NodeSet::full(size());
    }

    std::optional<NodeIndex> findByAlias(std::string const& alias) const;

    // Checks the structural invariants: unique aliases, validator indices in
    // range, and every threshold within 1..memberCount at every level.
    // Throws ParseError on violation.
    void validate() const;

  private:
    std::vector<FbasNode> mNodes;
};

// True iff at least `threshold` of the quorum set's direct members are met by
// s: a validator counts when it is in s, an inner set when it is recursively
// satisfied by s.
bool is_quorum_set_satisfied(QuorumSet const& qset, NodeSet const& s);

// True iff u is non-empty and contains a slice for each member, i.e. every
// member's quorum set is satisfied by u.
bool is_quorum(Fbas const& fbas, NodeSet const& u);

// The unique maximal quorum contained in c, or the empty set if c contains no
// quorum. Computed by pruning members whose quorum set is unsatisfied until a
// fixed point.
NodeSet greatest_quorum_within(Fbas const& fbas, NodeSet c);

// All minimal quorums, deduplicated, sorted by size then lexicographically.
std::vector<NodeSet> find_minimal_quorums(Fbas const& fbas);

// Union of all minimal quorums.
NodeSet top_tier(Fbas const& fbas);
NodeSet top_tier_of(std::span<NodeSet const> minimalQuorums,
                    std::size_t universeSize);

// True iff there is at least one quorum and every pair of minimal quorums
// intersects. Since every quorum contains a minimal quorum, this implies that
// all quorums pairwise intersect.
bool has_quorum_intersection(Fbas const& fbas);

// Same verdict, given the precomputed minimal quorums of fbas. Runs in
// O(|minimalQuorums|) greatest_quorum_within calls instead of comparing all
// pairs: a quorum disjoint from some minimal quorum Q exists iff the
// complement of Q still contains a quorum.
bool quorums_intersect(Fbas const& fbas,
                       std::span<NodeSet const> minimalQuorums);

// Plain pairwise check; quadratic, used as the reference implementation.
bool all_pairwise_intersect(std::span<NodeSet const> sets);

} // namespace fbaspower
