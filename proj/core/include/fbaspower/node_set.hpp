// Copyright 2026 the fbaspower authors. Licensed under the Apache License,
// Version 2.0. See the COPYING file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace fbaspower
{

using NodeIndex = std::uint32_t;

// Dense set of node indices over a fixed universe 0..n-1, stored as a bit
// vector. Coalitions, quorums and slices are all NodeSets.
class NodeSet
{
  public:
    NodeSet() = default;
    explicit NodeSet(std::size_t universeSize);
    NodeSet(std::size_t universeSize, std::initializer_list<NodeIndex> members);

    static NodeSet
    full(std::size_t universeSize);

    std::size_t
    universeSize() const
    {
        return mUniverseSize;
    }

    bool
    contains(NodeIndex i) const
    {
        return i < mUniverseSize &&
               (mWords[i >> 6] & (std::uint64_t{1} << (i & 63))) != 0;
    }

    void insert(NodeIndex i);
    void erase(NodeIndex i);

    std::size_t count() const;

    bool
    empty() const
    {
        return count() == 0;
    }

    bool intersects(NodeSet const& other) const;
    bool isSubsetOf(NodeSet const& other) const;

    NodeSet& operator&=(NodeSet const& other);
    NodeSet& operator|=(NodeSet const& other);
    NodeSet& operator-=(NodeSet const& other);

    friend NodeSet
    operator&(NodeSet lhs, NodeSet const& rhs)
    {
        lhs &= rhs;
        return lhs;
    }

    friend NodeSet
    operator|(NodeSet lhs, NodeSet const& rhs)
    {
        lhs |= rhs;
        return lhs;
    }

    friend NodeSet
    operator-(NodeSet lhs, NodeSet const& rhs)
    {
        lhs -= rhs;
        return lhs;
    }

    bool operator==(NodeSet const& other) const;

    // Ascending list of member indices.
    std::vector<NodeIndex> members() const;

    // Orders by size first, then lexicographically on the sorted index
    // sequences. Used for canonical output ordering.
    static bool canonicalLess(NodeSet const& a, NodeSet const& b);

    // Strict total order usable as a container comparator (lexicographic on
    // index sequences only).
    static bool lexLess(NodeSet const& a, NodeSet const& b);

    std::string toString() const;

  private:
    std::size_t mUniverseSize{0};
    std::vector<std::uint64_t> mWords;
};

} // namespace fbaspower
