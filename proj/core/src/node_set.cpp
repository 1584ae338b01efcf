// Copyright 2026 the fbaspower authors. Licensed under the Apache License,
// Version 2.0. See the COPYING file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "fbaspower/node_set.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <sstream>

namespace fbaspower
{

NodeSet::NodeSet(std::size_t universeSize)
    : mUniverseSize(universeSize), mWords((universeSize + 63) / 64, 0)
{
}

NodeSet::NodeSet(std::size_t universeSize,
                 std::initializer_list<NodeIndex> members)
    : NodeSet(universeSize)
{
    for (auto i : members)
    {
        insert(i);
    }
}

NodeSet
NodeSet::full(std::size_t universeSize)
{
    NodeSet s(universeSize);
    for (auto& w : s.mWords)
    {
        w = ~std::uint64_t{0};
    }
    if (universeSize % 64 != 0 && !s.mWords.empty())
    {
        s.mWords.back() >>= 64 - (universeSize % 64);
    }
    return s;
}

void
NodeSet::insert(NodeIndex i)
{
    assert(i < mUniverseSize);
    mWords[i >> 6] |= std::uint64_t{1} << (i & 63);
}

void
NodeSet::erase(NodeIndex i)
{
    assert(i < mUniverseSize);
    mWords[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
}

std::size_t
NodeSet::count() const
{
    std::size_t n = 0;
    for (auto w : mWords)
    {
        n += static_cast<std::size_t>(std::popcount(w));
    }
    return n;
}

bool
NodeSet::intersects(NodeSet const& other) const
{
    auto n = std::min(mWords.size(), other.mWords.size());
    for (std::size_t k = 0; k < n; ++k)
    {
        if (mWords[k] & other.mWords[k])
        {
            return true;
        }
    }
    return false;
}

bool
NodeSet::isSubsetOf(NodeSet const& other) const
{
    for (std::size_t k = 0; k < mWords.size(); ++k)
    {
        auto w = k < other.mWords.size() ? other.mWords[k] : 0;
        if (mWords[k] & ~w)
        {
            return false;
        }
    }
    return true;
}

NodeSet&
NodeSet::operator&=(NodeSet const& other)
{
    assert(mUniverseSize == other.mUniverseSize);
    for (std::size_t k = 0; k < mWords.size(); ++k)
    {
        mWords[k] &= other.mWords[k];
    }
    return *this;
}

NodeSet&
NodeSet::operator|=(NodeSet const& other)
{
    assert(mUniverseSize == other.mUniverseSize);
    for (std::size_t k = 0; k < mWords.size(); ++k)
    {
        mWords[k] |= other.mWords[k];
    }
    return *this;
}

NodeSet&
NodeSet::operator-=(NodeSet const& other)
{
    assert(mUniverseSize == other.mUniverseSize);
    for (std::size_t k = 0; k < mWords.size(); ++k)
    {
        mWords[k] &= ~other.mWords[k];
    }
    return *this;
}

bool
NodeSet::operator==(NodeSet const& other) const
{
    return mUniverseSize == other.mUniverseSize && mWords == other.mWords;
}

std::vector<NodeIndex>
NodeSet::members() const
{
    std::vector<NodeIndex> out;
    out.reserve(count());
    for (std::size_t k = 0; k < mWords.size(); ++k)
    {
        auto w = mWords[k];
        while (w)
        {
            auto bit = std::countr_zero(w);
            out.push_back(static_cast<NodeIndex>(k * 64 + bit));
            w &= w - 1;
        }
    }
    return out;
}

bool
NodeSet::canonicalLess(NodeSet const& a, NodeSet const& b)
{
    auto ca = a.count();
    auto cb = b.count();
    if (ca != cb)
    {
        return ca < cb;
    }
    return lexLess(a, b);
}

bool
NodeSet::lexLess(NodeSet const& a, NodeSet const& b)
{
    auto ma = a.members();
    auto mb = b.members();
    return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(),
                                        mb.end());
}

std::string
NodeSet::toString() const
{
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (auto i : members())
    {
        if (!first)
        {
            out << ',';
        }
        out << i;
        first = false;
    }
    out << '}';
    return out.str();
}

} // namespace fbaspower
