// Copyright 2026 the fbaspower authors. Licensed under the Apache License,
// Version 2.0. See the COPYING file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include <fbaspower/fbas.hpp>
#include <fbaspower/generators.hpp>

#include <doctest.h>

#include <stdexcept>

using namespace fbaspower;

TEST_CASE("supermajority threshold")
{
    CHECK(supermajority_threshold(1) == 1);
    CHECK(supermajority_threshold(2) == 2);
    CHECK(supermajority_threshold(3) == 3);
    CHECK(supermajority_threshold(4) == 3);
    CHECK(supermajority_threshold(7) == 5);
    CHECK(supermajority_threshold(10) == 7);
    CHECK(supermajority_threshold(20) == 14);
    CHECK(supermajority_threshold(30) == 21);
    CHECK_THROWS_AS(supermajority_threshold(0), std::invalid_argument);
}

TEST_CASE("symmetric topology structure")
{
    auto fbas = gen_symmetric(4);
    REQUIRE(fbas.size() == 4);
    for (NodeIndex i = 0; i < 4; ++i)
    {
        CHECK(fbas.node(i).alias == "n" + std::to_string(i));
        auto const& qset = fbas.node(i).quorumSet;
        CHECK(qset.threshold == 3);
        CHECK(qset.validators == std::vector<NodeIndex>{0, 1, 2, 3});
        CHECK(qset.innerSets.empty());
    }

    CHECK(gen_symmetric(1).node(0).quorumSet.threshold == 1);
    CHECK_THROWS_AS(gen_symmetric(0), std::invalid_argument);
}

TEST_CASE("organizational topology structure")
{
    auto fbas = gen_organizational(4);
    REQUIRE(fbas.size() == 12);
    for (NodeIndex i = 0; i < 12; ++i)
    {
        CHECK(fbas.node(i).alias == "org" + std::to_string(i / 3) + "-n" +
                                        std::to_string(i % 3));
        auto const& qset = fbas.node(i).quorumSet;
        CHECK(qset.threshold == 3); // 4 organizations, tolerate 1
        CHECK(qset.validators.empty());
        REQUIRE(qset.innerSets.size() == 4);
        for (std::uint32_t j = 0; j < 4; ++j)
        {
            auto const& org = qset.innerSets[j];
            CHECK(org.threshold == 2);
            CHECK(org.validators ==
                  std::vector<NodeIndex>{3 * j, 3 * j + 1, 3 * j + 2});
            CHECK(org.innerSets.empty());
        }
    }

    auto single = gen_organizational(1);
    REQUIRE(single.size() == 3);
    CHECK(single.node(0).quorumSet.threshold == 1);
    CHECK(single.node(0).quorumSet.innerSets.at(0).threshold == 2);
    CHECK_THROWS_AS(gen_organizational(0), std::invalid_argument);
}

TEST_CASE("generated topologies have a full top tier and intersection")
{
    for (std::uint32_t n = 1; n <= 12; ++n)
    {
        auto fbas = gen_symmetric(n);
        CHECK(top_tier(fbas) == NodeSet::full(n));
        CHECK(has_quorum_intersection(fbas));
    }
    for (std::uint32_t m = 1; m <= 4; ++m)
    {
        auto fbas = gen_organizational(m);
        CHECK(top_tier(fbas) == NodeSet::full(3 * m));
        CHECK(has_quorum_intersection(fbas));
    }
}

TEST_CASE("organizational minimal quorums take 2 of 3 from enough orgs")
{
    auto fbas = gen_organizational(2);
    auto minimal = find_minimal_quorums(fbas);
    // 2 orgs, threshold 2: both orgs contribute 2 of their 3 nodes.
    REQUIRE(minimal.size() == 9);
    for (auto const& q : minimal)
    {
        CHECK(q.count() == 4);
        CHECK((q & NodeSet(6, {0, 1, 2})).count() == 2);
        CHECK((q & NodeSet(6, {3, 4, 5})).count() == 2);
    }
}
