// Copyright 2026 the fbaspower authors. Licensed under the Apache License,
// Version 2.0. See the COPYING file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "fbaspower/generators.hpp"

#include <stdexcept>
#include <string>

namespace fbaspower
{

char const*
to_string(TopologyKind kind)
{
    return kind == TopologyKind::symmetric ? "symmetric" : "organizational";
}

std::uint32_t
supermajority_threshold(std::uint32_t k)
{
    if (k == 0)
    {
        throw std::invalid_argument("member count must be positive");
    }
    return k - (k - 1) / 3;
}

Fbas
gen_symmetric(std::uint32_t n)
{
    if (n == 0)
    {
        throw std::invalid_argument("node count must be positive");
    }
    QuorumSet qset;
    qset.threshold = supermajority_threshold(n);
    qset.validators.reserve(n);
    for (std::uint32_t i = 0; i < n; ++i)
    {
        qset.validators.push_back(i);
    }

    Fbas fbas;
    for (std::uint32_t i = 0; i < n; ++i)
    {
        fbas.addNode("n" + std::to_string(i), qset);
    }
    fbas.validate();
    return fbas;
}

Fbas
gen_organizational(std::uint32_t m)
{
    if (m == 0)
    {
        throw std::invalid_argument("organization count must be positive");
    }
    QuorumSet qset;
    qset.threshold = supermajority_threshold(m);
    qset.innerSets.reserve(m);
    for (std::uint32_t j = 0; j < m; ++j)
    {
        QuorumSet org;
        org.threshold = 2;
        org.validators = {3 * j, 3 * j + 1, 3 * j + 2};
        qset.innerSets.push_back(std::move(org));
    }

    Fbas fbas;
    for (std::uint32_t j = 0; j < m; ++j)
    {
        for (std::uint32_t k = 0; k < 3; ++k)
        {
            fbas.addNode(
                "org" + std::to_string(j) + "-n" + std::to_string(k), qset);
        }
    }
    fbas.validate();
    return fbas;
}

} // namespace fbaspower
