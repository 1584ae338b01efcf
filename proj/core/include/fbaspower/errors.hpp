// Copyright 2026 the fbaspower authors. Licensed under the Apache License,
// Version 2.0. See the COPYING file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace fbaspower
{

struct Error : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

// Malformed input document (bad JSON, duplicate keys, invalid thresholds).
struct ParseError : Error
{
    using Error::Error;
};

// The FBAS has no quorums at all; no reward distribution is defined.
struct NoQuorumsError : Error
{
    using Error::Error;
};

// The FBAS lacks quorum intersection; refusing to distribute rewards unless
// explicitly overridden.
struct NoQuorumIntersectionError : Error
{
    using Error::Error;
};

// Exact enumeration was requested for a player set above the configured cap.
struct EnumerationCapError : Error
{
    using Error::Error;
};

// The player set contains no winning coalition; sampling has no pivot.
struct NoWinningCoalitionError : Error
{
    using Error::Error;
};

} // namespace fbaspower
