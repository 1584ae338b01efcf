// Copyright 2026 the fbaspower authors. Licensed under the Apache License,
// Version 2.0. See the COPYING file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <string>

namespace fbaspower
{

// Exact arithmetic for power indices. Factorials overflow 64-bit integers
// past 20 players, so values are kept as big-integer rationals end to end and
// only converted to doubles at the output boundary.
using BigInt = mpz_class;
using Rational = mpq_class;

inline Rational
make_rational(std::uint64_t numerator, std::uint64_t denominator)
{
    Rational r(BigInt(static_cast<unsigned long>(numerator)),
               BigInt(static_cast<unsigned long>(denominator)));
    r.canonicalize();
    return r;
}

inline std::string
numerator_string(Rational const& r)
{
    return r.get_num().get_str();
}

inline std::string
denominator_string(Rational const& r)
{
    return r.get_den().get_str();
}

} // namespace fbaspower
