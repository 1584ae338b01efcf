// Copyright 2026 the fbaspower authors. Licensed under the Apache License,
// Version 2.0. See the COPYING file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include "fbaspower/experiments.hpp"
#include "fbaspower/fbas.hpp"
#include "fbaspower/power.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace fbaspower
{

struct ParseResult
{
    Fbas fbas;
    // Human-readable notes about tolerated irregularities (dropped
    // unresolvable validator references). Empty for clean documents.
    std::vector<std::string> warnings;
};

// Parses a JSON array of node records:
//   [{"publicKey": "...",
//     "quorumSet": {"threshold": 2,
//                   "validators": ["..."],
//                   "innerQuorumSets": [...]}}, ...]
// Node indices follow document order; aliases are the publicKey values.
// Validator strings that resolve to no publicKey are dropped with a warning,
// as crawler snapshots routinely contain them. Throws ParseError on
// malformed JSON, duplicate publicKey values, duplicate validators within
// one quorum-set level, or thresholds violating 1 <= t <= members after
// resolution.
ParseResult parse_fbas(std::string const& text);
ParseResult parse_fbas(std::istream& in);

// Canonical JSON document for the model: sorted keys, two-space indent,
// nodes in index order, trailing newline. parse_fbas(serialize_fbas(f))
// reproduces f exactly.
std::string serialize_fbas(Fbas const& fbas);

enum class ReportFormat
{
    json,
    csv,
};

char const* to_string(ReportFormat format);

// Power-index table, one row per node ordered by node index.
// CSV columns (exact):       node_index,alias,value_numerator,value_denominator,method,m,seed
// CSV columns (approximate): node_index,alias,value_float,method,m,seed
// with value_float printed to 17 significant digits; m and seed are empty
// for exact reports.
std::string write_report(Fbas const& fbas, PowerIndexReport const& report,
                         ReportFormat format);

// CSV columns: kind,n,method,m,reps,status,median_seconds
// status is "ok" or "skipped"; m and median_seconds are empty when absent.
std::string write_report(BenchReport const& report, ReportFormat format);

// CSV columns: kind,n,m,reps,mmpe (mmpe as a fraction, 0.047 meaning 4.7%).
// The JSON form also carries the base seed and the per-run errors.
std::string write_report(AccuracyReport const& report, ReportFormat format);

} // namespace fbaspower
