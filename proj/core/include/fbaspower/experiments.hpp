// Copyright 2026 the fbaspower authors. Licensed under the Apache License,
// Version 2.0. See the COPYING file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include "fbaspower/generators.hpp"
#include "fbaspower/power.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

namespace fbaspower
{

// One timed cell of a runtime benchmark. Exact cells above the enumeration
// cap are reported as skipped rather than silently omitted.
struct BenchRow
{
    TopologyKind kind;
    std::uint32_t nodes;
    PowerMethod method;
    std::optional<std::uint64_t> samples; // approximate rows only
    std::uint32_t reps;
    bool skipped = false;
    double medianSeconds = 0.0;
};

struct BenchReport
{
    std::vector<BenchRow> rows;
};

struct BenchParams
{
    std::vector<TopologyKind> kinds;
    std::vector<std::uint32_t> nodeCounts;
    std::vector<PowerMethod> methods;
    // m values for approximate cells; ignored for exact cells.
    std::vector<std::uint64_t> sampleCounts;
    std::uint32_t reps = 10;
    std::size_t enumerationCap = DEFAULT_ENUMERATION_CAP;
    std::uint64_t seed = 1;
    std::ostream* progress = nullptr; // one line per cell when set
};

// Times power-index computation over each (kind, n, method[, m]) cell,
// reps times, and reports the median wall-clock seconds. Timed sections
// run single-threaded so cells are comparable.
BenchReport run_runtime_bench(BenchParams const& params);

// One accuracy cell: sampling error of the approximate method against the
// exact values, as a mean percentage error averaged over reps runs.
struct AccuracyRow
{
    TopologyKind kind;
    std::uint32_t nodes;
    std::uint64_t samples;
    std::uint32_t reps;
    std::uint64_t baseSeed;
    double mmpe = 0.0;
    std::vector<double> mpePerRun;
};

struct AccuracyReport
{
    std::vector<AccuracyRow> rows;
};

struct AccuracyParams
{
    std::vector<TopologyKind> kinds;
    std::vector<std::uint32_t> nodeCounts;
    std::vector<std::uint64_t> sampleCounts;
    std::uint32_t reps = 20;
    std::uint64_t baseSeed = 1;
    std::size_t enumerationCap = DEFAULT_ENUMERATION_CAP;
    std::ostream* progress = nullptr; // one line per cell when set
};

// For every (kind, n): computes exact indices once, then for every m runs
// the sampler reps times (run j seeded with baseSeed + j) and averages the
// per-run mean percentage errors. Throws EnumerationCapError when a
// requested n has no computable exact baseline.
AccuracyReport run_accuracy_study(AccuracyParams const& params);

// (1/|players|) * sum over players of |approx_i - exact_i| / exact_i.
// Every player must have a nonzero exact value.
double mean_percentage_error(std::span<Rational const> exact,
                             std::span<Rational const> approx,
                             NodeSet const& players);

// Builds the requested topology; organizational kinds require n % 3 == 0.
Fbas make_topology(TopologyKind kind, std::uint32_t n);

} // namespace fbaspower
