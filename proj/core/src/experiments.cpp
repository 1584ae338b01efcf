// Copyright 2026 the fbaspower authors. Licensed under the Apache License,
// Version 2.0. See the COPYING file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "fbaspower/experiments.hpp"
#include "fbaspower/errors.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>
#include <stdexcept>

namespace fbaspower
{

Fbas
make_topology(TopologyKind kind, std::uint32_t n)
{
    if (kind == TopologyKind::symmetric)
    {
        return gen_symmetric(n);
    }
    if (n % 3 != 0)
    {
        throw std::invalid_argument(
            "organizational topologies need a node count divisible by 3");
    }
    return gen_organizational(n / 3);
}

namespace
{

double
median(std::vector<double> samples)
{
    std::sort(samples.begin(), samples.end());
    auto n = samples.size();
    return n % 2 ? samples[n / 2]
                 : 0.5 * (samples[n / 2 - 1] + samples[n / 2]);
}

double
timeSeconds(auto&& work)
{
    auto t0 = std::chrono::steady_clock::now();
    work();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

// Fail fast on an unbuildable grid cell before any timed work runs.
static void
validateGrid(std::vector<TopologyKind> const& kinds,
             std::vector<std::uint32_t> const& nodeCounts)
{
    for (auto kind : kinds)
    {
        for (auto n : nodeCounts)
        {
            make_topology(kind, n);
        }
    }
}

} // namespace

BenchReport
run_runtime_bench(BenchParams const& params)
{
    if (params.reps < 1)
    {
        throw std::invalid_argument("reps must be at least 1");
    }
    validateGrid(params.kinds, params.nodeCounts);
    auto effectiveCap =
        std::min(params.enumerationCap, MAX_ENUMERATION_PLAYERS);

    BenchReport report;
    for (auto kind : params.kinds)
    {
        for (auto n : params.nodeCounts)
        {
            auto fbas = make_topology(kind, n);
            // In both generated families every node sits in some minimal
            // quorum, so the game over all nodes is the top-tier game.
            auto game = CooperativeGame::over_all_nodes(fbas);
            for (auto method : params.methods)
            {
                if (method == PowerMethod::exact)
                {
                    BenchRow row{kind, n, method, std::nullopt, params.reps};
                    if (n > effectiveCap)
                    {
                        if (params.progress)
                        {
                            *params.progress
                                << "bench " << to_string(kind) << " n=" << n
                                << " exact: skipped (cap " << effectiveCap
                                << ")" << std::endl;
                        }
                        row.skipped = true;
                        report.rows.push_back(std::move(row));
                        continue;
                    }
                    std::vector<double> times;
                    times.reserve(params.reps);
                    for (std::uint32_t rep = 0; rep < params.reps; ++rep)
                    {
                        times.push_back(timeSeconds([&] {
                            exact_power_indices(
                                game, ExactOptions{params.enumerationCap});
                        }));
                    }
                    row.medianSeconds = median(std::move(times));
                    if (params.progress)
                    {
                        *params.progress
                            << "bench " << to_string(kind) << " n=" << n
                            << " exact: median " << row.medianSeconds << " s"
                            << std::endl;
                    }
                    report.rows.push_back(std::move(row));
                }
                else
                {
                    for (auto m : params.sampleCounts)
                    {
                        BenchRow row{kind, n, method, m, params.reps};
                        std::vector<double> times;
                        times.reserve(params.reps);
                        for (std::uint32_t rep = 0; rep < params.reps; ++rep)
                        {
                            times.push_back(timeSeconds([&] {
                                approx_power_indices(
                                    game,
                                    ApproxOptions{m, params.seed + rep, 1});
                            }));
                        }
                        row.medianSeconds = median(std::move(times));
                        if (params.progress)
                        {
                            *params.progress
                                << "bench " << to_string(kind) << " n=" << n
                                << " approximate m=" << m << ": median "
                                << row.medianSeconds << " s" << std::endl;
                        }
                        report.rows.push_back(std::move(row));
                    }
                }
            }
        }
    }
    return report;
}

AccuracyReport
run_accuracy_study(AccuracyParams const& params)
{
    if (params.reps < 1)
    {
        throw std::invalid_argument("reps must be at least 1");
    }
    validateGrid(params.kinds, params.nodeCounts);

    AccuracyReport report;
    for (auto kind : params.kinds)
    {
        for (auto n : params.nodeCounts)
        {
            auto fbas = make_topology(kind, n);
            auto game = CooperativeGame::over_all_nodes(fbas);
            auto exact = exact_power_indices(
                game, ExactOptions{params.enumerationCap});
            for (auto m : params.sampleCounts)
            {
                AccuracyRow row{kind, n, m, params.reps, params.baseSeed};
                row.mpePerRun.reserve(params.reps);
                double sum = 0.0;
                for (std::uint32_t j = 0; j < params.reps; ++j)
                {
                    auto approx = approx_power_indices(
                        game, ApproxOptions{m, params.baseSeed + j, 1});
                    auto mpe = mean_percentage_error(
                        exact.values, approx.values, game.players);
                    row.mpePerRun.push_back(mpe);
                    sum += mpe;
                }
                row.mmpe = sum / params.reps;
                if (params.progress)
                {
                    *params.progress
                        << "accuracy " << to_string(kind) << " n=" << n
                        << " m=" << m << " reps=" << params.reps << ": mmpe "
                        << row.mmpe << std::endl;
                }
                report.rows.push_back(std::move(row));
            }
        }
    }
    return report;
}

double
mean_percentage_error(std::span<Rational const> exact,
                      std::span<Rational const> approx,
                      NodeSet const& players)
{
    if (exact.size() != approx.size())
    {
        throw std::invalid_argument("value vectors differ in length");
    }
    double sum = 0.0;
    std::size_t count = 0;
    for (auto i : players.members())
    {
        if (i >= exact.size())
        {
            throw std::invalid_argument("player index out of range");
        }
        if (exact[i] == 0)
        {
            throw Error(
                "mean percentage error undefined for a zero exact value");
        }
        Rational rel = abs(approx[i] - exact[i]) / exact[i];
        sum += rel.get_d();
        ++count;
    }
    if (count == 0)
    {
        throw std::invalid_argument("player set is empty");
    }
    return sum / count;
}

} // namespace fbaspower
