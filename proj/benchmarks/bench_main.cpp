// Copyright 2026 the fbaspower authors. Licensed under the Apache License,
// Version 2.0. See the COPYING file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

// Microbenchmarks for the hot paths: quorum checks, minimal quorum
// enumeration, exact power indices and permutation sampling throughput.
// Run with --benchmark_filter=... to narrow the set.

#include <fbaspower/fbas.hpp>
#include <fbaspower/generators.hpp>
#include <fbaspower/io.hpp>
#include <fbaspower/power.hpp>

#include <benchmark/benchmark.h>

using namespace fbaspower;

namespace
{

void
BM_QuorumCheck(benchmark::State& state)
{
    auto fbas = gen_symmetric(static_cast<std::uint32_t>(state.range(0)));
    auto everyone = fbas.allNodes();
    for (auto _ : state)
    {
        benchmark::DoNotOptimize(is_quorum(fbas, everyone));
    }
}
BENCHMARK(BM_QuorumCheck)->Arg(10)->Arg(100)->Arg(1000);

void
BM_GreatestQuorumWithin(benchmark::State& state)
{
    auto fbas = gen_organizational(static_cast<std::uint32_t>(state.range(0)));
    auto candidate = fbas.allNodes();
    // Punch holes so the pruning loop has work to do.
    for (NodeIndex i = 0; i < fbas.size(); i += 5)
    {
        candidate.erase(i);
    }
    for (auto _ : state)
    {
        benchmark::DoNotOptimize(greatest_quorum_within(fbas, candidate));
    }
}
BENCHMARK(BM_GreatestQuorumWithin)->Arg(10)->Arg(50)->Arg(200);

void
BM_MinimalQuorumsSymmetric(benchmark::State& state)
{
    auto fbas = gen_symmetric(static_cast<std::uint32_t>(state.range(0)));
    for (auto _ : state)
    {
        benchmark::DoNotOptimize(find_minimal_quorums(fbas));
    }
}
BENCHMARK(BM_MinimalQuorumsSymmetric)->Arg(5)->Arg(10)->Arg(15)->Arg(20);

void
BM_MinimalQuorumsOrganizational(benchmark::State& state)
{
    auto fbas = gen_organizational(static_cast<std::uint32_t>(state.range(0)));
    for (auto _ : state)
    {
        benchmark::DoNotOptimize(find_minimal_quorums(fbas));
    }
}
BENCHMARK(BM_MinimalQuorumsOrganizational)->Arg(2)->Arg(4)->Arg(6);

void
BM_ExactPower(benchmark::State& state)
{
    auto fbas = gen_symmetric(static_cast<std::uint32_t>(state.range(0)));
    auto game = CooperativeGame::over_all_nodes(fbas);
    for (auto _ : state)
    {
        benchmark::DoNotOptimize(exact_power_indices(game));
    }
}
BENCHMARK(BM_ExactPower)->DenseRange(6, 18, 3)->Unit(benchmark::kMicrosecond);

void
BM_SampledPower(benchmark::State& state)
{
    auto fbas = gen_symmetric(static_cast<std::uint32_t>(state.range(0)));
    auto game = CooperativeGame::over_all_nodes(fbas);
    ApproxOptions options;
    options.samples = 10000;
    options.seed = 1;
    for (auto _ : state)
    {
        benchmark::DoNotOptimize(approx_power_indices(game, options));
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                            static_cast<std::int64_t>(options.samples));
}
BENCHMARK(BM_SampledPower)->Arg(10)->Arg(20)->Arg(40)
    ->Unit(benchmark::kMillisecond);

void
BM_ParseDocument(benchmark::State& state)
{
    auto doc = serialize_fbas(
        gen_organizational(static_cast<std::uint32_t>(state.range(0))));
    for (auto _ : state)
    {
        benchmark::DoNotOptimize(parse_fbas(doc));
    }
    state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations()) *
                            static_cast<std::int64_t>(doc.size()));
}
BENCHMARK(BM_ParseDocument)->Arg(10)->Arg(100);

void
BM_SerializeDocument(benchmark::State& state)
{
    auto fbas = gen_organizational(static_cast<std::uint32_t>(state.range(0)));
    for (auto _ : state)
    {
        benchmark::DoNotOptimize(serialize_fbas(fbas));
    }
}
BENCHMARK(BM_SerializeDocument)->Arg(10)->Arg(100);

} // namespace

BENCHMARK_MAIN();
