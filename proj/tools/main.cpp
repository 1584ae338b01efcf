// Copyright 2026 the fbaspower authors. Licensed under the Apache License,
// Version 2.0. See the COPYING file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

// Command line front end. Machine-readable results go to standard output
// (or --output); all human-readable chatter goes to standard error.
// Exit codes: 0 success, 2 usage or parse error, 3 precondition refusal,
// 4 enumeration cap exceeded.

#include <fbaspower/errors.hpp>
#include <fbaspower/experiments.hpp>
#include <fbaspower/fbas.hpp>
#include <fbaspower/generators.hpp>
#include <fbaspower/io.hpp>
#include <fbaspower/power.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace
{

using namespace fbaspower;

int const EXIT_USAGE = 2;
int const EXIT_REFUSED = 3;
int const EXIT_CAP = 4;

void
writeOutput(std::string const& path, std::string data)
{
    if (!data.empty() && data.back() != '\n')
    {
        data += '\n';
    }
    if (path.empty() || path == "-")
    {
        std::cout << data;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
    {
        throw Error("cannot open \"" + path + "\" for writing");
    }
    out << data;
    if (!out)
    {
        throw Error("failed writing to \"" + path + "\"");
    }
}

Fbas
loadFbas(std::string const& path)
{
    ParseResult parsed;
    if (path.empty() || path == "-")
    {
        parsed = parse_fbas(std::cin);
    }
    else
    {
        std::ifstream in(path, std::ios::binary);
        if (!in)
        {
            throw ParseError("cannot open \"" + path + "\" for reading");
        }
        parsed = parse_fbas(in);
    }
    for (auto const& w : parsed.warnings)
    {
        std::cerr << "warning: " << w << "\n";
    }
    return std::move(parsed.fbas);
}

ReportFormat
parseFormat(std::string const& text)
{
    return text == "csv" ? ReportFormat::csv : ReportFormat::json;
}

TopologyKind
parseKind(std::string const& text)
{
    return text == "organizational" ? TopologyKind::organizational
                                    : TopologyKind::symmetric;
}

// "5", "3,6,9", "6..15", "3..30:3", and comma-joined mixes thereof.
std::vector<std::uint32_t>
parseCountList(std::string const& text)
{
    std::vector<std::uint32_t> out;
    std::size_t pos = 0;
    while (pos <= text.size())
    {
        auto comma = text.find(',', pos);
        auto item = text.substr(
            pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (item.empty())
        {
            throw CLI::ValidationError("node counts",
                                       "empty item in \"" + text + "\"");
        }
        try
        {
            auto dots = item.find("..");
            if (dots == std::string::npos)
            {
                out.push_back(static_cast<std::uint32_t>(std::stoul(item)));
            }
            else
            {
                auto lo = std::stoul(item.substr(0, dots));
                auto rest = item.substr(dots + 2);
                unsigned long step = 1;
                if (auto colon = rest.find(':'); colon != std::string::npos)
                {
                    step = std::stoul(rest.substr(colon + 1));
                    rest = rest.substr(0, colon);
                }
                auto hi = std::stoul(rest);
                if (step == 0 || hi < lo)
                {
                    throw std::invalid_argument(item);
                }
                for (auto v = lo; v <= hi; v += step)
                {
                    out.push_back(static_cast<std::uint32_t>(v));
                }
            }
        }
        catch (std::logic_error const&)
        {
            throw CLI::ValidationError(
                "node counts", "cannot parse \"" + item +
                                   "\" (use N, A..B, A..B:STEP, or a "
                                   "comma-separated mix)");
        }
        if (comma == std::string::npos)
        {
            break;
        }
        pos = comma + 1;
    }
    return out;
}

std::vector<PowerMethod>
parseMethods(std::vector<std::string> const& names)
{
    std::vector<PowerMethod> out;
    for (auto const& name : names)
    {
        out.push_back(name == "exact" ? PowerMethod::exact
                                      : PowerMethod::approximate);
    }
    return out;
}

std::vector<TopologyKind>
parseKinds(std::vector<std::string> const& names)
{
    std::vector<TopologyKind> out;
    for (auto const& name : names)
    {
        out.push_back(parseKind(name));
    }
    return out;
}

void
cmdAnalyze(std::string const& input, std::string const& output)
{
    auto fbas = loadFbas(input);
    auto minimal = find_minimal_quorums(fbas);

    nlohmann::json doc = nlohmann::json::object();
    doc["node_count"] = fbas.size();
    auto quorums = nlohmann::json::array();
    for (auto const& q : minimal)
    {
        quorums.push_back(q.members());
    }
    doc["minimal_quorums"] = std::move(quorums);
    doc["top_tier"] = top_tier_of(minimal, fbas.size()).members();
    doc["quorum_intersection"] = quorums_intersect(fbas, minimal);
    writeOutput(output, doc.dump(2));
}

struct RankArgs
{
    std::string input = "-";
    std::string output;
    std::string format = "csv";
    std::string method;
    std::uint64_t samples = 100000;
    std::optional<std::uint64_t> seed;
    unsigned shards = 1;
    std::size_t cap = DEFAULT_ENUMERATION_CAP;
    bool ignoreQuorumIntersection = false;
    bool samplesGiven = false;
    bool shardsGiven = false;
};

void
cmdRank(RankArgs const& args)
{
    auto fbas = loadFbas(args.input);

    RewardRequest req;
    req.enumerationCap = args.cap;
    req.ignoreQuorumIntersection = args.ignoreQuorumIntersection;
    if (args.method.empty())
    {
        auto tierSize = top_tier(fbas).count();
        req.method = tierSize <= 15 ? PowerMethod::exact
                                    : PowerMethod::approximate;
        std::cerr << "note: top tier has " << tierSize
                  << " players; defaulting to the " << to_string(req.method)
                  << " method\n";
    }
    else
    {
        req.method =
            args.method == "exact" ? PowerMethod::exact
                                   : PowerMethod::approximate;
    }

    if (req.method == PowerMethod::exact)
    {
        if (args.samplesGiven || args.seed || args.shardsGiven)
        {
            throw CLI::ValidationError(
                "rank", "--samples, --seed and --shards apply only to the "
                        "approximate method");
        }
    }
    else
    {
        if (!args.seed)
        {
            throw CLI::ValidationError(
                "rank", "the approximate method requires --seed; sampling "
                        "is never silently seeded");
        }
        req.samples = args.samples;
        req.seed = *args.seed;
        req.shards = args.shards;
    }

    auto report = reward_distribution(fbas, req);
    writeOutput(args.output,
                write_report(fbas, report, parseFormat(args.format)));
}

} // namespace

int
main(int argc, char** argv)
{
    CLI::App app{"Quorum analysis and power-index reward distribution for "
                 "federated Byzantine agreement systems"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "fbaspower 0.1.0");

    std::string analyzeIn = "-";
    std::string analyzeOut;
    auto* analyze = app.add_subcommand(
        "analyze", "Summarize the quorum structure of an FBAS document");
    analyze->add_option("-i,--input", analyzeIn,
                        "FBAS JSON document, or - for standard input");
    analyze->add_option("-o,--output", analyzeOut,
                        "Output file (default: standard output)");

    RankArgs rank;
    auto* rankCmd = app.add_subcommand(
        "rank", "Compute every node's reward share (power index)");
    rankCmd->add_option("-i,--input", rank.input,
                        "FBAS JSON document, or - for standard input");
    rankCmd->add_option("-o,--output", rank.output,
                        "Output file (default: standard output)");
    rankCmd->add_option("--format", rank.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    rankCmd
        ->add_option("--method", rank.method,
                     "exact enumeration or approximate sampling (default: "
                     "exact for top tiers of at most 15 players, else "
                     "approximate)")
        ->check(CLI::IsMember({"exact", "approx"}));
    auto* samplesOpt =
        rankCmd
            ->add_option("-m,--samples", rank.samples,
                         "Permutations to sample (approximate method)")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
    rankCmd->add_option("--seed", rank.seed,
                        "Sampling seed (required with the approximate "
                        "method)");
    auto* shardsOpt =
        rankCmd
            ->add_option("--shards", rank.shards,
                         "Worker threads for sampling; the result is "
                         "identical for every shard count")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
    rankCmd->add_option("--cap", rank.cap, "Exact-enumeration player cap")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    rankCmd->add_flag("--ignore-quorum-intersection",
                      rank.ignoreQuorumIntersection,
                      "Distribute rewards even when quorums do not all "
                      "pairwise intersect");

    std::string genKind;
    std::uint32_t genNodes = 0;
    std::uint32_t genOrgs = 0;
    std::string genOut;
    auto* gen = app.add_subcommand(
        "gen", "Generate a synthetic FBAS document");
    gen->add_option("--kind", genKind, "Topology family")
        ->required()
        ->check(CLI::IsMember({"symmetric", "organizational"}));
    auto* genNodesOpt = gen->add_option(
        "-n,--nodes", genNodes, "Node count (symmetric topologies)");
    auto* genOrgsOpt = gen->add_option(
        "--orgs", genOrgs,
        "Organization count (organizational topologies; 3 nodes each)");
    gen->add_option("-o,--output", genOut,
                    "Output file (default: standard output)");

    std::vector<std::string> benchKinds{"symmetric"};
    std::string benchNodes = "3..12";
    std::vector<std::string> benchMethods{"exact", "approx"};
    std::vector<std::uint64_t> benchSamples{1000, 10000, 100000};
    std::uint32_t benchReps = 10;
    std::size_t benchCap = DEFAULT_ENUMERATION_CAP;
    std::uint64_t benchSeed = 1;
    std::string benchOut;
    std::string benchFormat = "csv";
    bool benchFullScale = false;
    auto* bench = app.add_subcommand(
        "bench", "Time power-index computation across topology sizes");
    bench->add_option("--kind", benchKinds, "Topology families to cover")
        ->check(CLI::IsMember({"symmetric", "organizational"}))
        ->capture_default_str();
    bench
        ->add_option("-n,--nodes", benchNodes,
                     "Node counts: N, A..B, A..B:STEP, comma-separated")
        ->capture_default_str();
    bench->add_option("--method", benchMethods, "Methods to time")
        ->check(CLI::IsMember({"exact", "approx"}))
        ->capture_default_str();
    auto* benchSamplesOpt =
        bench
            ->add_option("-m,--samples", benchSamples,
                         "Sample counts for approximate cells")
            ->delimiter(',')
            ->check(CLI::PositiveNumber);
    bench->add_option("--reps", benchReps, "Repetitions per cell (median)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    bench->add_option("--cap", benchCap, "Exact-enumeration player cap")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    bench->add_option("--seed", benchSeed, "Base seed for timed sampling")
        ->capture_default_str();
    bench->add_option("-o,--output", benchOut,
                      "Output file (default: standard output)");
    bench->add_option("--format", benchFormat, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    auto* benchNodesOpt = bench->get_option("--nodes");
    bench->add_flag("--full-scale", benchFullScale,
                    "Cover n up to 30 and m up to 1e8 (hours of runtime; "
                    "explicit --nodes/--samples still win)");

    std::vector<std::string> accKinds{"symmetric"};
    std::string accNodes = "5,10,15,20";
    std::vector<std::uint64_t> accSamples{1000, 10000, 100000};
    std::uint32_t accReps = 20;
    std::uint64_t accSeed = 1;
    std::size_t accCap = DEFAULT_ENUMERATION_CAP;
    std::string accOut;
    std::string accFormat = "csv";
    bool accFullScale = false;
    auto* accuracy = app.add_subcommand(
        "accuracy",
        "Measure sampling error of the approximate method against exact "
        "values");
    accuracy->add_option("--kind", accKinds, "Topology families to cover")
        ->check(CLI::IsMember({"symmetric", "organizational"}))
        ->capture_default_str();
    accuracy
        ->add_option("-n,--nodes", accNodes,
                     "Node counts: N, A..B, A..B:STEP, comma-separated")
        ->capture_default_str();
    auto* accSamplesOpt =
        accuracy
            ->add_option("-m,--samples", accSamples,
                         "Sample counts to evaluate")
            ->delimiter(',')
            ->check(CLI::PositiveNumber);
    auto* accRepsOpt =
        accuracy
            ->add_option("--reps", accReps,
                         "Sampling runs per cell (mean error reported)")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
    accuracy->add_option("--seed", accSeed, "Base seed; run j uses seed+j")
        ->capture_default_str();
    accuracy->add_option("--cap", accCap, "Exact-enumeration player cap")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    accuracy->add_option("-o,--output", accOut,
                         "Output file (default: standard output)");
    accuracy->add_option("--format", accFormat, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    auto* accNodesOpt = accuracy->get_option("--nodes");
    accuracy->add_flag("--full-scale", accFullScale,
                       "50 runs per cell, n up to 30, m up to 1e6, cap 30 "
                       "(hours of runtime; explicit options still win)");

    try
    {
        app.parse(argc, argv);

        if (analyze->parsed())
        {
            cmdAnalyze(analyzeIn, analyzeOut);
        }
        else if (rankCmd->parsed())
        {
            rank.samplesGiven = samplesOpt->count() > 0;
            rank.shardsGiven = shardsOpt->count() > 0;
            cmdRank(rank);
        }
        else if (gen->parsed())
        {
            Fbas fbas;
            if (genKind == "symmetric")
            {
                if (genNodesOpt->count() == 0 || genOrgsOpt->count() > 0)
                {
                    throw CLI::ValidationError(
                        "gen", "symmetric topologies take --nodes only");
                }
                fbas = gen_symmetric(genNodes);
            }
            else
            {
                if (genOrgsOpt->count() == 0 || genNodesOpt->count() > 0)
                {
                    throw CLI::ValidationError(
                        "gen", "organizational topologies take --orgs only");
                }
                fbas = gen_organizational(genOrgs);
            }
            writeOutput(genOut, serialize_fbas(fbas));
        }
        else if (bench->parsed())
        {
            BenchParams params;
            params.kinds = parseKinds(benchKinds);
            params.methods = parseMethods(benchMethods);
            params.reps = benchReps;
            params.enumerationCap = benchCap;
            params.seed = benchSeed;
            params.progress = &std::cerr;
            if (benchFullScale)
            {
                params.nodeCounts = benchNodesOpt->count()
                                        ? parseCountList(benchNodes)
                                        : parseCountList("3..30:3");
                params.sampleCounts = benchSamples;
                if (benchSamplesOpt->count() == 0)
                {
                    params.sampleCounts = {10, 100, 1000, 10000, 100000,
                                           1000000, 10000000, 100000000};
                }
            }
            else
            {
                params.nodeCounts = parseCountList(benchNodes);
                params.sampleCounts = benchSamples;
            }
            auto report = run_runtime_bench(params);
            writeOutput(benchOut,
                        write_report(report, parseFormat(benchFormat)));
        }
        else if (accuracy->parsed())
        {
            AccuracyParams params;
            params.kinds = parseKinds(accKinds);
            params.reps = accReps;
            params.baseSeed = accSeed;
            params.enumerationCap = accCap;
            params.progress = &std::cerr;
            if (accFullScale)
            {
                params.nodeCounts = accNodesOpt->count()
                                        ? parseCountList(accNodes)
                                        : parseCountList("5..30:5");
                params.sampleCounts = accSamples;
                if (accSamplesOpt->count() == 0)
                {
                    params.sampleCounts = {1000, 10000, 100000, 1000000};
                }
                if (accRepsOpt->count() == 0)
                {
                    params.reps = 50;
                }
                params.enumerationCap =
                    std::max(params.enumerationCap, MAX_ENUMERATION_PLAYERS);
            }
            else
            {
                params.nodeCounts = parseCountList(accNodes);
                params.sampleCounts = accSamples;
            }
            auto report = run_accuracy_study(params);
            writeOutput(accOut, write_report(report, parseFormat(accFormat)));
        }
        return 0;
    }
    catch (CLI::CallForHelp const& e)
    {
        return app.exit(e);
    }
    catch (CLI::CallForAllHelp const& e)
    {
        return app.exit(e);
    }
    catch (CLI::CallForVersion const& e)
    {
        return app.exit(e);
    }
    catch (CLI::ParseError const& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        std::cerr << "run with --help for usage\n";
        return EXIT_USAGE;
    }
    catch (ParseError const& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_USAGE;
    }
    catch (std::invalid_argument const& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_USAGE;
    }
    catch (EnumerationCapError const& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        std::cerr << "hint: rerun with --method approx --seed <seed>, or "
                     "raise --cap\n";
        return EXIT_CAP;
    }
    catch (NoQuorumIntersectionError const& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        std::cerr << "hint: --ignore-quorum-intersection forces a "
                     "distribution\n";
        return EXIT_REFUSED;
    }
    catch (NoQuorumsError const& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_REFUSED;
    }
    catch (NoWinningCoalitionError const& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_REFUSED;
    }
    catch (std::exception const& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
