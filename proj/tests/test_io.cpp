// Copyright 2026 the fbaspower authors. Licensed under the Apache License,
// Version 2.0. See the COPYING file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include <fbaspower/errors.hpp>
#include <fbaspower/generators.hpp>
#include <fbaspower/io.hpp>
#include <fbaspower/power.hpp>

#include "support/fixtures.hpp"

#include <doctest.h>

#include <random>
#include <sstream>

using namespace fbaspower;
using namespace fbaspower::test;

TEST_CASE("parse a hand-written document")
{
    // Out-of-order validators and an inner set; indices follow document
    // order, validators are normalized ascending.
    auto text = R"([
        {"publicKey": "beta",
         "quorumSet": {"threshold": 2, "validators": ["gamma", "alpha"]}},
        {"publicKey": "alpha",
         "quorumSet": {"threshold": 1,
                       "validators": [],
                       "innerQuorumSets": [
                           {"threshold": 2,
                            "validators": ["beta", "gamma"]}]}},
        {"publicKey": "gamma",
         "quorumSet": {"threshold": 3,
                       "validators": ["alpha", "beta", "gamma"]}}
    ])";
    auto parsed = parse_fbas(text);
    CHECK(parsed.warnings.empty());

    auto const& fbas = parsed.fbas;
    REQUIRE(fbas.size() == 3);
    CHECK(fbas.node(0).alias == "beta");
    CHECK(fbas.node(1).alias == "alpha");
    CHECK(fbas.node(2).alias == "gamma");

    // beta trusts gamma(2) and alpha(1), sorted ascending by index.
    CHECK(fbas.node(0).quorumSet.validators ==
          std::vector<NodeIndex>{1, 2});
    CHECK(fbas.node(1).quorumSet.validators.empty());
    REQUIRE(fbas.node(1).quorumSet.innerSets.size() == 1);
    CHECK(fbas.node(1).quorumSet.innerSets[0].validators ==
          std::vector<NodeIndex>{0, 2});
    CHECK(fbas.node(2).quorumSet.threshold == 3);
}

TEST_CASE("parse errors")
{
    CHECK_THROWS_AS(parse_fbas("not json"), ParseError);
    CHECK_THROWS_AS(parse_fbas("{}"), ParseError);
    CHECK_THROWS_AS(parse_fbas("[1]"), ParseError);
    CHECK_THROWS_AS(parse_fbas(R"([{"quorumSet": {"threshold": 1}}])"),
                    ParseError);
    CHECK_THROWS_AS(parse_fbas(R"([{"publicKey": "a"}])"), ParseError);

    // Duplicate publicKey.
    CHECK_THROWS_AS(
        parse_fbas(R"([
            {"publicKey": "a",
             "quorumSet": {"threshold": 1, "validators": ["a"]}},
            {"publicKey": "a",
             "quorumSet": {"threshold": 1, "validators": ["a"]}}
        ])"),
        ParseError);

    // Duplicate validator within one level.
    CHECK_THROWS_AS(
        parse_fbas(R"([
            {"publicKey": "a",
             "quorumSet": {"threshold": 1, "validators": ["a", "a"]}}
        ])"),
        ParseError);

    // Thresholds violating 1 <= t <= members.
    CHECK_THROWS_AS(
        parse_fbas(R"([
            {"publicKey": "a",
             "quorumSet": {"threshold": 0, "validators": ["a"]}}
        ])"),
        ParseError);
    CHECK_THROWS_AS(
        parse_fbas(R"([
            {"publicKey": "a",
             "quorumSet": {"threshold": 2, "validators": ["a"]}}
        ])"),
        ParseError);
    CHECK_THROWS_AS(
        parse_fbas(R"([
            {"publicKey": "a",
             "quorumSet": {"threshold": -1, "validators": ["a"]}}
        ])"),
        ParseError);
}

TEST_CASE("unresolvable validators are dropped with a warning")
{
    auto parsed = parse_fbas(R"([
        {"publicKey": "a",
         "quorumSet": {"threshold": 1, "validators": ["a", "ghost"]}}
    ])");
    REQUIRE(parsed.warnings.size() == 1);
    CHECK(parsed.warnings[0].find("ghost") != std::string::npos);
    CHECK(parsed.fbas.node(0).quorumSet.validators ==
          std::vector<NodeIndex>{0});

    // After the drop the threshold no longer fits: that is an error, not a
    // silent acceptance.
    CHECK_THROWS_AS(
        parse_fbas(R"([
            {"publicKey": "a",
             "quorumSet": {"threshold": 2, "validators": ["a", "ghost"]}}
        ])"),
        ParseError);
}

TEST_CASE("empty document")
{
    auto parsed = parse_fbas(std::string("[]"));
    CHECK(parsed.fbas.size() == 0);
    CHECK(find_minimal_quorums(parsed.fbas).empty());
    CHECK(serialize_fbas(parsed.fbas) == "[]");
}

TEST_CASE("istream parsing")
{
    std::istringstream in(serialize_fbas(hubAndWingsFbas()));
    auto parsed = parse_fbas(in);
    CHECK(sameModel(parsed.fbas, hubAndWingsFbas()));
}

TEST_CASE("round-trip identity on the model")
{
    auto roundTrips = [](Fbas const& fbas) {
        auto text = serialize_fbas(fbas);
        auto back = parse_fbas(text);
        CHECK(back.warnings.empty());
        CHECK(sameModel(fbas, back.fbas));
        // Serialization is byte-deterministic.
        CHECK(serialize_fbas(back.fbas) == text);
    };

    roundTrips(hubAndWingsFbas());
    roundTrips(splitFbas());
    roundTrips(withLeafNodes(hubAndWingsFbas(), 3));
    for (std::uint32_t n : {1u, 2u, 5u, 13u, 40u})
    {
        roundTrips(gen_symmetric(n));
    }
    for (std::uint32_t m : {1u, 3u, 10u})
    {
        roundTrips(gen_organizational(m));
    }

    std::mt19937_64 rng(43);
    for (int round = 0; round < 80; ++round)
    {
        roundTrips(randomFbas(rng, 1 + static_cast<std::uint32_t>(rng() % 12)));
    }
}

TEST_CASE("round trip preserves minimal quorums")
{
    auto fbas = hubAndWingsFbas();
    auto before = find_minimal_quorums(fbas);
    auto after = find_minimal_quorums(parse_fbas(serialize_fbas(fbas)).fbas);
    CHECK(before == after);
}

TEST_CASE("canonical serialization golden document")
{
    auto expected = R"([
  {
    "publicKey": "n0",
    "quorumSet": {
      "innerQuorumSets": [],
      "threshold": 3,
      "validators": [
        "n0",
        "n1",
        "n2"
      ]
    }
  },
  {
    "publicKey": "n1",
    "quorumSet": {
      "innerQuorumSets": [],
      "threshold": 3,
      "validators": [
        "n0",
        "n1",
        "n2"
      ]
    }
  },
  {
    "publicKey": "n2",
    "quorumSet": {
      "innerQuorumSets": [],
      "threshold": 3,
      "validators": [
        "n0",
        "n1",
        "n2"
      ]
    }
  }
])";
    CHECK(serialize_fbas(gen_symmetric(3)) == expected);
}

TEST_CASE("exact power report as CSV")
{
    auto fbas = hubAndWingsFbas();
    auto report = exact_power_indices(CooperativeGame::over_all_nodes(fbas));
    auto csv = write_report(fbas, report, ReportFormat::csv);
    CHECK(csv ==
          "node_index,alias,value_numerator,value_denominator,method,m,seed\n"
          "0,n0,7,15,exact,,\n"
          "1,n1,2,15,exact,,\n"
          "2,n2,2,15,exact,,\n"
          "3,n3,2,15,exact,,\n"
          "4,n4,2,15,exact,,\n");
}

TEST_CASE("approximate power report as CSV")
{
    auto fbas = splitFbas();
    auto game = CooperativeGame::over_all_nodes(fbas);
    auto report = approx_power_indices(game, ApproxOptions{8, 3, 1});
    auto csv = write_report(fbas, report, ReportFormat::csv);

    auto header = csv.substr(0, csv.find('\n'));
    CHECK(header == "node_index,alias,value_float,method,m,seed");
    CHECK(csv.find(",approximate,8,3\n") != std::string::npos);
    // Identical inputs give identical bytes.
    auto again = approx_power_indices(game, ApproxOptions{8, 3, 1});
    CHECK(write_report(fbas, again, ReportFormat::csv) == csv);
}

TEST_CASE("empty report is header-only CSV")
{
    Fbas empty;
    auto report = exact_power_indices(CooperativeGame::over_all_nodes(empty));
    auto csv = write_report(empty, report, ReportFormat::csv);
    CHECK(csv == "node_index,alias,value_numerator,value_denominator,"
                 "method,m,seed\n");
}

TEST_CASE("aliases with CSV metacharacters are quoted")
{
    Fbas fbas;
    fbas.addNode("plain", QuorumSet{1, {0}, {}});
    fbas.addNode("wei\"rd, name", QuorumSet{1, {0}, {}});
    fbas.validate();
    auto report = exact_power_indices(CooperativeGame::over_all_nodes(fbas));
    auto csv = write_report(fbas, report, ReportFormat::csv);
    CHECK(csv.find("\"wei\"\"rd, name\"") != std::string::npos);
}

TEST_CASE("power report as JSON")
{
    auto fbas = hubAndWingsFbas();
    auto report = exact_power_indices(CooperativeGame::over_all_nodes(fbas));
    auto json = write_report(fbas, report, ReportFormat::json);
    CHECK(json.find("\"method\": \"exact\"") != std::string::npos);
    CHECK(json.find("\"value_numerator\": \"7\"") != std::string::npos);
    CHECK(json.find("\"value_denominator\": \"15\"") != std::string::npos);

    auto game = CooperativeGame::over_all_nodes(fbas);
    auto sampled = approx_power_indices(game, ApproxOptions{100, 11, 1});
    auto sampledJson = write_report(fbas, sampled, ReportFormat::json);
    CHECK(sampledJson.find("\"m\": 100") != std::string::npos);
    CHECK(sampledJson.find("\"seed\": 11") != std::string::npos);
    CHECK(sampledJson.find("\"value_float\":") != std::string::npos);
}

TEST_CASE("bench report formats")
{
    BenchReport report;
    report.rows.push_back(
        BenchRow{TopologyKind::symmetric, 6, PowerMethod::exact,
                 std::nullopt, 10, false, 0.25});
    report.rows.push_back(
        BenchRow{TopologyKind::organizational, 27, PowerMethod::exact,
                 std::nullopt, 10, true, 0.0});
    report.rows.push_back(
        BenchRow{TopologyKind::symmetric, 6, PowerMethod::approximate,
                 std::uint64_t{1000}, 10, false, 0.125});

    auto csv = write_report(report, ReportFormat::csv);
    CHECK(csv == "kind,n,method,m,reps,status,median_seconds\n"
                 "symmetric,6,exact,,10,ok,0.25\n"
                 "organizational,27,exact,,10,skipped,\n"
                 "symmetric,6,approximate,1000,10,ok,0.125\n");

    auto json = write_report(report, ReportFormat::json);
    CHECK(json.find("\"status\": \"skipped\"") != std::string::npos);
    CHECK(json.find("\"median_seconds\": 0.25") != std::string::npos);
}

TEST_CASE("accuracy report formats")
{
    AccuracyReport report;
    report.rows.push_back(AccuracyRow{TopologyKind::symmetric, 5, 1000, 2, 9,
                                      0.046875, {0.0625, 0.03125}});

    auto csv = write_report(report, ReportFormat::csv);
    CHECK(csv == "kind,n,m,reps,mmpe\n"
                 "symmetric,5,1000,2,0.046875\n");

    auto json = write_report(report, ReportFormat::json);
    CHECK(json.find("\"base_seed\": 9") != std::string::npos);
    CHECK(json.find("\"mpe_per_run\"") != std::string::npos);
    CHECK(json.find("0.0625") != std::string::npos);
}
