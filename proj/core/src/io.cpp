// Copyright 2026 the fbaspower authors. Licensed under the Apache License,
// Version 2.0. See the COPYING file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "fbaspower/io.hpp"
#include "fbaspower/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <istream>
#include <unordered_map>

namespace fbaspower
{

namespace
{

using Json = nlohmann::json;

QuorumSet
parseQuorumSet(Json const& j, std::string const& owner,
               std::unordered_map<std::string, NodeIndex> const& index,
               std::vector<std::string>& warnings)
{
    if (!j.is_object())
    {
        throw ParseError("quorumSet of \"" + owner + "\" is not an object");
    }

    QuorumSet qset;
    auto t = j.find("threshold");
    if (t == j.end() || !t->is_number_integer())
    {
        throw ParseError("quorum set of \"" + owner +
                         "\" lacks an integer threshold");
    }
    auto raw = t->get<long long>();
    if (raw < 0 || raw > 0xffffffffLL)
    {
        throw ParseError("threshold " + std::to_string(raw) + " of \"" +
                         owner + "\" is out of range");
    }
    qset.threshold = static_cast<std::uint32_t>(raw);

    // Absent arrays are treated as empty; crawler snapshots omit them.
    if (auto v = j.find("validators"); v != j.end())
    {
        if (!v->is_array())
        {
            throw ParseError("validators of \"" + owner +
                             "\" is not an array");
        }
        for (auto const& entry : *v)
        {
            if (!entry.is_string())
            {
                throw ParseError("validator entry of \"" + owner +
                                 "\" is not a string");
            }
            auto const& key = entry.get_ref<std::string const&>();
            auto hit = index.find(key);
            if (hit == index.end())
            {
                warnings.push_back("dropped unresolvable validator \"" + key +
                                   "\" from the quorum set of \"" + owner +
                                   "\"");
            }
            else
            {
                qset.validators.push_back(hit->second);
            }
        }
        std::sort(qset.validators.begin(), qset.validators.end());
        if (std::adjacent_find(qset.validators.begin(),
                               qset.validators.end()) !=
            qset.validators.end())
        {
            throw ParseError("duplicate validator in a quorum set of \"" +
                             owner + "\"");
        }
    }

    if (auto inner = j.find("innerQuorumSets"); inner != j.end())
    {
        if (!inner->is_array())
        {
            throw ParseError("innerQuorumSets of \"" + owner +
                             "\" is not an array");
        }
        for (auto const& entry : *inner)
        {
            qset.innerSets.push_back(
                parseQuorumSet(entry, owner, index, warnings));
        }
    }
    return qset;
}

} // namespace

ParseResult
parse_fbas(std::string const& text)
{
    Json doc;
    try
    {
        doc = Json::parse(text);
    }
    catch (Json::exception const& e)
    {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_array())
    {
        throw ParseError("top-level value must be an array of node records");
    }

    ParseResult result;
    std::unordered_map<std::string, NodeIndex> index;
    for (auto const& rec : doc)
    {
        if (!rec.is_object())
        {
            throw ParseError("node record is not an object");
        }
        auto pk = rec.find("publicKey");
        if (pk == rec.end() || !pk->is_string())
        {
            throw ParseError("node record lacks a string publicKey");
        }
        auto const& alias = pk->get_ref<std::string const&>();
        if (!index.emplace(alias, static_cast<NodeIndex>(index.size()))
                 .second)
        {
            throw ParseError("duplicate publicKey \"" + alias + "\"");
        }
    }
    for (auto const& rec : doc)
    {
        auto const& alias = rec.at("publicKey").get_ref<std::string const&>();
        auto qs = rec.find("quorumSet");
        if (qs == rec.end())
        {
            throw ParseError("node \"" + alias + "\" lacks a quorumSet");
        }
        result.fbas.addNode(alias,
                            parseQuorumSet(*qs, alias, index,
                                           result.warnings));
    }
    result.fbas.validate();
    return result;
}

ParseResult
parse_fbas(std::istream& in)
{
    std::string text(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>{});
    return parse_fbas(text);
}

namespace
{

Json
quorumSetToJson(Fbas const& fbas, QuorumSet const& qset)
{
    Json j = Json::object();
    j["threshold"] = qset.threshold;
    auto validators = Json::array();
    for (auto v : qset.validators)
    {
        validators.push_back(fbas.node(v).alias);
    }
    j["validators"] = std::move(validators);
    auto inner = Json::array();
    for (auto const& i : qset.innerSets)
    {
        inner.push_back(quorumSetToJson(fbas, i));
    }
    j["innerQuorumSets"] = std::move(inner);
    return j;
}

std::string
csvField(std::string const& s)
{
    if (s.find_first_of(",\"\r\n") == std::string::npos)
    {
        return s;
    }
    std::string out = "\"";
    for (char c : s)
    {
        if (c == '"')
        {
            out += '"';
        }
        out += c;
    }
    out += '"';
    return out;
}

std::string
formatDouble(double v, int significands)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", significands, v);
    return buf;
}

} // namespace

std::string
serialize_fbas(Fbas const& fbas)
{
    Json doc = Json::array();
    for (NodeIndex i = 0; i < fbas.size(); ++i)
    {
        Json rec = Json::object();
        rec["publicKey"] = fbas.node(i).alias;
        rec["quorumSet"] = quorumSetToJson(fbas, fbas.node(i).quorumSet);
        doc.push_back(std::move(rec));
    }
    return doc.dump(2);
}

char const*
to_string(ReportFormat format)
{
    return format == ReportFormat::json ? "json" : "csv";
}

std::string
write_report(Fbas const& fbas, PowerIndexReport const& report,
             ReportFormat format)
{
    bool exact = report.method == PowerMethod::exact;
    auto mField =
        report.samples ? std::to_string(*report.samples) : std::string();
    auto seedField =
        report.seed ? std::to_string(*report.seed) : std::string();

    if (format == ReportFormat::csv)
    {
        std::string out =
            exact ? "node_index,alias,value_numerator,value_denominator,"
                    "method,m,seed\n"
                  : "node_index,alias,value_float,method,m,seed\n";
        for (NodeIndex i = 0; i < fbas.size(); ++i)
        {
            out += std::to_string(i);
            out += ',';
            out += csvField(fbas.node(i).alias);
            out += ',';
            if (exact)
            {
                out += numerator_string(report.values[i]);
                out += ',';
                out += denominator_string(report.values[i]);
            }
            else
            {
                out += formatDouble(report.valueAsDouble(i), 17);
            }
            out += ',';
            out += to_string(report.method);
            out += ',';
            out += mField;
            out += ',';
            out += seedField;
            out += '\n';
        }
        return out;
    }

    Json doc = Json::object();
    doc["method"] = to_string(report.method);
    if (report.samples)
    {
        doc["m"] = *report.samples;
    }
    if (report.seed)
    {
        doc["seed"] = *report.seed;
    }
    auto players = Json::array();
    for (auto i : report.playerSet.members())
    {
        players.push_back(i);
    }
    doc["players"] = std::move(players);
    auto values = Json::array();
    for (NodeIndex i = 0; i < fbas.size(); ++i)
    {
        Json row = Json::object();
        row["node_index"] = i;
        row["alias"] = fbas.node(i).alias;
        if (exact)
        {
            row["value_numerator"] = numerator_string(report.values[i]);
            row["value_denominator"] = denominator_string(report.values[i]);
        }
        else
        {
            row["value_float"] = report.valueAsDouble(i);
        }
        values.push_back(std::move(row));
    }
    doc["values"] = std::move(values);
    return doc.dump(2);
}

std::string
write_report(BenchReport const& report, ReportFormat format)
{
    if (format == ReportFormat::csv)
    {
        std::string out = "kind,n,method,m,reps,status,median_seconds\n";
        for (auto const& row : report.rows)
        {
            out += to_string(row.kind);
            out += ',';
            out += std::to_string(row.nodes);
            out += ',';
            out += to_string(row.method);
            out += ',';
            if (row.samples)
            {
                out += std::to_string(*row.samples);
            }
            out += ',';
            out += std::to_string(row.reps);
            out += ',';
            out += row.skipped ? "skipped" : "ok";
            out += ',';
            if (!row.skipped)
            {
                out += formatDouble(row.medianSeconds, 9);
            }
            out += '\n';
        }
        return out;
    }

    Json rows = Json::array();
    for (auto const& row : report.rows)
    {
        Json r = Json::object();
        r["kind"] = to_string(row.kind);
        r["n"] = row.nodes;
        r["method"] = to_string(row.method);
        if (row.samples)
        {
            r["m"] = *row.samples;
        }
        r["reps"] = row.reps;
        r["status"] = row.skipped ? "skipped" : "ok";
        if (!row.skipped)
        {
            r["median_seconds"] = row.medianSeconds;
        }
        rows.push_back(std::move(r));
    }
    Json doc = Json::object();
    doc["rows"] = std::move(rows);
    return doc.dump(2);
}

std::string
write_report(AccuracyReport const& report, ReportFormat format)
{
    if (format == ReportFormat::csv)
    {
        std::string out = "kind,n,m,reps,mmpe\n";
        for (auto const& row : report.rows)
        {
            out += to_string(row.kind);
            out += ',';
            out += std::to_string(row.nodes);
            out += ',';
            out += std::to_string(row.samples);
            out += ',';
            out += std::to_string(row.reps);
            out += ',';
            out += formatDouble(row.mmpe, 17);
            out += '\n';
        }
        return out;
    }

    Json rows = Json::array();
    for (auto const& row : report.rows)
    {
        Json r = Json::object();
        r["kind"] = to_string(row.kind);
        r["n"] = row.nodes;
        r["m"] = row.samples;
        r["reps"] = row.reps;
        r["base_seed"] = row.baseSeed;
        r["mmpe"] = row.mmpe;
        r["mpe_per_run"] = row.mpePerRun;
        rows.push_back(std::move(r));
    }
    Json doc = Json::object();
    doc["rows"] = std::move(rows);
    return doc.dump(2);
}

} // namespace fbaspower
