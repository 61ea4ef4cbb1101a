#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "indturan/embedder.hpp"
#include "indturan/exact_solver.hpp"
#include "indturan/graph.hpp"
#include "indturan/hypergraph.hpp"
#include "indturan/witness.hpp"

namespace indturan {

using Json = nlohmann::ordered_json;

struct RunManifest {
    std::vector<std::string> command_line;  // without --threads / --out
    std::map<std::string, std::string> parameters;
    std::uint64_t seed = 0;
    std::string tool_version;
    std::map<std::string, std::string> input_digests;  // path -> sha256
};

// Everything that may legitimately differ between replays.
struct Execution {
    std::string started;
    std::string finished;
    double elapsed_seconds = 0;
    unsigned threads = 1;
};

// A witness together with what is needed to re-check it.
struct WitnessRecord {
    std::string label;
    std::string host;                    // graph6
    std::optional<std::string> pattern;  // graph6, InducedCopy only
    std::optional<std::vector<Side>> sides;
    Witness witness;
};

struct Report {
    RunManifest manifest;
    Execution execution;
    std::vector<WitnessRecord> witnesses;
    std::map<std::string, std::int64_t> counters;
    std::map<std::string, std::string> values;  // big integers, fractions, flags
    std::map<std::string, std::string> tables;  // CSV payloads
    std::vector<std::string> log;
    Json results = Json::object();
};

Json to_json(const Witness& w);
Witness witness_from_json(const Json& j);

Json to_json(const EmbedTrace& t);
Json to_json(const ExtremalResult& r, const ConstraintSet& constraints);
Json to_json(const UniformHypergraph& h);
Json to_json(const HeavyReport& r);

// Throws ValidationFailed unless every witness graph meets the constraints
// and has max_edges edges.
ExtremalResult extremal_from_json(const Json& j);

Json to_json(const Report& r);
// Re-validates every witness record and every embedded extremal result.
Report report_from_json(const Json& j);

std::string dump_report(const Report& r);
// Dump without the execution block; equal strings mean equal replays.
std::string replay_key(const Report& r);

// "-" writes to stdout. Throws Io with the system message.
void write_report(const Report& r, const std::string& path);
Report load_report(const std::string& path);

}  // namespace indturan
