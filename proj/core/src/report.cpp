#include "indturan/report.hpp"

#include <cerrno>
#include <cstring>
#include <fstream>
#include <iostream>
#include <sstream>

#include "indturan/error.hpp"
#include "indturan/graph6.hpp"

namespace indturan {

namespace {

std::string side_string(const std::vector<Side>& sides) {
    std::string out;
    for (Side s : sides) out.push_back(s == Side::A ? 'A' : 'B');
    return out;
}

std::vector<Side> sides_from_string(const std::string& text) {
    std::vector<Side> out;
    for (char c : text) {
        if (c != 'A' && c != 'B') throw Error(ErrorCode::ValidationFailed, "side string must use A and B");
        out.push_back(c == 'A' ? Side::A : Side::B);
    }
    return out;
}

template <class T>
T field(const Json& j, const char* key) {
    if (!j.contains(key)) throw Error(ErrorCode::ValidationFailed, std::string("missing field ") + key);
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ValidationFailed, std::string("bad field ") + key + ": " + e.what());
    }
}

Json manifest_json(const RunManifest& m) {
    Json j;
    j["command_line"] = m.command_line;
    j["parameters"] = m.parameters;
    j["seed"] = m.seed;
    j["tool_version"] = m.tool_version;
    j["input_digests"] = m.input_digests;
    return j;
}

Json record_json(const WitnessRecord& r) {
    Json j;
    j["label"] = r.label;
    j["host"] = r.host;
    if (r.pattern) j["pattern"] = *r.pattern;
    if (r.sides) j["sides"] = side_string(*r.sides);
    j["witness"] = to_json(r.witness);
    return j;
}

WitnessRecord record_from_json(const Json& j) {
    WitnessRecord r;
    r.label = field<std::string>(j, "label");
    r.host = field<std::string>(j, "host");
    if (j.contains("pattern")) r.pattern = field<std::string>(j, "pattern");
    if (j.contains("sides")) r.sides = sides_from_string(field<std::string>(j, "sides"));
    r.witness = witness_from_json(field<Json>(j, "witness"));
    const Graph host = decode_graph6(r.host);
    std::optional<Graph> pattern;
    if (r.pattern) pattern = decode_graph6(*r.pattern);
    const Validation v = validate(host, r.witness, pattern ? &*pattern : nullptr, r.sides ? &*r.sides : nullptr);
    if (!v) throw Error(ErrorCode::ValidationFailed, "witness '" + r.label + "': " + v.message);
    return r;
}

}  // namespace

Json to_json(const Witness& w) {
    Json j;
    j["kind"] = std::string(kind_name(w));
    std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, NotFound>) {
                j["stage"] = x.stage;
                j["reason"] = x.reason;
            } else if constexpr (std::is_same_v<T, InducedCopy>) {
                j["map"] = x.map;
            } else if constexpr (std::is_same_v<T, Biclique>) {
                j["left"] = x.left;
                j["right"] = x.right;
            } else if constexpr (std::is_same_v<T, IndependentSet>) {
                j["vertices"] = x.vertices;
            } else if constexpr (std::is_same_v<T, RichSet>) {
                j["vertices"] = x.vertices;
                j["k"] = x.k;
                j["theta"] = x.theta;
                Json traces = Json::array();
                for (const auto& t : x.traces) traces.push_back(Json{{"trace", t.trace}, {"count", t.count}});
                j["traces"] = traces;
            } else {
                j["cycle"] = x.cycle;
            }
        },
        w);
    return j;
}

Witness witness_from_json(const Json& j) {
    const auto kind = field<std::string>(j, "kind");
    if (kind == "NotFound") return NotFound{field<std::string>(j, "stage"), field<std::string>(j, "reason")};
    if (kind == "InducedCopy") return InducedCopy{field<std::vector<Vertex>>(j, "map")};
    if (kind == "Biclique") return Biclique{field<std::vector<Vertex>>(j, "left"), field<std::vector<Vertex>>(j, "right")};
    if (kind == "IndependentSet") return IndependentSet{field<std::vector<Vertex>>(j, "vertices")};
    if (kind == "InducedCycle") return InducedCycle{field<std::vector<Vertex>>(j, "cycle")};
    if (kind == "RichSet") {
        RichSet r;
        r.vertices = field<std::vector<Vertex>>(j, "vertices");
        r.k = field<std::size_t>(j, "k");
        r.theta = field<std::size_t>(j, "theta");
        for (const Json& t : field<Json>(j, "traces"))
            r.traces.push_back({field<std::vector<Vertex>>(t, "trace"), field<std::size_t>(t, "count")});
        return r;
    }
    throw Error(ErrorCode::ValidationFailed, "unknown witness kind " + kind);
}

Json to_json(const EmbedTrace& t) {
    Json j;
    j["drc_set"] = t.drc_set;
    j["drc_attempts"] = t.drc_attempts;
    j["spread_uniformity"] = t.spread_uniformity;
    j["spread_edges"] = t.spread_edges;
    j["bad_edges"] = t.bad_edges;
    j["independent_set"] = t.independent_set;
    j["initial_candidates"] = t.initial_candidates;
    Json steps = Json::array();
    for (const EmbedStep& s : t.steps)
        steps.push_back(Json{{"index", s.index}, {"chosen", s.chosen}, {"strict", s.strict}, {"before", s.before},
                             {"after", s.after}});
    j["steps"] = steps;
    j["log"] = t.log;
    return j;
}

Json to_json(const ExtremalResult& r, const ConstraintSet& constraints) {
    Json j;
    j["n"] = r.n;
    j["max_edges"] = r.max_edges;
    Json c;
    Json induced = Json::array(), sub = Json::array();
    for (const Graph& h : constraints.induced_forbidden) induced.push_back(encode_graph6(h));
    for (const Graph& h : constraints.subgraph_forbidden) sub.push_back(encode_graph6(h));
    c["induced_forbidden"] = induced;
    c["subgraph_forbidden"] = sub;
    j["constraints"] = c;
    j["count_extremal"] = r.count_extremal;
    j["witness_graphs"] = r.witness_graphs;
    j["level_sizes"] = r.stats.level_sizes;
    return j;
}

ExtremalResult extremal_from_json(const Json& j) {
    ExtremalResult r;
    r.n = field<std::size_t>(j, "n");
    r.max_edges = field<long long>(j, "max_edges");
    r.count_extremal = field<std::size_t>(j, "count_extremal");
    r.witness_graphs = field<std::vector<std::string>>(j, "witness_graphs");
    r.stats.level_sizes = field<std::vector<std::size_t>>(j, "level_sizes");
    ConstraintSet c;
    const Json cj = field<Json>(j, "constraints");
    for (const auto& s : field<std::vector<std::string>>(cj, "induced_forbidden"))
        c.induced_forbidden.push_back(decode_graph6(s));
    for (const auto& s : field<std::vector<std::string>>(cj, "subgraph_forbidden"))
        c.subgraph_forbidden.push_back(decode_graph6(s));
    if (r.witness_graphs.size() != r.count_extremal)
        throw Error(ErrorCode::ValidationFailed, "count_extremal disagrees with the witness list");
    for (const auto& s : r.witness_graphs) {
        const Graph g = decode_graph6(s);
        if (g.order() != r.n || static_cast<long long>(g.edge_count()) != r.max_edges)
            throw Error(ErrorCode::ValidationFailed, "extremal witness has the wrong order or size");
        if (!c.satisfied_by(g)) throw Error(ErrorCode::ValidationFailed, "extremal witness violates a constraint");
    }
    return r;
}

Json to_json(const UniformHypergraph& h) {
    Json j;
    j["ground_size"] = h.ground_size();
    j["uniformity"] = h.uniformity();
    j["edges"] = h.edges();
    if (h.partite()) j["parts"] = h.parts();
    return j;
}

Json to_json(const HeavyReport& r) {
    Json j;
    j["edge_count"] = r.edge_count;
    Json heavy = Json::array();
    for (const HeavyWitness& w : r.heavy) heavy.push_back(Json{{"edge", w.edge}, {"core", w.core}, {"extra", w.extra}});
    j["heavy"] = heavy;
    return j;
}

Json to_json(const Report& r) {
    Json j;
    j["manifest"] = manifest_json(r.manifest);
    Json ex;
    ex["started"] = r.execution.started;
    ex["finished"] = r.execution.finished;
    ex["elapsed_seconds"] = r.execution.elapsed_seconds;
    ex["threads"] = r.execution.threads;
    j["execution"] = ex;
    Json ws = Json::array();
    for (const auto& w : r.witnesses) ws.push_back(record_json(w));
    j["witnesses"] = ws;
    j["counters"] = r.counters;
    j["values"] = r.values;
    j["tables"] = r.tables;
    j["results"] = r.results;
    j["log"] = r.log;
    return j;
}

Report report_from_json(const Json& j) {
    Report r;
    const Json m = field<Json>(j, "manifest");
    r.manifest.command_line = field<std::vector<std::string>>(m, "command_line");
    r.manifest.parameters = field<std::map<std::string, std::string>>(m, "parameters");
    r.manifest.seed = field<std::uint64_t>(m, "seed");
    r.manifest.tool_version = field<std::string>(m, "tool_version");
    r.manifest.input_digests = field<std::map<std::string, std::string>>(m, "input_digests");
    if (j.contains("execution")) {
        const Json& ex = j.at("execution");
        r.execution.started = field<std::string>(ex, "started");
        r.execution.finished = field<std::string>(ex, "finished");
        r.execution.elapsed_seconds = field<double>(ex, "elapsed_seconds");
        r.execution.threads = field<unsigned>(ex, "threads");
    }
    for (const Json& w : field<Json>(j, "witnesses")) r.witnesses.push_back(record_from_json(w));
    r.counters = field<std::map<std::string, std::int64_t>>(j, "counters");
    r.values = field<std::map<std::string, std::string>>(j, "values");
    r.tables = field<std::map<std::string, std::string>>(j, "tables");
    r.results = field<Json>(j, "results");
    r.log = field<std::vector<std::string>>(j, "log");
    if (r.results.contains("extremal")) {
        const Json& e = r.results.at("extremal");
        if (e.is_array())
            for (const Json& x : e) extremal_from_json(x);
        else
            extremal_from_json(e);
    }
    return r;
}

std::string dump_report(const Report& r) { return to_json(r).dump(2) + "\n"; }

std::string replay_key(const Report& r) {
    Json j = to_json(r);
    j.erase("execution");
    return j.dump();
}

void write_report(const Report& r, const std::string& path) {
    const std::string text = dump_report(r);
    if (path.empty() || path == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::Io, "cannot open " + path + ": " + std::strerror(errno));
    out << text;
    out.flush();
    if (!out) throw Error(ErrorCode::Io, "cannot write " + path + ": " + std::strerror(errno));
}

Report load_report(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::Io, "cannot open " + path + ": " + std::strerror(errno));
    std::stringstream buf;
    buf << in.rdbuf();
    Json j;
    try {
        j = Json::parse(buf.str());
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ValidationFailed, std::string("malformed report: ") + e.what());
    }
    return report_from_json(j);
}

}  // namespace indturan
