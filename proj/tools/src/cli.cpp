#include "indturan_cli/cli.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "indturan/constructions.hpp"
#include "indturan/cycles.hpp"
#include "indturan/embedder.hpp"
#include "indturan/error.hpp"
#include "indturan/exact_solver.hpp"
#include "indturan/graph6.hpp"
#include "indturan/hypergraph.hpp"
#include "indturan/report.hpp"
#include "indturan/search.hpp"

#ifndef INDTURAN_VERSION
#define INDTURAN_VERSION "0.0.0"
#endif

namespace indturan::cli {

namespace {

using Overrides = std::map<std::string, std::string>;

struct Global {
    std::uint64_t seed = 0;
    std::string out = "-";
    unsigned threads = 1;
    std::vector<std::string> overrides;
};

std::string utc_now() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

Overrides parse_overrides(const std::vector<std::string>& raw, std::initializer_list<const char*> allowed) {
    Overrides out;
    for (const std::string& kv : raw) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0) throw Error(ErrorCode::Usage, "override must be key=value: " + kv);
        const std::string key = kv.substr(0, eq);
        bool ok = false;
        for (const char* a : allowed) ok = ok || key == a;
        if (!ok) throw Error(ErrorCode::Usage, "unknown override key '" + key + "'");
        out[key] = kv.substr(eq + 1);
    }
    return out;
}

std::size_t to_size(const std::string& text) {
    try {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
        throw Error(ErrorCode::Usage, "expected a non-negative integer: '" + text + "'");
    }
}

BigInt to_big_int(const std::string& text) {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
        throw Error(ErrorCode::Usage, "expected a non-negative integer: '" + text + "'");
    return BigInt(text);
}

// "4..6", "1,2,5" or "" (empty).
std::vector<std::size_t> parse_list(const std::string& text) {
    std::vector<std::size_t> out;
    if (text.empty()) return out;
    if (const auto dots = text.find(".."); dots != std::string::npos) {
        const std::size_t lo = to_size(text.substr(0, dots));
        const std::size_t hi = to_size(text.substr(dots + 2));
        for (std::size_t i = lo; i <= hi; ++i) out.push_back(i);
        return out;
    }
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) out.push_back(to_size(item));
    return out;
}

std::vector<Side> parse_sides(const std::string& text) {
    std::vector<Side> out;
    for (char c : text) {
        if (c != 'A' && c != 'B') throw Error(ErrorCode::Usage, "sides must be a string over A and B");
        out.push_back(c == 'A' ? Side::A : Side::B);
    }
    return out;
}

std::string side_string(const std::vector<Side>& sides) {
    std::string out;
    for (Side s : sides) out.push_back(s == Side::A ? 'A' : 'B');
    return out;
}

bool not_found_class(ErrorCode c) {
    switch (c) {
        case ErrorCode::TrialsExhausted:
        case ErrorCode::RetriesExhausted:
        case ErrorCode::NoIndependentSets:
        case ErrorCode::AllEdgesBad:
        case ErrorCode::NoViableCandidate:
        case ErrorCode::StuckBelowUniformity:
        case ErrorCode::InequalityFails:
        case ErrorCode::TooSparse:
        case ErrorCode::ValidationFailed:
            return true;
        default:
            return false;
    }
}

class Context {
public:
    Context(const Global& g, std::string command) : global(g), command_(std::move(command)) {
        report.manifest.seed = g.seed;
        report.manifest.tool_version = INDTURAN_VERSION;
        report.execution.threads = g.threads;
        host_ = encode_graph6(Graph(0));
    }

    Graph load_graph(const std::string& path) {
        report.manifest.input_digests[path] = sha256_file(path);
        return read_graph6_file(path);
    }

    Json load_json(const std::string& path) {
        report.manifest.input_digests[path] = sha256_file(path);
        std::ifstream in(path);
        if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
        try {
            return Json::parse(in);
        } catch (const nlohmann::json::exception& e) {
            throw Error(ErrorCode::Usage, "malformed JSON in " + path + ": " + e.what());
        }
    }

    void set_host(const Graph& g) { host_ = encode_graph6(g); }

    int add_witness(const std::string& label, const Graph& host, Witness w, const Graph* pattern = nullptr,
                    const std::vector<Side>* sides = nullptr) {
        const Validation v = validate(host, w, pattern, sides);
        if (!v) throw Error(ErrorCode::ValidationFailed, label + " witness failed validation: " + v.message);
        WitnessRecord r;
        r.label = label;
        r.host = encode_graph6(host);
        if (pattern && std::holds_alternative<InducedCopy>(w)) r.pattern = encode_graph6(*pattern);
        if (sides) r.sides = *sides;
        const bool ok = found(w);
        r.witness = std::move(w);
        report.witnesses.push_back(std::move(r));
        return ok ? 0 : 1;
    }

    void record_failure(const Error& e) {
        WitnessRecord r;
        r.label = command_;
        r.host = host_;
        r.witness = NotFound{command_, e.what()};
        report.witnesses.push_back(std::move(r));
        report.values["error"] = std::string(to_string(e.code()));
    }

    const Global& global;
    Report report;

private:
    std::string command_;
    std::string host_;
};

PatternSpec load_pattern(Context& ctx, const std::string& path, const std::string& side_a) {
    Graph h = ctx.load_graph(path);
    if (side_a.empty()) return PatternSpec::from_graph(std::move(h));
    const auto a = parse_list(side_a);
    return PatternSpec::with_side_a(std::move(h), a);
}

Bipartition bipartition_for(const Graph& g, const std::string& sides) {
    if (!sides.empty() && sides != "auto") {
        auto s = parse_sides(sides);
        if (s.size() != g.order()) throw Error(ErrorCode::Usage, "sides string length differs from the graph order");
        return Bipartition(g, std::move(s));
    }
    if (auto c = two_colouring(g)) return Bipartition(g, std::move(*c));
    return Bipartition(g, local_max_cut(g));
}

// ---- construct ----

struct ConstructOpts {
    std::string family;
    std::string spec;
    std::string graph;
    std::string p = "1/2";
    std::string g6;
    unsigned q = 2;
    std::size_t t = 2, n = 1, s = 2, trials = 10000, a = 1, k = 1, theta = 1;
};

int run_construct(const ConstructOpts& o, Context& ctx) {
    auto& rep = ctx.report;
    const auto ov = parse_overrides(ctx.global.overrides, {"min_edges"});
    Graph g;
    if (o.family == "named") {
        g = named_graph(o.spec);
    } else if (o.family == "pp") {
        const Bipartition b = pp_incidence(o.q);
        g = b.graph();
        rep.values["sides"] = side_string(b.sides());
    } else if (o.family == "blowup") {
        auto [bg, map] = blowup(ctx.load_graph(o.graph), o.t);
        g = std::move(bg);
        rep.results["class_of"] = map.class_of;
    } else if (o.family == "random") {
        g = random_graph(o.n, parse_rational(o.p), ctx.global.seed);
    } else if (o.family == "dense") {
        std::optional<std::size_t> min_edges;
        if (ov.count("min_edges")) min_edges = to_size(ov.at("min_edges"));
        DenseSample d = random_kss_free_dense(o.t, o.s, ctx.global.seed, o.trials, min_edges);
        g = std::move(d.graph);
        rep.counters["trials"] = static_cast<std::int64_t>(d.trials);
        rep.counters["min_edges"] = static_cast<std::int64_t>(d.min_edges);
    } else if (o.family == "disjoint") {
        g = disjoint_copies(ctx.load_graph(o.graph), o.n);
    } else if (o.family == "gadget") {
        TraceGadget tg = trace_gadget(o.a, o.k, o.theta);
        g = std::move(tg.graph);
        rep.results["s"] = tg.s;
    } else {
        throw Error(ErrorCode::Usage, "unknown family '" + o.family + "'");
    }
    rep.values["graph6"] = encode_graph6(g);
    rep.counters["order"] = static_cast<std::int64_t>(g.order());
    rep.counters["edges"] = static_cast<std::int64_t>(g.edge_count());
    if (!o.g6.empty()) write_graph6_file(g, o.g6);
    return 0;
}

// ---- solve / ratio ----

struct SolveOpts {
    std::size_t n = 0;
    std::vector<std::string> induced;
    std::vector<std::string> subgraph;
    std::size_t kss = 0;
};

int run_solve(const SolveOpts& o, Context& ctx) {
    parse_overrides(ctx.global.overrides, {});
    ConstraintSet c;
    for (const auto& f : o.induced) c.induced_forbidden.push_back(ctx.load_graph(f));
    for (const auto& f : o.subgraph) c.subgraph_forbidden.push_back(ctx.load_graph(f));
    if (o.kss > 0) c.subgraph_forbidden.push_back(named_graph("complete_bipartite(" + std::to_string(o.kss) + "," +
                                                              std::to_string(o.kss) + ")"));
    const ExtremalResult r = extremal_search(o.n, c, ctx.global.threads);
    ctx.report.counters["max_edges"] = r.max_edges;
    ctx.report.counters["count_extremal"] = static_cast<std::int64_t>(r.count_extremal);
    ctx.report.results["extremal"] = to_json(r, c);
    return r.max_edges >= 0 ? 0 : 1;
}

struct RatioOpts {
    std::string pattern;
    std::string s_range = "2";
    std::string n_range;
    std::string csv;
};

int run_ratio(const RatioOpts& o, Context& ctx) {
    parse_overrides(ctx.global.overrides, {});
    const Graph h = ctx.load_graph(o.pattern);
    const auto rows = ratio_table(h, parse_list(o.s_range), parse_list(o.n_range), ctx.global.threads);
    const std::string csv = ratio_table_csv(rows);
    ctx.report.tables["ratio"] = csv;
    ctx.report.counters["rows"] = static_cast<std::int64_t>(rows.size());
    if (!o.csv.empty()) {
        std::ofstream out(o.csv, std::ios::binary | std::ios::trunc);
        if (!out || !(out << csv)) throw Error(ErrorCode::Io, "cannot write " + o.csv);
    }
    return 0;
}

// ---- embed / pipeline ----

struct EmbedOpts {
    std::string graph;
    std::string pattern;
    std::string side_a;
    std::string mode = "greedy";
    std::string image;
    std::size_t s = 2;
    bool relaxed = false;
    bool assume_free = false;
};

int run_embed(const EmbedOpts& o, Context& ctx) {
    const auto ov = parse_overrides(ctx.global.overrides, {"theta"});
    const Graph g = ctx.load_graph(o.graph);
    ctx.set_host(g);
    if (o.mode == "tree") {
        const Graph tree = ctx.load_graph(o.pattern);
        return ctx.add_witness("tree", g, embed_tree_c4free(g, tree, o.assume_free), &tree);
    }
    const PatternSpec h = load_pattern(ctx, o.pattern, o.side_a);
    if (o.mode == "eh") {
        ctx.report.counters["eh_s"] = static_cast<std::int64_t>(eh_biclique_size(g.order(), h.h()));
        return ctx.add_witness("eh", g, eh_witness(g, h, o.assume_free), &h.pattern);
    }
    if (o.mode != "greedy") throw Error(ErrorCode::Usage, "mode must be greedy, tree or eh");
    if (o.image.empty()) throw Error(ErrorCode::Usage, "--image is required in greedy mode");
    const auto image = parse_list(o.image);
    GreedyOptions opts;
    opts.relaxed = o.relaxed;
    if (ov.count("theta")) opts.theta = to_size(ov.at("theta"));
    EmbedTrace trace;
    Witness w = greedy_induced_embed(g, image, h, o.s, opts, &trace);
    ctx.report.results["trace"] = to_json(trace);
    return ctx.add_witness("greedy", g, std::move(w), &h.pattern);
}

struct PipelineOpts {
    std::string graph;
    std::string pattern;
    std::string side_a;
    std::string mode = "I";
    std::size_t s = 2;
};

int run_pipeline(const PipelineOpts& o, Context& ctx) {
    const auto ov =
        parse_overrides(ctx.global.overrides, {"t", "m", "ell", "theta", "independent_cap", "clean_retries"});
    const Graph g = ctx.load_graph(o.graph);
    ctx.set_host(g);
    const PatternSpec h = load_pattern(ctx, o.pattern, o.side_a);
    if (o.mode != "I" && o.mode != "II") throw Error(ErrorCode::Usage, "mode must be I or II");
    std::optional<EmbedParams> params;
    if (!ov.empty()) {
        EmbedParams p = EmbedParams::defaults(h, o.s);
        p.overrides = true;
        if (ov.count("t")) p.t = to_size(ov.at("t"));
        if (ov.count("m")) p.m = to_big_int(ov.at("m"));
        if (ov.count("ell")) p.ell = to_big_int(ov.at("ell"));
        if (ov.count("theta")) p.theta = to_big_int(ov.at("theta"));
        if (ov.count("independent_cap")) p.independent_cap = to_size(ov.at("independent_cap"));
        if (ov.count("clean_retries")) p.clean_retries = to_size(ov.at("clean_retries"));
        params = p;
    }
    PipelineResult r =
        bounded_degree_pipeline(g, h, o.s, o.mode == "I" ? PipelineMode::I : PipelineMode::II, ctx.global.seed, params);
    ctx.report.results["trace"] = to_json(r.trace);
    if (const auto* nf = std::get_if<NotFound>(&r.witness)) ctx.report.values["stage"] = nf->stage;
    return ctx.add_witness("pipeline", g, std::move(r.witness), &h.pattern);
}

// ---- cycles ----

struct CyclesOpts {
    std::string action;
    std::string graph;
    std::string sides = "auto";
    std::size_t k = 2;
    std::size_t s = 2;
    std::size_t u = 0;
    std::size_t v = 1;
};

CycleParams cycle_params(const Overrides& ov, std::size_t k, std::size_t s) {
    CycleParams p;
    p.k = k;
    p.s = s;
    if (ov.count("alpha")) p.alpha = parse_rational(ov.at("alpha"));
    if (ov.count("K")) p.K = parse_rational(ov.at("K"));
    if (ov.count("C")) p.C = parse_rational(ov.at("C"));
    if (ov.count("selection_size")) p.selection_size = to_size(ov.at("selection_size"));
    if (ov.count("search_budget")) p.search_budget = to_size(ov.at("search_budget"));
    if (ov.count("pair_budget")) p.pair_budget = to_size(ov.at("pair_budget"));
    if (ov.count("skip_checks")) p.overrides = ov.at("skip_checks") != "0";
    return p;
}

int run_cycles(const CyclesOpts& o, Context& ctx) {
    const auto ov = parse_overrides(ctx.global.overrides, {"alpha", "K", "C", "selection_size", "search_budget",
                                                           "pair_budget", "skip_checks", "cost_limit"});
    const Graph g = ctx.load_graph(o.graph);
    ctx.set_host(g);
    auto& rep = ctx.report;
    const CycleParams p = cycle_params(ov, o.k, o.s);
    const std::uint64_t cost_limit = ov.count("cost_limit") ? to_size(ov.at("cost_limit")) : 2'000'000'000;

    if (o.action == "count") {
        const Count hom = hom_cycle_count(g, o.k);
        rep.values["hom"] = to_string(hom);
        rep.values["sidorenko"] = sidorenko_holds(g, o.k, hom) ? "true" : "false";
        try {
            const CycleSplit split = nondegenerate_cycle_count(g, o.k, cost_limit);
            rep.values["nondegenerate"] = to_string(split.nondegenerate);
            rep.values["degenerate"] = to_string(split.degenerate);
            rep.values["janzer"] = janzer_bound_holds(g, o.k, split.degenerate, hom) ? "true" : "false";
        } catch (const Error& e) {
            if (e.code() != ErrorCode::TooLarge) throw;
            rep.log.push_back(std::string("degenerate split skipped: ") + e.what());
        }
        return 0;
    }
    if (o.action == "almost-regular") {
        const AlmostRegularResult r = almost_regular_subgraph(g, p);
        rep.results["vertices"] = r.vertices;
        rep.values["precondition_held"] = r.precondition_held ? "true" : "false";
        rep.values["almost_regular"] = r.almost_regular ? "true" : "false";
        rep.values["dense"] = r.dense ? "true" : "false";
        rep.values["K"] = to_string(r.K);
        return 0;
    }
    const Bipartition b = bipartition_for(g, o.sides);
    rep.values["sides"] = side_string(b.sides());
    if (o.action == "stats") {
        const PathStats st = alternating_path_stats(b, o.u, o.v, o.k, false, p.pair_budget);
        rep.counters["P"] = static_cast<std::int64_t>(st.P);
        rep.counters["A"] = static_cast<std::int64_t>(st.A);
        rep.counters["B"] = static_cast<std::int64_t>(st.B);
        const PathCount pc = induced_path_fraction(b, o.k, cost_limit);
        rep.counters["induced_paths"] = static_cast<std::int64_t>(pc.induced);
        rep.counters["alternating_paths"] = static_cast<std::int64_t>(pc.total);
        return 0;
    }
    if (o.action == "find-c2k") {
        Witness w = find_induced_alternating_cycle(b, o.k, o.s, p, ctx.global.seed, &rep.log);
        return ctx.add_witness("c2k", g, std::move(w), nullptr, &b.sides());
    }
    if (o.action == "find-cube") {
        const Graph cube = named_graph("hypercube(3)");
        Witness w = find_induced_cube(g, o.s, p, ctx.global.seed, &rep.log);
        return ctx.add_witness("cube", g, std::move(w), &cube);
    }
    throw Error(ErrorCode::Usage, "action must be count, stats, almost-regular, find-c2k or find-cube");
}

// ---- verify ----

struct VerifyOpts {
    std::string graph;
    std::string witness;
    std::string pattern;
    std::string sides;
};

int run_verify(const VerifyOpts& o, Context& ctx) {
    parse_overrides(ctx.global.overrides, {});
    const Graph g = ctx.load_graph(o.graph);
    std::optional<Graph> pattern;
    if (!o.pattern.empty()) pattern = ctx.load_graph(o.pattern);
    std::optional<std::vector<Side>> sides;
    if (!o.sides.empty()) sides = parse_sides(o.sides);
    const Json j = ctx.load_json(o.witness);

    std::vector<std::pair<Witness, std::optional<Graph>>> items;
    std::vector<std::optional<std::vector<Side>>> item_sides;
    if (j.contains("witnesses")) {
        const Report r = report_from_json(j);
        for (const auto& rec : r.witnesses) {
            std::optional<Graph> pat = pattern;
            if (!pat && rec.pattern) pat = decode_graph6(*rec.pattern);
            items.emplace_back(rec.witness, pat);
            item_sides.push_back(sides ? sides : rec.sides);
        }
    } else {
        items.emplace_back(witness_from_json(j), pattern);
        item_sides.push_back(sides);
    }

    std::int64_t valid = 0, missing = 0, invalid = 0;
    for (std::size_t i = 0; i < items.size(); ++i) {
        const auto& [w, pat] = items[i];
        if (!found(w)) {
            ++missing;
            continue;
        }
        const Validation v = validate(g, w, pat ? &*pat : nullptr, item_sides[i] ? &*item_sides[i] : nullptr);
        if (v) {
            ++valid;
        } else {
            ++invalid;
            ctx.report.log.push_back("witness " + std::to_string(i) + ": " + v.message);
        }
    }
    ctx.report.counters["valid"] = valid;
    ctx.report.counters["invalid"] = invalid;
    ctx.report.counters["not_found"] = missing;
    return valid > 0 && invalid == 0 && missing == 0 ? 0 : 1;
}

// ---- hyper ----

struct HyperOpts {
    std::string action;
    std::string input;
    std::string epsilon = "1/2";
    std::string delta = "1/2";
    std::string set;
    std::string empty_core = "allowed";
    std::size_t a = 1;
};

UniformHypergraph hypergraph_from_json(const Json& j) {
    try {
        std::optional<std::vector<std::size_t>> parts;
        if (j.contains("parts")) parts = j.at("parts").get<std::vector<std::size_t>>();
        return UniformHypergraph(j.at("ground_size").get<std::size_t>(), j.at("uniformity").get<std::size_t>(),
                                 j.at("edges").get<std::vector<HyperEdge>>(), std::move(parts));
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::Usage, std::string("malformed hypergraph: ") + e.what());
    }
}

int run_hyper(const HyperOpts& o, Context& ctx) {
    const auto ov = parse_overrides(ctx.global.overrides, {"enforce_hypothesis", "r"});
    const UniformHypergraph h = hypergraph_from_json(ctx.load_json(o.input));
    auto& rep = ctx.report;
    EmptyCore core;
    if (o.empty_core == "allowed")
        core = EmptyCore::Allowed;
    else if (o.empty_core == "excluded")
        core = EmptyCore::Excluded;
    else
        throw Error(ErrorCode::Usage, "empty-core must be allowed or excluded");
    const Rational eps = parse_rational(o.epsilon);
    const Rational delta = parse_rational(o.delta);

    if (o.action == "degree") {
        const auto s = parse_list(o.set);
        rep.counters["degree"] = static_cast<std::int64_t>(set_degree(h, s));
        return 0;
    }
    if (o.action == "heavy") {
        const HeavyReport r = heavy_edges(h, delta, core, ctx.global.threads);
        rep.results["heavy"] = to_json(r);
        rep.counters["heavy_edges"] = static_cast<std::int64_t>(r.heavy.size());
        rep.values["superspread"] = r.superspread(eps) ? "true" : "false";
        return 0;
    }
    if (o.action == "clean") {
        SpreadParams p;
        p.epsilon = eps;
        p.delta = delta;
        p.a = o.a;
        p.r = ov.count("r") ? to_size(ov.at("r")) : h.uniformity();
        p.empty_core = core;
        if (ov.count("enforce_hypothesis")) p.enforce_hypothesis = ov.at("enforce_hypothesis") != "0";
        rep.values["edge_threshold"] = p.edge_threshold(h.ground_size()).str();
        const CleanResult r = clean_to_superspread(h, p, ctx.global.seed, ctx.global.threads);
        rep.results["hypergraph"] = to_json(r.hypergraph);
        rep.results["partition"] = r.partition;
        rep.results["dropped_parts"] = r.dropped_parts;
        rep.counters["rainbow_edges"] = static_cast<std::int64_t>(r.rainbow_edges);
        rep.values["hypothesis_held"] = r.hypothesis_held ? "true" : "false";
        return 0;
    }
    throw Error(ErrorCode::Usage, "action must be degree, heavy or clean");
}

std::vector<std::string> manifest_command_line(const std::vector<std::string>& args) {
    std::vector<std::string> out;
    for (std::size_t i = 1; i < args.size(); ++i) {
        const std::string& a = args[i];
        if (a == "--threads" || a == "--out") {
            ++i;
            continue;
        }
        if (a.rfind("--threads=", 0) == 0 || a.rfind("--out=", 0) == 0) continue;
        out.push_back(a);
    }
    return out;
}

std::map<std::string, std::string> manifest_parameters(const CLI::App* sub) {
    std::map<std::string, std::string> out;
    for (const CLI::Option* opt : sub->get_options()) {
        if (opt->get_lnames().empty()) continue;
        const std::string name = opt->get_lnames().front();
        if (name == "help") continue;
        std::string value;
        if (opt->count() > 0) {
            for (const std::string& r : opt->results()) value += (value.empty() ? "" : ",") + r;
        } else {
            value = opt->get_default_str();
        }
        out[name] = value;
    }
    return out;
}

}  // namespace

int dispatch(const std::vector<std::string>& args) {
    const auto wall_start = std::chrono::steady_clock::now();
    const std::string started = utc_now();

    CLI::App app{"Workbench for induced Turan numbers ex*(n,H,s)", "indturan"};
    app.set_config("--config", "", "key=value file (sub.key=value or [sub] sections) pre-populating flags");
    app.require_subcommand(1);
    app.fallthrough();
    Global global;
    app.add_option("--seed", global.seed, "64-bit seed for every probabilistic step")->capture_default_str();
    app.add_option("--out", global.out, "report path, - for stdout")->capture_default_str();
    app.add_option("--threads", global.threads, "worker threads, 0 = one per core")->capture_default_str();
    app.add_option("--override", global.overrides, "key=value parameter override (repeatable)");

    ConstructOpts co;
    auto* construct = app.add_subcommand("construct", "build a graph and print it as graph6");
    construct->add_option("--family", co.family, "named | pp | blowup | random | dense | disjoint | gadget")->required();
    construct->add_option("--spec", co.spec, "named family, e.g. cycle(5), complete_bipartite(2,3), tree_from_pruefer([1,1])");
    construct->add_option("--q", co.q, "prime power for pp (PG(2,q) incidence graph)")->capture_default_str();
    construct->add_option("--graph", co.graph, "input graph6 file for blowup / disjoint");
    construct->add_option("--t", co.t, "blow-up factor; for dense the independence parameter")->capture_default_str();
    construct->add_option("--n", co.n, "order for random; copy count for disjoint")->capture_default_str();
    construct->add_option("--p", co.p, "edge probability for random (exact rational)")->capture_default_str();
    construct->add_option("--s", co.s, "dense: forbidden K_{s,s}; order N is the least with N^10 >= s^t")->capture_default_str();
    construct->add_option("--trials", co.trials, "dense: sampling attempts")->capture_default_str();
    construct->add_option("--a", co.a, "gadget: |S|")->capture_default_str();
    construct->add_option("--k", co.k, "gadget: largest trace size")->capture_default_str();
    construct->add_option("--theta", co.theta, "gadget: realisers per trace")->capture_default_str();
    construct->add_option("--g6", co.g6, "also write the graph to this graph6 file");
    construct->footer("Overrides: min_edges (dense, default ceil(N^2/4)).");

    SolveOpts so;
    auto* solve = app.add_subcommand("solve", "exact ex*(n,H,s) / ex(n,F) for n <= 9");
    solve->add_option("--n", so.n, "number of vertices (<= 9)")->required();
    solve->add_option("--induced", so.induced, "graph6 file of a forbidden induced pattern (repeatable)");
    solve->add_option("--subgraph", so.subgraph, "graph6 file of a forbidden subgraph (repeatable)");
    solve->add_option("--kss", so.kss, "also forbid K_{s,s} as a subgraph (0 = no)")->capture_default_str();

    RatioOpts ro;
    auto* ratio = app.add_subcommand("ratio", "table of ex*(n,H,s) against ex(n,H) with sandwich columns");
    ratio->add_option("--pattern", ro.pattern, "graph6 file of H")->required();
    ratio->add_option("--s-range", ro.s_range, "s values: a..b or a,b,c")->capture_default_str();
    ratio->add_option("--n-range", ro.n_range, "n values: a..b or a,b,c")->required();
    ratio->add_option("--csv", ro.csv, "also write the table as CSV");

    EmbedOpts eo;
    auto* embed = app.add_subcommand("embed", "greedy induced embedding, C4-free tree embedding or the EH witness");
    embed->add_option("--graph", eo.graph, "host graph6 file")->required();
    embed->add_option("--pattern", eo.pattern, "pattern graph6 file (a tree for --mode tree)")->required();
    embed->add_option("--side-a", eo.side_a, "pattern A side as a list; default BFS colouring");
    embed->add_option("--mode", eo.mode, "greedy | tree | eh")->capture_default_str();
    embed->add_option("--image", eo.image, "greedy: host images of the A side, in A order");
    embed->add_option("--s", eo.s, "K_{s,s} parameter")->capture_default_str();
    embed->add_flag("--relaxed", eo.relaxed, "greedy: skip the richness gate, allow the fallback choice");
    embed->add_flag("--assume-free", eo.assume_free, "tree/eh: trust the freeness hypothesis instead of checking it");
    embed->footer("Overrides: theta (default (4bs)^b). EH biclique size: largest s with (s h^2)^(8h+20) <= n.");

    PipelineOpts po;
    auto* pipeline = app.add_subcommand("pipeline", "DRC -> rich independent set -> greedy embedding");
    pipeline->add_option("--graph", po.graph, "host graph6 file")->required();
    pipeline->add_option("--pattern", po.pattern, "pattern graph6 file")->required();
    pipeline->add_option("--side-a", po.side_a, "pattern A side as a list; default BFS colouring");
    pipeline->add_option("--mode", po.mode, "I (bounded B-degree) | II (bounded degree, t = 2k, ell = m = ceil(sqrt n))")
        ->capture_default_str();
    pipeline->add_option("--s", po.s, "K_{s,s} parameter")->capture_default_str();
    pipeline->footer(
        "Overrides (any of them disables precondition checks): t (default k), m (default (C_H s)^(2h)), "
        "ell (default (C_H s)^(4h+10)), theta (default (4bs)^b), independent_cap, clean_retries. C_H = 4|A||B|.");

    CyclesOpts cyo;
    auto* cycles = app.add_subcommand("cycles", "cycle counts, path statistics and induced C_2k / Q_8 finders");
    cycles->add_option("--action", cyo.action, "count | stats | almost-regular | find-c2k | find-cube")->required();
    cycles->add_option("--graph", cyo.graph, "graph6 file")->required();
    cycles->add_option("--sides", cyo.sides, "A/B string, or auto (2-colouring, else local max cut)")
        ->capture_default_str();
    cycles->add_option("--k", cyo.k, "half cycle length / path length")->capture_default_str();
    cycles->add_option("--s", cyo.s, "K_{s,s} parameter")->capture_default_str();
    cycles->add_option("--u", cyo.u, "stats: first endpoint")->capture_default_str();
    cycles->add_option("--v", cyo.v, "stats: second endpoint")->capture_default_str();
    cycles->footer(
        "Overrides: alpha (default 1/k), K (default 2^(ceil(3/alpha)+5)), C (default 1), selection_size "
        "(default 2s; asymptotically (64k)^(3s)), search_budget, pair_budget, cost_limit, skip_checks. "
        "K0 = 2^(ceil(3/alpha)+2). Red/blue sampling uses p = c delta^-1 / (10n) with c = 1/(32k).");

    VerifyOpts vo;
    auto* verify = app.add_subcommand("verify", "re-check a witness or every witness of a report");
    verify->add_option("--graph", vo.graph, "host graph6 file")->required();
    verify->add_option("--witness", vo.witness, "witness JSON or report JSON")->required();
    verify->add_option("--pattern", vo.pattern, "pattern graph6 file for induced copies");
    verify->add_option("--sides", vo.sides, "A/B string; cycles must alternate");

    HyperOpts ho;
    auto* hyper = app.add_subcommand("hyper", "set degrees, heavy edges and superspread cleaning");
    hyper->add_option("--action", ho.action, "degree | heavy | clean")->required();
    hyper->add_option("--input", ho.input, "hypergraph JSON {ground_size, uniformity, edges, parts?}")->required();
    hyper->add_option("--epsilon", ho.epsilon, "epsilon (exact rational)")->capture_default_str();
    hyper->add_option("--delta", ho.delta, "delta (exact rational)")->capture_default_str();
    hyper->add_option("--set", ho.set, "degree: the vertex set S");
    hyper->add_option("--a", ho.a, "clean: lowest admissible uniformity")->capture_default_str();
    hyper->add_option("--empty-core", ho.empty_core, "allowed | excluded")->capture_default_str();
    hyper->footer(
        "Overrides: r (default uniformity), enforce_hypothesis (default 1; edge threshold C_r (eps delta)^-r n^(a-1), "
        "C_r = r^r 2^(r^2)).");

    std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
    try {
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    CLI::App* sub = app.get_subcommands().front();
    Context ctx(global, sub->get_name());
    ctx.report.manifest.command_line = manifest_command_line(args);
    ctx.report.manifest.parameters = manifest_parameters(sub);
    for (const auto& kv : global.overrides) ctx.report.manifest.parameters["override." + kv.substr(0, kv.find('='))] = kv;

    int code = 0;
    try {
        if (sub == construct) code = run_construct(co, ctx);
        else if (sub == solve) code = run_solve(so, ctx);
        else if (sub == ratio) code = run_ratio(ro, ctx);
        else if (sub == embed) code = run_embed(eo, ctx);
        else if (sub == pipeline) code = run_pipeline(po, ctx);
        else if (sub == cycles) code = run_cycles(cyo, ctx);
        else if (sub == verify) code = run_verify(vo, ctx);
        else code = run_hyper(ho, ctx);
    } catch (const Error& e) {
        if (!not_found_class(e.code())) {
            std::cerr << "indturan " << sub->get_name() << ": " << e.what() << '\n';
            return 2;
        }
        ctx.record_failure(e);
        code = 1;
    } catch (const std::exception& e) {
        std::cerr << "indturan " << sub->get_name() << ": " << e.what() << '\n';
        return 2;
    }

    ctx.report.execution.started = started;
    ctx.report.execution.finished = utc_now();
    ctx.report.execution.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - wall_start).count();
    try {
        write_report(ctx.report, global.out);
    } catch (const Error& e) {
        std::cerr << "indturan: " << e.what() << '\n';
        return 2;
    }
    return code;
}

int dispatch(int argc, const char* const* argv) {
    std::vector<std::string> args(argv, argv + argc);
    return dispatch(args);
}

}  // namespace indturan::cli
