#include "indturan/witness.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace indturan {

std::string_view kind_name(const Witness& w) {
    struct Visitor {
        std::string_view operator()(const NotFound&) const { return "NotFound"; }
        std::string_view operator()(const InducedCopy&) const { return "InducedCopy"; }
        std::string_view operator()(const Biclique&) const { return "Biclique"; }
        std::string_view operator()(const IndependentSet&) const { return "IndependentSet"; }
        std::string_view operator()(const RichSet&) const { return "RichSet"; }
        std::string_view operator()(const InducedCycle&) const { return "InducedCycle"; }
    };
    return std::visit(Visitor{}, w);
}

bool found(const Witness& w) { return !std::holds_alternative<NotFound>(w); }

namespace {

Validation fail(std::string message) { return Validation{false, std::move(message)}; }

bool in_range(const Graph& g, const std::vector<Vertex>& vs) {
    return std::all_of(vs.begin(), vs.end(), [&](Vertex v) { return v < g.order(); });
}

bool distinct(std::vector<Vertex> vs) {
    std::sort(vs.begin(), vs.end());
    return std::adjacent_find(vs.begin(), vs.end()) == vs.end();
}

Validation check_copy(const Graph& g, const InducedCopy& c, const Graph* pattern) {
    if (pattern == nullptr) return fail("induced copy needs its pattern graph");
    if (c.map.size() != pattern->order()) return fail("map size differs from pattern order");
    if (!in_range(g, c.map)) return fail("image vertex out of range");
    if (!distinct(c.map)) return fail("map is not injective");
    for (Vertex x = 0; x < pattern->order(); ++x)
        for (Vertex y = x + 1; y < pattern->order(); ++y)
            if (pattern->adjacent(x, y) != g.adjacent(c.map[x], c.map[y]))
                return fail("pair (" + std::to_string(x) + "," + std::to_string(y) + ") not preserved");
    return {};
}

Validation check_biclique(const Graph& g, const Biclique& b) {
    if (b.left.empty() || b.left.size() != b.right.size()) return fail("sides must be non-empty and equal-sized");
    std::vector<Vertex> all = b.left;
    all.insert(all.end(), b.right.begin(), b.right.end());
    if (!in_range(g, all)) return fail("vertex out of range");
    if (!distinct(all)) return fail("sides are not disjoint sets");
    for (Vertex u : b.left)
        for (Vertex v : b.right)
            if (!g.adjacent(u, v)) return fail("missing cross edge " + std::to_string(u) + "-" + std::to_string(v));
    return {};
}

Validation check_independent(const Graph& g, const std::vector<Vertex>& vs) {
    if (!in_range(g, vs)) return fail("vertex out of range");
    if (!distinct(vs)) return fail("repeated vertex");
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (g.adjacent(vs[i], vs[j])) return fail("internal edge " + std::to_string(vs[i]) + "-" + std::to_string(vs[j]));
    return {};
}

Validation check_rich(const Graph& g, const RichSet& r) {
    if (!in_range(g, r.vertices) || !distinct(r.vertices)) return fail("bad vertex list");
    std::set<Vertex> members(r.vertices.begin(), r.vertices.end());
    // Recount every trace by brute force.
    std::map<std::vector<Vertex>, std::size_t> counts;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (members.count(v) != 0) continue;
        std::vector<Vertex> trace;
        for (Vertex u : members)
            if (g.adjacent(u, v)) trace.push_back(u);
        ++counts[trace];
    }
    const std::size_t s = members.size();
    std::size_t expected_traces = 0;
    std::vector<Vertex> sorted(members.begin(), members.end());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << s); ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) > r.k) continue;
        ++expected_traces;
        std::vector<Vertex> trace;
        for (std::size_t i = 0; i < s; ++i)
            if ((mask >> i) & 1U) trace.push_back(sorted[i]);
        auto it = counts.find(trace);
        std::size_t c = it == counts.end() ? 0 : it->second;
        if (c < r.theta) return fail("trace realised only " + std::to_string(c) + " times");
    }
    if (r.traces.size() != expected_traces) return fail("witness does not list every trace");
    for (const auto& t : r.traces) {
        auto it = counts.find(t.trace);
        std::size_t c = it == counts.end() ? 0 : it->second;
        if (c != t.count) return fail("recorded trace count disagrees with recount");
    }
    return {};
}

Validation check_cycle(const Graph& g, const InducedCycle& c, const std::vector<Side>* sides) {
    const std::size_t m = c.cycle.size();
    if (m < 3) return fail("cycle needs at least 3 vertices");
    if (!in_range(g, c.cycle) || !distinct(c.cycle)) return fail("bad vertex list");
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            bool consecutive = (j == i + 1) || (i == 0 && j == m - 1);
            if (g.adjacent(c.cycle[i], c.cycle[j]) != consecutive)
                return fail(consecutive ? "missing cycle edge" : "chord present");
        }
    }
    if (sides != nullptr) {
        if (m % 2 != 0) return fail("alternating cycle must be even");
        for (std::size_t i = 0; i < m; ++i) {
            Side expect = (i % 2 == 0) ? Side::A : Side::B;
            if ((*sides)[c.cycle[i]] != expect) return fail("cycle does not alternate A,B starting in A");
        }
    }
    return {};
}

}  // namespace

Validation validate(const Graph& host, const Witness& w, const Graph* pattern, const std::vector<Side>* sides) {
    return std::visit(
        [&](const auto& value) -> Validation {
            using T = std::decay_t<decltype(value)>;
            if constexpr (std::is_same_v<T, NotFound>) return {};
            else if constexpr (std::is_same_v<T, InducedCopy>) return check_copy(host, value, pattern);
            else if constexpr (std::is_same_v<T, Biclique>) return check_biclique(host, value);
            else if constexpr (std::is_same_v<T, IndependentSet>) return check_independent(host, value.vertices);
            else if constexpr (std::is_same_v<T, RichSet>) return check_rich(host, value);
            else return check_cycle(host, value, sides);
        },
        w);
}

}  // namespace indturan
