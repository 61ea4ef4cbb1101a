#include "indturan/exact_solver.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <map>
#include <sstream>

#include "indturan/canonical.hpp"
#include "indturan/error.hpp"
#include "indturan/graph6.hpp"
#include "indturan/parallel.hpp"
#include "indturan/search.hpp"

namespace indturan {

namespace {

Graph kss(std::size_t s) {
    if (s == 0) throw Error(ErrorCode::BadSpec, "s must be positive");
    Graph g(2 * s);
    for (Vertex i = 0; i < s; ++i)
        for (Vertex j = 0; j < s; ++j) g.add_edge(i, s + j);
    return g;
}

void check_patterns(const ConstraintSet& c) {
    for (const auto* list : {&c.induced_forbidden, &c.subgraph_forbidden})
        for (const Graph& h : *list) {
            if (h.order() == 0) throw Error(ErrorCode::BadSpec, "forbidden pattern has no vertices");
            if (h.order() > kMaxPatternOrder) throw Error(ErrorCode::TooLarge, "forbidden pattern above 8 vertices");
        }
}

// Parent is admissible, so only copies through the new vertex matter.
bool admits_through(const Graph& g, Vertex v, const ConstraintSet& c) {
    for (const Graph& h : c.induced_forbidden)
        if (found(find_induced_copy_through(g, h, v))) return false;
    for (const Graph& h : c.subgraph_forbidden)
        if (found(find_subgraph_copy_through(g, h, v))) return false;
    return true;
}

Graph extend(const Graph& parent, std::uint64_t mask) {
    const std::size_t m = parent.order();
    Graph g(m + 1);
    for (auto [x, y] : parent.edges()) g.add_edge(x, y);
    for (Vertex x = 0; x < m; ++x)
        if ((mask >> x) & 1U) g.add_edge(x, m);
    return g;
}

std::vector<std::uint64_t> next_level(std::size_t m, const std::vector<std::uint64_t>& level, const ConstraintSet& c,
                                      unsigned threads) {
    std::vector<std::vector<std::uint64_t>> found_codes(level.size());
    parallel_for(level.size(), threads, [&](std::size_t i) {
        const Graph parent = graph_from_code(m, level[i]);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
            const Graph g = extend(parent, mask);
            if (admits_through(g, m, c)) found_codes[i].push_back(canonical_code(g));
        }
    });
    std::vector<std::uint64_t> out;
    for (auto& v : found_codes) out.insert(out.end(), v.begin(), v.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void check_order(std::size_t n, const ConstraintSet& c) {
    if (n > kMaxSolverOrder) throw Error(ErrorCode::TooLarge, "exact search needs n <= 9");
    check_patterns(c);
}

}  // namespace

ConstraintSet ConstraintSet::induced_star(const Graph& h, std::size_t s) {
    ConstraintSet c;
    c.induced_forbidden.push_back(h);
    c.subgraph_forbidden.push_back(kss(s));
    return c;
}

ConstraintSet ConstraintSet::subgraph(std::vector<Graph> forbidden) {
    ConstraintSet c;
    c.subgraph_forbidden = std::move(forbidden);
    return c;
}

bool ConstraintSet::satisfied_by(const Graph& g) const {
    for (const Graph& h : induced_forbidden)
        if (found(find_induced_copy(g, h))) return false;
    for (const Graph& h : subgraph_forbidden)
        if (found(find_subgraph_copy(g, h))) return false;
    return true;
}

std::vector<std::uint64_t> enumerate_admissible(std::size_t n, const ConstraintSet& constraints, unsigned threads) {
    check_order(n, constraints);
    std::vector<std::uint64_t> level{0};
    for (std::size_t m = 0; m < n && !level.empty(); ++m) level = next_level(m, level, constraints, threads);
    return level;
}

ExtremalResult extremal_search(std::size_t n, const ConstraintSet& constraints, unsigned threads) {
    check_order(n, constraints);
    ExtremalResult out;
    out.n = n;
    if (n == 0) {
        out.max_edges = 0;
        out.count_extremal = 1;
        out.witness_graphs.push_back(encode_graph6(Graph(0)));
        out.stats.level_sizes.push_back(1);
        return out;
    }

    std::vector<std::uint64_t> level{0};
    out.stats.level_sizes.push_back(1);
    for (std::size_t m = 0; m + 1 < n && !level.empty(); ++m) {
        level = next_level(m, level, constraints, threads);
        out.stats.level_sizes.push_back(level.size());
    }
    if (level.empty()) return out;

    const std::size_t m = n - 1;
    std::stable_sort(level.begin(), level.end(),
                     [](std::uint64_t x, std::uint64_t y) { return std::popcount(x) > std::popcount(y); });
    std::vector<std::uint64_t> masks(std::size_t{1} << m);
    for (std::size_t i = 0; i < masks.size(); ++i) masks[i] = i;
    std::stable_sort(masks.begin(), masks.end(),
                     [](std::uint64_t x, std::uint64_t y) { return std::popcount(x) > std::popcount(y); });

    std::atomic<long long> best{-1};
    std::vector<std::vector<std::pair<long long, std::uint64_t>>> hits(level.size());
    parallel_for(level.size(), threads, [&](std::size_t i) {
        const long long base = std::popcount(level[i]);
        if (base + static_cast<long long>(m) < best.load()) return;
        const Graph parent = graph_from_code(m, level[i]);
        for (std::uint64_t mask : masks) {
            const long long e = base + std::popcount(mask);
            if (e < best.load()) break;
            const Graph g = extend(parent, mask);
            if (!admits_through(g, m, constraints)) continue;
            hits[i].emplace_back(e, canonical_code(g));
            long long cur = best.load();
            while (e > cur && !best.compare_exchange_weak(cur, e)) {
            }
        }
    });

    out.max_edges = best.load();
    std::vector<std::uint64_t> extremal;
    for (const auto& h : hits)
        for (auto [e, code] : h)
            if (e == out.max_edges) extremal.push_back(code);
    std::sort(extremal.begin(), extremal.end());
    extremal.erase(std::unique(extremal.begin(), extremal.end()), extremal.end());
    out.count_extremal = extremal.size();
    for (std::uint64_t code : extremal) out.witness_graphs.push_back(encode_graph6(graph_from_code(n, code)));
    return out;
}

std::vector<RatioRow> ratio_table(const Graph& h, const std::vector<std::size_t>& s_range,
                                  const std::vector<std::size_t>& n_range, unsigned threads) {
    std::map<std::size_t, long long> ex_h;
    std::vector<RatioRow> rows;
    for (std::size_t n : n_range) {
        if (!ex_h.count(n)) ex_h[n] = extremal_search(n, ConstraintSet::subgraph({h}), threads).max_edges;
        for (std::size_t s : s_range) {
            RatioRow r;
            r.n = n;
            r.s = s;
            r.ex_star = extremal_search(n, ConstraintSet::induced_star(h, s), threads).max_edges;
            r.ex = ex_h[n];
            if (r.ex > 0 && r.ex_star >= 0) r.ratio = Rational(r.ex_star, r.ex);
            r.ex_h_kss = extremal_search(n, ConstraintSet::subgraph({h, kss(s)}), threads).max_edges;
            r.ex_kss = extremal_search(n, ConstraintSet::subgraph({kss(s)}), threads).max_edges;
            rows.push_back(std::move(r));
        }
    }
    return rows;
}

std::string ratio_table_csv(const std::vector<RatioRow>& rows) {
    std::ostringstream out;
    out << "n,s,ex_star,ex,ratio,ex_h_kss,ex_kss\n";
    for (const RatioRow& r : rows)
        out << r.n << ',' << r.s << ',' << r.ex_star << ',' << r.ex << ',' << (r.ratio ? to_string(*r.ratio) : "NA")
            << ',' << r.ex_h_kss << ',' << r.ex_kss << '\n';
    return out.str();
}

}  // namespace indturan
