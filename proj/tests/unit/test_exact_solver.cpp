#include <gtest/gtest.h>

#include <map>
#include <numeric>
#include <set>

#include "indturan/canonical.hpp"
#include "indturan/constructions.hpp"
#include "indturan/error.hpp"
#include "indturan/exact_solver.hpp"
#include "indturan/graph6.hpp"
#include "oracles.hpp"

using namespace indturan;

namespace {

const Graph& c4() {
    static const Graph g = named_graph("cycle(4)");
    return g;
}

}  // namespace

TEST(Canonical, CodeLayout) {
    Graph g(3);
    g.add_edge(0, 1);
    EXPECT_EQ(adjacency_code(g), 0b100u);
    Graph h(3);
    h.add_edge(1, 2);
    EXPECT_EQ(adjacency_code(h), 0b001u);
    EXPECT_EQ(graph_from_code(3, 0b001u), h);
    EXPECT_EQ(canonical_code(g), canonical_code(h));
    EXPECT_EQ(canonical_code(g), 0b001u);
}

TEST(Canonical, MatchesBruteForce) {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const std::size_t n = 1 + seed % 8;
        const Graph g = oracle::random_graph(n, 0.2 + 0.1 * (seed % 7), seed);
        const CanonicalForm f = canonical_form(g);
        EXPECT_EQ(f.code, canonical_code_bruteforce(g)) << seed;
        EXPECT_EQ(canonical_code(g), f.code);
        // the reported order reproduces the code
        EXPECT_EQ(adjacency_code(g.induced(f.order)), f.code);
    }
}

TEST(Canonical, InvariantUnderRelabelling) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const std::size_t n = 4 + seed % 8;
        const Graph g = oracle::random_graph(n, 0.5, seed + 10);
        std::vector<Vertex> perm(n);
        std::iota(perm.begin(), perm.end(), Vertex{0});
        std::shuffle(perm.begin(), perm.end(), Rng(seed));
        EXPECT_EQ(canonical_code(g), canonical_code(g.induced(perm)));
    }
    // highly symmetric graphs stress twin pruning
    for (const char* name : {"complete(11)", "empty(11)", "complete_bipartite(5,6)", "cycle(11)", "hypercube(3)"}) {
        const Graph g = named_graph(name);
        std::vector<Vertex> perm(g.order());
        std::iota(perm.rbegin(), perm.rend(), Vertex{0});
        EXPECT_EQ(canonical_code(g), canonical_code(g.induced(perm))) << name;
    }
    EXPECT_THROW(canonical_code(Graph(12)), Error);
}

TEST(Canonical, SeparatesIsomorphismClasses) {
    // same classes as the independent permutation-minimum dedup
    for (std::size_t n = 1; n <= 5; ++n) {
        const std::size_t pairs = n * (n - 1) / 2;
        std::map<std::uint64_t, std::uint64_t> ours_to_theirs;
        std::set<std::uint64_t> theirs_seen;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
            const Graph g = oracle::from_mask(n, mask);
            const auto ours = canonical_code(g);
            const auto theirs = oracle::min_code(g);
            auto [it, fresh] = ours_to_theirs.emplace(ours, theirs);
            EXPECT_EQ(it->second, theirs);
            if (fresh) EXPECT_TRUE(theirs_seen.insert(theirs).second);
        }
    }
}

TEST(Enumeration, KnownCounts) {
    const ConstraintSet none;
    const std::vector<std::size_t> expected{1, 1, 2, 4, 11, 34, 156, 1044};
    for (std::size_t n = 0; n < expected.size(); ++n)
        EXPECT_EQ(enumerate_admissible(n, none).size(), expected[n]) << n;
    for (std::size_t n = 1; n <= 6; ++n)
        EXPECT_EQ(enumerate_admissible(n, none).size(), oracle::all_graphs_up_to_iso(n).size());
    EXPECT_EQ(enumerate_admissible(8, none, 4).size(), 12346u);
}

TEST(Enumeration, AdmissibleClassesMatchOracle) {
    const ConstraintSet cs = ConstraintSet::induced_star(named_graph("path(3)"), 2);
    for (std::size_t n = 1; n <= 6; ++n) {
        std::set<std::uint64_t> want;
        for (const Graph& g : oracle::all_graphs_up_to_iso(n))
            if (!oracle::has_copy(g, named_graph("path(3)"), true) && !oracle::has_kss(g, 2))
                want.insert(canonical_code(g));
        const auto got = enumerate_admissible(n, cs);
        EXPECT_EQ(std::set<std::uint64_t>(got.begin(), got.end()), want) << n;
    }
}

TEST(Extremal, Examples) {
    for (std::size_t n = 1; n <= 8; ++n) {
        const ExtremalResult r = extremal_search(n, ConstraintSet::induced_star(named_graph("complete(2)"), 2));
        EXPECT_EQ(r.max_edges, 0);
        EXPECT_EQ(r.count_extremal, 1u);
    }

    const ExtremalResult c4r = extremal_search(4, ConstraintSet::induced_star(c4(), 2));
    EXPECT_EQ(c4r.max_edges, 4);
    // triangle plus a pendant edge is one of the extremal graphs
    Graph paw(4);
    paw.add_edge(0, 1);
    paw.add_edge(1, 2);
    paw.add_edge(0, 2);
    paw.add_edge(2, 3);
    bool has_paw = false;
    for (const auto& text : c4r.witness_graphs) has_paw = has_paw || canonical_code(decode_graph6(text)) == canonical_code(paw);
    EXPECT_TRUE(has_paw);
    EXPECT_EQ(c4r.max_edges, oracle::naive_extremal(4, {c4()}, {oracle::complete_bipartite(2, 2)}));

    const ExtremalResult ex5 = extremal_search(5, ConstraintSet::subgraph({c4()}));
    EXPECT_EQ(ex5.max_edges, oracle::naive_extremal(5, {}, {c4()}));
    EXPECT_EQ(ex5.max_edges, 6);
}

TEST(Extremal, WitnessesAreExtremalAndDistinct) {
    const ConstraintSet cs = ConstraintSet::induced_star(named_graph("path(4)"), 2);
    for (std::size_t n = 3; n <= 7; ++n) {
        const ExtremalResult r = extremal_search(n, cs);
        EXPECT_EQ(r.witness_graphs.size(), r.count_extremal);
        std::set<std::uint64_t> codes;
        for (const auto& text : r.witness_graphs) {
            const Graph g = decode_graph6(text);
            EXPECT_EQ(g.order(), n);
            EXPECT_EQ(static_cast<long long>(g.edge_count()), r.max_edges);
            EXPECT_TRUE(cs.satisfied_by(g));
            EXPECT_FALSE(oracle::has_copy(g, named_graph("path(4)"), true));
            EXPECT_FALSE(oracle::has_kss(g, 2));
            EXPECT_TRUE(codes.insert(canonical_code(g)).second);
        }
        // count of extremal classes from the independent enumeration
        if (n <= 6) {
            std::size_t want = 0;
            for (const Graph& g : oracle::all_graphs_up_to_iso(n))
                if (static_cast<long long>(g.edge_count()) == r.max_edges &&
                    !oracle::has_copy(g, named_graph("path(4)"), true) && !oracle::has_kss(g, 2))
                    ++want;
            EXPECT_EQ(r.count_extremal, want) << n;
        }
    }
}

TEST(Extremal, AgreesWithNaive) {
    const std::vector<Graph> patterns{named_graph("complete(2)"), named_graph("path(3)"), named_graph("path(4)"), c4(),
                                      named_graph("complete_bipartite(1,2)"), named_graph("complete(3)")};
    for (const Graph& h : patterns)
        for (std::size_t s : {1u, 2u, 3u})
            for (std::size_t n = 1; n <= 6; ++n) {
                const ExtremalResult r = extremal_search(n, ConstraintSet::induced_star(h, s));
                EXPECT_EQ(r.max_edges, oracle::naive_extremal(n, {h}, {oracle::complete_bipartite(s, s)}))
                    << encode_graph6(h) << " s " << s << " n " << n;
            }
}

TEST(Extremal, MonotoneAndSandwiched) {
    const std::vector<Graph> patterns{named_graph("path(3)"), named_graph("path(4)"), c4(),
                                      named_graph("complete_bipartite(1,3)")};
    for (const Graph& h : patterns) {
        std::vector<std::vector<long long>> table(4, std::vector<long long>(8, 0));
        for (std::size_t s = 1; s <= 3; ++s)
            for (std::size_t n = 2; n <= 7; ++n) {
                const long long star = extremal_search(n, ConstraintSet::induced_star(h, s)).max_edges;
                const Graph kss = oracle::complete_bipartite(s, s);
                const long long lower = extremal_search(n, ConstraintSet::subgraph({h, kss})).max_edges;
                const long long upper = extremal_search(n, ConstraintSet::subgraph({kss})).max_edges;
                EXPECT_LE(lower, star);
                EXPECT_LE(star, upper);
                table[s][n] = star;
                if (n > 2) EXPECT_GE(star, table[s][n - 1]);
                if (s > 1) EXPECT_GE(star, table[s - 1][n]);
            }
    }
}

TEST(Extremal, ThreadDeterminism) {
    const ConstraintSet cs = ConstraintSet::induced_star(c4(), 3);
    const ExtremalResult one = extremal_search(8, cs, 1);
    for (unsigned threads : {2u, 8u}) {
        const ExtremalResult many = extremal_search(8, cs, threads);
        EXPECT_EQ(many.max_edges, one.max_edges);
        EXPECT_EQ(many.witness_graphs, one.witness_graphs);
        EXPECT_EQ(many.count_extremal, one.count_extremal);
        EXPECT_EQ(many.stats.level_sizes, one.stats.level_sizes);
    }
}

TEST(Extremal, Guards) {
    auto code_of = [](const std::function<void()>& f) {
        try {
            f();
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::Usage;
    };
    EXPECT_EQ(code_of([] { extremal_search(10, ConstraintSet{}); }), ErrorCode::TooLarge);
    EXPECT_EQ(code_of([] { extremal_search(5, ConstraintSet::subgraph({Graph(9)})); }), ErrorCode::TooLarge);
    EXPECT_EQ(code_of([] { extremal_search(5, ConstraintSet::subgraph({Graph(0)})); }), ErrorCode::BadSpec);
}

TEST(Extremal, InfeasibleIsMinusOne) {
    // the empty graph on 3 vertices is forbidden as an induced subgraph, and so is K3
    const ConstraintSet cs{{Graph(3), named_graph("complete(3)")}, {}};
    EXPECT_EQ(extremal_search(6, cs).max_edges, -1);
    EXPECT_EQ(oracle::naive_extremal(6, cs.induced_forbidden, {}), -1);
}

TEST(RatioTable, Examples) {
    const auto zeros = ratio_table(named_graph("complete(2)"), {1, 2, 3}, {2, 3, 4, 5});
    EXPECT_EQ(zeros.size(), 12u);
    for (const auto& row : zeros) {
        EXPECT_EQ(row.ex_star, 0);
        EXPECT_EQ(row.ex, 0);
        EXPECT_FALSE(row.ratio.has_value());
    }

    const auto rows = ratio_table(c4(), {2}, {4, 5, 6});
    ASSERT_EQ(rows.size(), 3u);
    for (const auto& row : rows) {
        ASSERT_TRUE(row.ratio.has_value());
        EXPECT_GE(*row.ratio, 1);
        EXPECT_GE(row.ex_star, row.ex_h_kss);
        EXPECT_LE(row.ex_star, row.ex_kss);
        EXPECT_EQ(*row.ratio, Rational(row.ex_star, row.ex));
    }
    EXPECT_EQ(rows[0].ex, 4);
    EXPECT_EQ(rows[1].ex, 6);
    EXPECT_EQ(rows[2].ex, 7);

    EXPECT_TRUE(ratio_table(c4(), {2}, {}).empty());
}

TEST(RatioTable, Csv) {
    const auto rows = ratio_table(named_graph("path(3)"), {2}, {3, 4});
    const std::string csv = ratio_table_csv(rows);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "n,s,ex_star,ex,ratio,ex_h_kss,ex_kss");
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 3);
    const auto zeros = ratio_table(named_graph("complete(2)"), {2}, {3});
    EXPECT_NE(ratio_table_csv(zeros).find("NA"), std::string::npos);
}
