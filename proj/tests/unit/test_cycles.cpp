#include <gtest/gtest.h>

#include <set>

#include "indturan/constructions.hpp"
#include "indturan/cycles.hpp"
#include "indturan/error.hpp"
#include "indturan/search.hpp"
#include "oracles.hpp"

using namespace indturan;

namespace {

Bipartition alternating(const Graph& g) {
    auto sides = two_colouring(g);
    EXPECT_TRUE(sides.has_value());
    return Bipartition(g, *sides);
}

// closed walks of length 2k with pairwise distinct vertices
unsigned long long naive_nondegenerate(const Graph& g, std::size_t k) {
    const std::size_t len = 2 * k;
    std::vector<Vertex> walk;
    unsigned long long count = 0;
    auto rec = [&](auto&& self) -> void {
        if (walk.size() == len) {
            count += g.adjacent(walk.back(), walk.front());
            return;
        }
        for (Vertex v = 0; v < g.order(); ++v) {
            if (std::find(walk.begin(), walk.end(), v) != walk.end()) continue;
            if (!walk.empty() && !g.adjacent(walk.back(), v)) continue;
            walk.push_back(v);
            self(self);
            walk.pop_back();
        }
    };
    rec(rec);
    return count;
}

// simple alternating u-v paths with k edges over crossing edges
std::vector<std::vector<Vertex>> naive_paths(const Bipartition& b, Vertex u, Vertex v, std::size_t k) {
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> path{u};
    auto rec = [&](auto&& self) -> void {
        if (path.size() == k + 1) {
            if (path.back() == v) out.push_back(path);
            return;
        }
        const Vertex last = path.back();
        for (Vertex w = 0; w < b.graph().order(); ++w) {
            if (!b.graph().adjacent(last, w) || b.side(last) == b.side(w)) continue;
            if (std::find(path.begin(), path.end(), w) != path.end()) continue;
            if (w == v && path.size() != k) continue;
            path.push_back(w);
            self(self);
            path.pop_back();
        }
    };
    rec(rec);
    return out;
}

struct NaiveStats {
    std::uint64_t P = 0, A = 0, B = 0;
};

NaiveStats naive_stats(const Bipartition& b, Vertex u, Vertex v, std::size_t k) {
    const auto paths = naive_paths(b, u, v, k);
    NaiveStats st;
    st.P = paths.size();
    for (std::size_t i = 0; i < paths.size(); ++i)
        for (std::size_t j = 0; j < paths.size(); ++j) {
            const auto& p = paths[i];
            const auto& q = paths[j];
            bool meet = false, joined = false;
            for (std::size_t x = 1; x < k; ++x)
                for (std::size_t y = 1; y < k; ++y) {
                    meet = meet || p[x] == q[y];
                    joined = joined || b.graph().adjacent(p[x], q[y]);
                }
            st.A += meet;
            if (i != j) st.B += joined;
        }
    return st;
}

bool induced_path(const Graph& g, const std::vector<Vertex>& p) {
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 2; j < p.size(); ++j)
            if (g.adjacent(p[i], p[j])) return false;
    return true;
}

PathCount naive_fraction(const Bipartition& b, std::size_t k) {
    PathCount c;
    const std::size_t n = b.graph().order();
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v) {
            if (u == v) continue;
            for (const auto& p : naive_paths(b, u, v, k)) {
                ++c.total;
                c.induced += induced_path(b.graph(), p);
            }
        }
    return c;
}

Bipartition random_bipartition(std::size_t n, double p, std::uint64_t seed) {
    const Graph g = oracle::random_graph(n, p, seed);
    std::vector<Side> sides(n);
    for (Vertex v = 0; v < n; ++v) sides[v] = (mix64(seed * 131 + v) & 1U) ? Side::A : Side::B;
    return Bipartition(g, sides);
}

}  // namespace

TEST(HomCycles, Examples) {
    EXPECT_EQ(hom_cycle_count(named_graph("complete(2)"), 2), Count{2});
    EXPECT_EQ(hom_cycle_count(named_graph("complete(3)"), 2), Count{18});
    EXPECT_EQ(hom_cycle_count(named_graph("cycle(4)"), 2), Count{32});
}

TEST(HomCycles, MatchesMapEnumeration) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const Graph g = oracle::random_graph(2 + seed % 5, 0.5, seed);
        for (std::size_t k = 1; k <= 4; ++k)
            EXPECT_EQ(hom_cycle_count(g, k), Count{oracle::hom_cycles(g, k)}) << seed << " k " << k;
    }
}

TEST(HomCycles, OverflowDetected) {
    EXPECT_THROW(hom_cycle_count(named_graph("complete(64)"), 40), Error);
}

TEST(NondegenerateCycles, Examples) {
    const CycleSplit k3 = nondegenerate_cycle_count(named_graph("complete(3)"), 2);
    EXPECT_EQ(k3.nondegenerate, Count{0});
    EXPECT_EQ(k3.degenerate, Count{18});
    const CycleSplit c4 = nondegenerate_cycle_count(named_graph("cycle(4)"), 2);
    EXPECT_EQ(c4.nondegenerate, Count{8});
    EXPECT_EQ(c4.degenerate, Count{24});
    EXPECT_EQ(nondegenerate_cycle_count(named_graph("complete(4)"), 2).nondegenerate, Count{24});
}

TEST(NondegenerateCycles, SplitIsExact) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const Graph g = oracle::random_graph(5 + seed % 3, 0.5, seed + 40);
        for (std::size_t k = 2; k <= 3; ++k) {
            const CycleSplit s = nondegenerate_cycle_count(g, k);
            EXPECT_EQ(s.nondegenerate, Count{naive_nondegenerate(g, k)});
            EXPECT_EQ(s.nondegenerate + s.degenerate, hom_cycle_count(g, k));
        }
    }
}

TEST(NondegenerateCycles, CostGuard) {
    try {
        nondegenerate_cycle_count(named_graph("complete(40)"), 4, 1000);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::TooLarge);
    }
}

TEST(Sidorenko, HoldsOnRandomGrid) {
    for (std::size_t n : {6u, 10u, 16u})
        for (double p : {0.2, 0.5, 0.8})
            for (std::uint64_t seed = 0; seed < 50; ++seed) {
                const Graph g = oracle::random_graph(n, p, seed * 7 + n);
                for (std::size_t k = 2; k <= 4; ++k) {
                    const Count hom = hom_cycle_count(g, k);
                    EXPECT_TRUE(sidorenko_holds(g, k, hom));
                    // independent check: hom * n^2k >= (2e)^2k in exact integers
                    const BigInt lhs = to_big(hom) * pow(BigInt(n), static_cast<unsigned>(2 * k));
                    const BigInt rhs = pow(BigInt(2 * g.edge_count()), static_cast<unsigned>(2 * k));
                    EXPECT_GE(lhs, rhs);
                }
            }
}

TEST(Sidorenko, RejectsUnderstatedHom) {
    const Graph g = named_graph("complete(5)");
    const Count hom = hom_cycle_count(g, 2);
    EXPECT_TRUE(sidorenko_holds(g, 2, hom));
    EXPECT_FALSE(sidorenko_holds(g, 2, Count{255}));  // d = 4, d^4 = 256
    EXPECT_TRUE(sidorenko_holds(g, 2, Count{256}));
}

TEST(Janzer, HoldsWhereverSplitRuns) {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const Graph g = oracle::random_graph(6 + seed % 6, 0.3 + 0.1 * (seed % 5), seed + 900);
        for (std::size_t k = 2; k <= 3; ++k) {
            const CycleSplit s = nondegenerate_cycle_count(g, k);
            const Count hom = s.nondegenerate + s.degenerate;
            EXPECT_TRUE(janzer_bound_holds(g, k, s.degenerate, hom));
        }
    }
}

TEST(Janzer, FormulaIsCompared) {
    // K2, k = 2: degenerate = hom = 2, RHS = 32 * 2^(3/2) * 1 * 2^(1/4) * 2^(3/4) > 2.
    const Graph g = named_graph("complete(2)");
    EXPECT_TRUE(janzer_bound_holds(g, 2, Count{2}, Count{2}));
    // an absurd degenerate count must fail
    EXPECT_FALSE(janzer_bound_holds(g, 2, Count{1000}, Count{2}));
}

TEST(PathStats, Examples) {
    const Bipartition c6 = alternating(named_graph("cycle(6)"));
    const PathStats st = alternating_path_stats(c6, 0, 3, 3, true);
    EXPECT_EQ(st.P, 2u);
    EXPECT_EQ(st.A, 2u);
    EXPECT_EQ(st.B, 0u);
    EXPECT_EQ(st.paths.size(), 2u);

    const Bipartition k22 = alternating(named_graph("cycle(4)"));
    const PathStats kk = alternating_path_stats(k22, 0, 2, 2, false);
    EXPECT_EQ(kk.P, 2u);
    EXPECT_EQ(kk.A, 2u);
    EXPECT_EQ(kk.B, 0u);

    const PathStats none = alternating_path_stats(c6, 0, 2, 3, false);
    EXPECT_EQ(none.P, 0u);
    EXPECT_EQ(none.A, 0u);
    EXPECT_EQ(none.B, 0u);
}

TEST(PathStats, MatchesEnumeration) {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const Bipartition b = random_bipartition(8, 0.6, seed);
        for (std::size_t k = 2; k <= 4; ++k)
            for (Vertex u = 0; u < 8; ++u)
                for (Vertex v = 0; v < 8; ++v) {
                    if (u == v) continue;
                    const PathStats st = alternating_path_stats(b, u, v, k, true);
                    const NaiveStats ns = naive_stats(b, u, v, k);
                    ASSERT_EQ(st.P, ns.P);
                    EXPECT_EQ(st.A, ns.A);
                    EXPECT_EQ(st.B, ns.B);
                    EXPECT_GE(st.A, st.P);
                    EXPECT_LE(st.B, st.P * (st.P == 0 ? 0 : st.P - 1));
                    auto want = naive_paths(b, u, v, k);
                    auto got = st.paths;
                    std::sort(want.begin(), want.end());
                    std::sort(got.begin(), got.end());
                    EXPECT_EQ(got, want);
                }
    }
}

TEST(PathStats, GluingIdentity) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Bipartition b = random_bipartition(8, 0.6, seed + 50);
        const Graph& cross = b.crossing();
        for (std::size_t k = 2; k <= 3; ++k) {
            BigInt sum = 0;
            for (Vertex u = 0; u < 8; ++u)
                for (Vertex v = 0; v < 8; ++v) {
                    if (u == v) continue;
                    const auto P = alternating_path_stats(b, u, v, k, false).P;
                    sum += BigInt(P) * P;
                }
            EXPECT_LE(sum, to_big(hom_cycle_count(cross, k)));
            EXPECT_LE(to_big(nondegenerate_cycle_count(cross, k).nondegenerate), sum);
        }
    }
}

TEST(RedBlue, CompleteBlueNoRed) {
    const std::size_t n = 200;
    std::vector<Edge> blue;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) blue.push_back({i, j});
    const Rational c(1, 4);
    const Rational delta = red_blue_default_delta(c, 2);
    EXPECT_EQ(delta, Rational(1, 512));
    const RedBlueResult r = red_blue_select(n, {}, blue, c, 2, 3);
    EXPECT_GE(r.selected.size(), 2u);
    // every pair of the selection is blue
    const std::size_t sz = r.selected.size();
    EXPECT_GE(Rational(sz * (sz - 1) / 2), c / 2 * sz * sz);
}

TEST(RedBlue, NoBluePreconditionFails) {
    try {
        red_blue_select(200, {}, {}, Rational(1, 4), 2, 1);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::PreconditionFailed);
    }
}

TEST(RedBlue, DefaultDeltaIsLargestPowerOfHalf) {
    for (std::size_t t : {1u, 2u, 5u, 20u})
        for (const Rational c : {Rational(1, 4), Rational(1, 10), Rational(1, 64)}) {
            const Rational d = red_blue_default_delta(c, t);
            auto ok = [&](const Rational& delta) {
                const Rational x = 1 / delta;
                const Rational c2 = c * c, c3 = c2 * c;
                // the full chain, summed term by term
                const Rational lhs = c3 * x * x / 200 + c2 * x / 20 + c3 * x * x / 1000 + 2 * c2 * x / 100 + t * t;
                return lhs < c3 * x * x / 100;
            };
            EXPECT_TRUE(ok(d));
            EXPECT_FALSE(ok(d * 2));
        }
}

TEST(RedBlue, RandomInstancePostconditions) {
    std::size_t successes = 0;
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        const std::size_t n = 300;
        Rng rng(seed);
        std::vector<Edge> red, blue;
        std::set<std::pair<Vertex, Vertex>> red_set;
        for (Vertex i = 0; i < n; ++i)
            for (Vertex j = i + 1; j < n; ++j) {
                const double x = rng.uniform01();
                if (x < 0.001) {
                    red.push_back({i, j});
                    red_set.insert({i, j});
                } else if (x < 0.7) {
                    blue.push_back({i, j});
                }
            }
        const Rational c(1, 4);
        const std::size_t t = 3;
        try {
            const RedBlueResult r = red_blue_select(n, red, blue, c, t, seed);
            const auto& s = r.selected;
            ASSERT_GE(s.size(), t);
            std::set<std::pair<Vertex, Vertex>> blue_set(blue.begin(), blue.end());
            std::size_t eb = 0;
            for (std::size_t i = 0; i < s.size(); ++i)
                for (std::size_t j = i + 1; j < s.size(); ++j) {
                    const auto lo = static_cast<Vertex>(std::min(s[i], s[j]));
                    const auto hi = static_cast<Vertex>(std::max(s[i], s[j]));
                    const std::pair<Vertex, Vertex> key{lo, hi};
                    EXPECT_FALSE(red_set.count(key));
                    eb += blue_set.count(key);
                }
            EXPECT_GE(Rational(eb), c / 2 * s.size() * s.size());
            ++successes;
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::RetriesExhausted);
        }
    }
    EXPECT_GT(successes, 0u);
}

TEST(InducedCycle, Examples) {
    for (std::size_t k = 2; k <= 5; ++k) {
        const Graph c = named_graph("cycle(" + std::to_string(2 * k) + ")");
        const Bipartition b = alternating(c);
        const Witness w = find_induced_alternating_cycle(b, k, 2, CycleParams{k}, 1);
        ASSERT_TRUE(std::holds_alternative<InducedCycle>(w));
        EXPECT_EQ(std::get<InducedCycle>(w).cycle.size(), 2 * k);
        EXPECT_TRUE(validate(c, w, nullptr, &b.sides()));
    }

    const Bipartition pp3 = pp_incidence(3);
    const Witness w6 = find_induced_alternating_cycle(pp3, 3, 2, CycleParams{3}, 1);
    ASSERT_TRUE(std::holds_alternative<InducedCycle>(w6));
    EXPECT_TRUE(validate(pp3.graph(), w6, nullptr, &pp3.sides()));
    const auto& cyc = std::get<InducedCycle>(w6).cycle;
    EXPECT_TRUE(oracle::has_copy(pp3.graph().induced(cyc), named_graph("cycle(6)"), true));

    const Graph tree = named_graph("tree_from_pruefer([0,0,1,1,2,2])");
    const Witness none = find_induced_alternating_cycle(alternating(tree), 2, 2, CycleParams{2}, 1);
    EXPECT_FALSE(found(none));
}

TEST(InducedCycle, WrongLengthNotFound) {
    const Bipartition c8 = alternating(named_graph("cycle(8)"));
    EXPECT_FALSE(found(find_induced_alternating_cycle(c8, 3, 2, CycleParams{3}, 1)));
}

TEST(InducedCycle, PipelineWitnessesValidate) {
    std::vector<std::string> log;
    for (unsigned q : {3u, 4u}) {
        const Bipartition b = pp_incidence(q);
        for (std::size_t k : {3u}) {
            CycleParams p{k};
            p.search_budget = 10;  // force the constructive route
            const Witness w = find_induced_alternating_cycle(b, k, 2, p, q, &log);
            EXPECT_TRUE(validate(b.graph(), w, nullptr, &b.sides())) << q;
            if (const auto* c = std::get_if<InducedCycle>(&w)) EXPECT_EQ(c->cycle.size(), 2 * k);
        }
    }
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Bipartition b = random_bipartition(24, 0.3, seed + 7);
        CycleParams p{2};
        p.search_budget = 10;
        const Witness w = find_induced_alternating_cycle(b, 2, 3, p, seed, &log);
        EXPECT_TRUE(validate(b.graph(), w, nullptr, &b.sides()));
        if (const auto* bic = std::get_if<Biclique>(&w)) EXPECT_EQ(bic->left.size(), 3u);
    }
    EXPECT_FALSE(log.empty());
}

TEST(InducedCycle, DirectSearchAgreesWithBruteForce) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const Bipartition b = random_bipartition(9, 0.45, seed + 300);
        const Witness w = find_induced_alternating_cycle(b, 2, 2, CycleParams{2}, seed);
        // brute force: an alternating induced C4 is four vertices a1 b1 a2 b2
        bool expect = false;
        const Graph& g = b.graph();
        for (Vertex a1 = 0; a1 < 9 && !expect; ++a1)
            for (Vertex a2 = a1 + 1; a2 < 9 && !expect; ++a2)
                for (Vertex b1 = 0; b1 < 9 && !expect; ++b1)
                    for (Vertex b2 = b1 + 1; b2 < 9 && !expect; ++b2) {
                        if (b.side(a1) != Side::A || b.side(a2) != Side::A) continue;
                        if (b.side(b1) != Side::B || b.side(b2) != Side::B) continue;
                        expect = g.adjacent(a1, b1) && g.adjacent(b1, a2) && g.adjacent(a2, b2) &&
                                 g.adjacent(b2, a1) && !g.adjacent(a1, a2) && !g.adjacent(b1, b2);
                    }
        EXPECT_EQ(std::holds_alternative<InducedCycle>(w), expect) << seed;
        EXPECT_TRUE(validate(g, w, nullptr, &b.sides()));
    }
}

TEST(PathFraction, Examples) {
    const PathCount c6 = induced_path_fraction(alternating(named_graph("cycle(6)")), 3);
    EXPECT_GT(c6.total, 0u);
    EXPECT_EQ(c6.induced, c6.total);
    const PathCount k22 = induced_path_fraction(alternating(named_graph("cycle(4)")), 3);
    EXPECT_GT(k22.total, 0u);
    EXPECT_EQ(k22.induced, 0u);
    const PathCount edge = induced_path_fraction(alternating(named_graph("complete(2)")), 1);
    EXPECT_EQ(edge.total, 2u);
    EXPECT_EQ(edge.induced, 2u);
}

TEST(PathFraction, MatchesEnumeration) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Bipartition b = random_bipartition(8, 0.5, seed + 77);
        for (std::size_t k = 1; k <= 4; ++k) {
            const PathCount got = induced_path_fraction(b, k);
            const PathCount want = naive_fraction(b, k);
            EXPECT_EQ(got.total, want.total);
            EXPECT_EQ(got.induced, want.induced);
        }
    }
}

TEST(InducedCube, Examples) {
    const Graph q3 = named_graph("hypercube(3)");
    const Witness w3 = find_induced_cube(q3, 2, CycleParams{3}, 1);
    ASSERT_TRUE(found(w3));
    EXPECT_TRUE(validate(q3, w3, &q3));
    // every automorphism-free labelling check: the map is a bijection onto Q3
    auto map = std::get<InducedCopy>(w3).map;
    std::sort(map.begin(), map.end());
    EXPECT_EQ(map, (std::vector<Vertex>{0, 1, 2, 3, 4, 5, 6, 7}));

    const Graph q4 = named_graph("hypercube(4)");
    const Witness w4 = find_induced_cube(q4, 2, CycleParams{3}, 1);
    ASSERT_TRUE(found(w4));
    EXPECT_TRUE(validate(q4, w4, &q3));

    EXPECT_FALSE(found(find_induced_cube(named_graph("complete(5)"), 2, CycleParams{3}, 1)));
}

TEST(InducedCube, AgreesWithExactSearch) {
    const Graph q3 = named_graph("hypercube(3)");
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        Graph g = named_graph("hypercube(4)");
        Rng rng(seed);
        for (auto [u, v] : g.edges())
            if (rng.uniform01() < 0.15) g.remove_edge(u, v);
        const Witness w = find_induced_cube(g, 2, CycleParams{3}, seed);
        EXPECT_EQ(found(w), found(find_induced_copy(g, q3))) << seed;
        EXPECT_TRUE(validate(g, w, &q3));
    }
}

TEST(AlmostRegular, RegularHostReturnsItself) {
    const Graph k9 = named_graph("complete(9)");  // 36 >= 9^1.5 = 27
    const AlmostRegularResult r = almost_regular_subgraph(k9, CycleParams{2});
    EXPECT_TRUE(r.precondition_held);
    EXPECT_EQ(r.graph, k9);
    EXPECT_TRUE(r.almost_regular);
}

TEST(AlmostRegular, Star) {
    const Graph star = named_graph("complete_bipartite(1,50)");
    EXPECT_THROW(almost_regular_subgraph(star, CycleParams{2}), Error);
    // alpha = 1: m / (m+1)^2 peaks at m = 1, so a single edge survives
    CycleParams p{2};
    p.overrides = true;
    p.alpha = Rational(1);
    const AlmostRegularResult r = almost_regular_subgraph(star, p);
    EXPECT_FALSE(r.precondition_held);
    EXPECT_EQ(r.graph, named_graph("complete(2)"));
    EXPECT_EQ(r.graph, star.induced(r.vertices));
    // alpha = 1/2: m / (m+1)^(3/2) peaks at m = 2, leaving a path on 3 vertices
    p.alpha = Rational(1, 2);
    const AlmostRegularResult half = almost_regular_subgraph(star, p);
    EXPECT_EQ(half.graph.order(), 3u);
    EXPECT_EQ(half.graph.edge_count(), 2u);
    EXPECT_TRUE(half.almost_regular);
}

TEST(AlmostRegular, PpIncidence) {
    CycleParams p{3};
    p.alpha = Rational(1, 3);
    p.C = Rational(1, 100);
    p.overrides = true;
    const Graph g = pp_incidence(4).graph();
    const AlmostRegularResult r = almost_regular_subgraph(g, p);
    ASSERT_GT(r.graph.order(), 0u);
    EXPECT_EQ(r.graph, g.induced(r.vertices));
    EXPECT_LE(Rational(r.graph.max_degree()), r.K * r.graph.min_degree());
    EXPECT_TRUE(r.almost_regular);
    EXPECT_EQ(r.K, Rational(1 << 14));
}

TEST(AlmostRegular, PostconditionFlagsAreHonest) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const Graph g = oracle::random_graph(10 + seed % 20, 0.5, seed + 4000);
        CycleParams p{2};
        p.overrides = true;
        p.C = Rational(1, 4);
        const AlmostRegularResult r = almost_regular_subgraph(g, p);
        EXPECT_EQ(r.graph, g.induced(r.vertices));
        EXPECT_EQ(r.exact_maximal, g.order() <= 14);
        if (r.graph.order() == 0) continue;
        EXPECT_EQ(r.almost_regular, Rational(r.graph.max_degree()) <= r.K * r.graph.min_degree());
        // dense: e >= (C/4) m^(3/2)  <=>  (4e/C)^2 >= m^3
        const Rational lhs = 4 * Rational(r.graph.edge_count()) / p.C;
        const bool dense = lhs * lhs >= Rational(pow(BigInt(r.graph.order()), 3));
        EXPECT_EQ(r.dense, dense);
    }
}

TEST(CycleParams, Defaults) {
    CycleParams p{3};
    EXPECT_EQ(p.alpha_value(), Rational(1, 3));
    EXPECT_EQ(p.k_value(), Rational(1 << 14));  // 2^(9+5)
    EXPECT_EQ(p.k0_value(), BigInt(1 << 11));
    p.alpha = Rational(2, 5);  // ceil(7.5) = 8
    EXPECT_EQ(p.k_value(), Rational(1 << 13));
    p.alpha = Rational(0);
    EXPECT_THROW(p.k_value(), Error);
}
