#pragma once

// Brute-force reference implementations. Everything here touches graphs only
// through order() and adjacent(), so it shares no search code with the
// library.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "indturan/graph.hpp"
#include "indturan/numeric.hpp"
#include "indturan/rng.hpp"

namespace oracle {

using indturan::Graph;
using indturan::Vertex;

inline Graph from_mask(std::size_t n, std::uint64_t mask) {
    Graph g(n);
    std::size_t bit = 0;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j, ++bit)
            if ((mask >> bit) & 1U) g.add_edge(i, j);
    return g;
}

inline std::size_t edge_count(const Graph& g) {
    std::size_t e = 0;
    for (Vertex i = 0; i < g.order(); ++i)
        for (Vertex j = i + 1; j < g.order(); ++j) e += g.adjacent(i, j);
    return e;
}

inline void for_each_subset(std::size_t n, std::size_t r, const std::function<void(const std::vector<Vertex>&)>& f) {
    std::vector<Vertex> cur;
    std::function<void(Vertex)> rec = [&](Vertex start) {
        if (cur.size() == r) {
            f(cur);
            return;
        }
        for (Vertex v = start; v < n; ++v) {
            cur.push_back(v);
            rec(v + 1);
            cur.pop_back();
        }
    };
    rec(0);
}

inline bool has_kss(const Graph& g, std::size_t s) {
    const std::size_t n = g.order();
    bool hit = false;
    for_each_subset(n, s, [&](const std::vector<Vertex>& left) {
        if (hit) return;
        std::vector<Vertex> common;
        for (Vertex v = 0; v < n; ++v) {
            if (std::find(left.begin(), left.end(), v) != left.end()) continue;
            bool all = true;
            for (Vertex u : left) all = all && g.adjacent(u, v);
            if (all) common.push_back(v);
        }
        if (common.size() >= s) hit = true;
    });
    return hit;
}

// Every injection V(H) -> V(G).
inline bool has_copy(const Graph& g, const Graph& h, bool induced) {
    const std::size_t n = g.order(), k = h.order();
    if (k > n) return false;
    std::vector<Vertex> map;
    std::vector<bool> used(n, false);
    std::function<bool()> rec = [&]() -> bool {
        const std::size_t x = map.size();
        if (x == k) {
            for (Vertex a = 0; a < k; ++a)
                for (Vertex b = a + 1; b < k; ++b) {
                    const bool ge = g.adjacent(map[a], map[b]);
                    const bool he = h.adjacent(a, b);
                    if (he && !ge) return false;
                    if (induced && ge && !he) return false;
                }
            return true;
        }
        for (Vertex v = 0; v < n; ++v) {
            if (used[v]) continue;
            used[v] = true;
            map.push_back(v);
            const bool ok = rec();
            map.pop_back();
            used[v] = false;
            if (ok) return true;
        }
        return false;
    };
    return rec();
}

// Number of maps C_2k -> G preserving adjacency.
inline unsigned long long hom_cycles(const Graph& g, std::size_t k) {
    const std::size_t n = g.order(), len = 2 * k;
    std::vector<Vertex> w(len);
    unsigned long long count = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == len) {
            if (g.adjacent(w[len - 1], w[0])) ++count;
            return;
        }
        for (Vertex v = 0; v < n; ++v) {
            if (i > 0 && !g.adjacent(w[i - 1], v)) continue;
            w[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
    return count;
}

inline std::uint64_t min_code(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<Vertex> p(n);
    std::iota(p.begin(), p.end(), Vertex{0});
    std::uint64_t best = ~std::uint64_t{0};
    do {
        std::uint64_t code = 0;
        for (Vertex i = 0; i < n; ++i)
            for (Vertex j = i + 1; j < n; ++j) code = (code << 1) | (g.adjacent(p[i], p[j]) ? 1U : 0U);
        best = std::min(best, code);
    } while (std::next_permutation(p.begin(), p.end()));
    return best;
}

// One representative per isomorphism class, by permutation-minimal codes
// over all labelled graphs.
inline std::vector<Graph> all_graphs_up_to_iso(std::size_t n) {
    const std::size_t pairs = n * (n - (n > 0)) / 2;
    std::set<std::uint64_t> seen;
    std::vector<Graph> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
        Graph g = from_mask(n, mask);
        if (seen.insert(min_code(g)).second) out.push_back(std::move(g));
    }
    return out;
}

// Maximum edges over every labelled graph on n vertices with no induced
// copy of any graph in induced and no copy of any graph in sub; -1 if none.
inline long long naive_extremal(std::size_t n, const std::vector<Graph>& induced, const std::vector<Graph>& sub) {
    const std::size_t pairs = n * (n - (n > 0)) / 2;
    long long best = -1;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
        const long long e = std::popcount(mask);
        if (e <= best) continue;
        const Graph g = from_mask(n, mask);
        bool ok = true;
        for (const Graph& h : induced) ok = ok && !has_copy(g, h, true);
        for (const Graph& h : sub) ok = ok && !has_copy(g, h, false);
        if (ok) best = e;
    }
    return best;
}

inline Graph complete_bipartite(std::size_t a, std::size_t b) {
    Graph g(a + b);
    for (Vertex i = 0; i < a; ++i)
        for (Vertex j = 0; j < b; ++j) g.add_edge(i, a + j);
    return g;
}

inline Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
    indturan::Rng rng(seed, 0xabcdef);
    Graph g(n);
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            if (rng.uniform01() < p) g.add_edge(i, j);
    return g;
}

}  // namespace oracle
