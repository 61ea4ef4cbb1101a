#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "indturan/graph.hpp"
#include "indturan/numeric.hpp"
#include "indturan/witness.hpp"

namespace indturan {

struct CycleParams {
    std::size_t k = 2;
    std::optional<Rational> alpha;  // default 1/k
    std::optional<Rational> K;      // default 2^(ceil(3/alpha)+5)
    Rational C = 1;                 // density constant
    std::size_t s = 2;
    bool overrides = false;
    // Minimum number of selected paths; the asymptotic value is (64k)^(3s).
    std::optional<std::size_t> selection_size;
    std::size_t search_budget = 50'000'000;  // DFS nodes for direct searches
    std::size_t pair_budget = 100'000'000;   // path-pair comparisons in the pipeline

    Rational alpha_value() const;
    Rational k_value() const;
    // K0 = 2^(ceil(3/alpha)+2)
    BigInt k0_value() const;
};

// Closed walks of length 2k: sum over (v,u) of ((A^k)_{vu})^2. Throws Overflow.
Count hom_cycle_count(const Graph& g, std::size_t k);

struct CycleSplit {
    Count nondegenerate = 0;
    Count degenerate = 0;
};

// Exhaustive count of closed 2k-walks with 2k distinct vertices; the rest of
// hom_cycle_count is degenerate. Throws TooLarge when n * Delta^(2k-1)
// exceeds cost_limit.
CycleSplit nondegenerate_cycle_count(const Graph& g, std::size_t k, std::uint64_t cost_limit = 2'000'000'000);

// hom(C_2k, G) >= d(G)^(2k), exactly.
bool sidorenko_holds(const Graph& g, std::size_t k, Count hom);
// degenerate <= 32 k^(3/2) Delta^(1/2) n^(1/2k) hom^(1-1/2k), compared after
// raising both sides to the power 2k.
bool janzer_bound_holds(const Graph& g, std::size_t k, Count degenerate, Count hom);

struct AlmostRegularResult {
    Graph graph;                  // induced on vertices
    std::vector<Vertex> vertices; // indices into the input graph
    bool precondition_held = false;
    bool exact_maximal = false;   // subset scan rather than peeling
    bool almost_regular = false;  // Delta <= K delta
    bool dense = false;           // e >= (C/4) m^(1+alpha)
    Rational K;
};

// alpha-maximal induced subgraph (exact for n <= 14, min-degree peeling
// otherwise), minus the vertices of degree >= K0 d, then repeated removal of
// vertices of degree <= d/4. Throws PreconditionFailed when e(G) < C n^(1+alpha)
// unless overrides is set.
AlmostRegularResult almost_regular_subgraph(const Graph& g, const CycleParams& p);

struct PathStats {
    Vertex u = 0;
    Vertex v = 0;
    std::uint64_t P = 0;
    std::uint64_t A = 0;
    std::uint64_t B = 0;
    std::vector<std::vector<Vertex>> paths;  // filled when materialised
};

// Alternating u-v paths with k edges over crossing edges. A counts ordered
// pairs sharing an internal vertex, self-pairs included; B counts ordered
// pairs of distinct paths joined by an edge of the whole graph between
// their interiors.
PathStats alternating_path_stats(const Bipartition& b, Vertex u, Vertex v, std::size_t k, bool materialize,
                                 std::uint64_t pair_budget = 100'000'000);

struct RedBlueResult {
    std::vector<std::size_t> selected;
    std::size_t attempts = 0;
    Rational delta;
    Rational p;
};

// Largest power of 1/2 with c^3 x^2 (4/1000) - c^2 x (7/100) - t^2 > 0 for
// x = 1/delta.
Rational red_blue_default_delta(const Rational& c, std::size_t t);

// Samples items with probability c/(10 n delta), accepts when
// e_B(S) > (c/2)|S|^2 + |S| e_R(S) + t^2 and then drops the larger endpoint
// of each red edge. Throws PreconditionFailed or RetriesExhausted.
RedBlueResult red_blue_select(std::size_t n, const std::vector<Edge>& red, const std::vector<Edge>& blue,
                              const Rational& c, std::size_t t, std::uint64_t seed, std::size_t retries = 64,
                              std::optional<Rational> delta = std::nullopt);

// Induced cycle v0..v_{2k-1} with v0 in A, alternating sides. Direct exact
// search first; when that is over budget, the almost-regular / path-pair
// pipeline. Throws CostGuard when neither fits the budgets.
Witness find_induced_alternating_cycle(const Bipartition& b, std::size_t k, std::size_t s, const CycleParams& p,
                                       std::uint64_t seed, std::vector<std::string>* log = nullptr);

struct PathCount {
    std::uint64_t induced = 0;
    std::uint64_t total = 0;
};

// Ordered alternating paths with k edges (both directions counted) and how
// many of them are induced in the whole graph. Throws CostGuard.
PathCount induced_path_fraction(const Bipartition& b, std::size_t k, std::uint64_t cost_limit = 2'000'000'000);

// Induced copy of hypercube(3); map[x] is the image of cube vertex x.
Witness find_induced_cube(const Graph& g, std::size_t s, const CycleParams& p, std::uint64_t seed,
                          std::vector<std::string>* log = nullptr);

}  // namespace indturan
