#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "indturan/graph.hpp"
#include "indturan/numeric.hpp"

namespace indturan {

constexpr std::size_t kMaxSolverOrder = 9;
constexpr std::size_t kMaxPatternOrder = 8;

struct ConstraintSet {
    std::vector<Graph> induced_forbidden;
    std::vector<Graph> subgraph_forbidden;  // K_{s,s} goes here

    // No induced H and no K_{s,s} subgraph.
    static ConstraintSet induced_star(const Graph& h, std::size_t s);
    // Classical ex(n, F) for every F in the list.
    static ConstraintSet subgraph(std::vector<Graph> forbidden);

    bool satisfied_by(const Graph& g) const;
};

struct SearchStats {
    std::vector<std::size_t> level_sizes;  // admissible graphs per order, up to isomorphism
};

struct ExtremalResult {
    std::size_t n = 0;
    // -1 when no graph on n vertices satisfies the constraints.
    long long max_edges = -1;
    std::vector<std::string> witness_graphs;  // graph6, one per isomorphism class
    std::size_t count_extremal = 0;
    SearchStats stats;
};

// Exact maximum by vertex-at-a-time augmentation with isomorph rejection
// through canonical codes. Only copies through the new vertex are searched
// for, and the last level is pruned against an atomic best bound. Throws
// TooLarge for n > 9 or a pattern above 8 vertices.
ExtremalResult extremal_search(std::size_t n, const ConstraintSet& constraints, unsigned threads = 1);

// Canonical codes of every admissible graph on n vertices.
std::vector<std::uint64_t> enumerate_admissible(std::size_t n, const ConstraintSet& constraints, unsigned threads = 1);

struct RatioRow {
    std::size_t n = 0;
    std::size_t s = 0;
    long long ex_star = 0;       // ex*(n, H, s)
    long long ex = 0;            // ex(n, H)
    std::optional<Rational> ratio;  // ex_star / ex, absent when ex = 0
    long long ex_h_kss = 0;      // ex(n, {H, K_{s,s}})
    long long ex_kss = 0;        // ex(n, K_{s,s})
};

std::vector<RatioRow> ratio_table(const Graph& h, const std::vector<std::size_t>& s_range,
                                  const std::vector<std::size_t>& n_range, unsigned threads = 1);
std::string ratio_table_csv(const std::vector<RatioRow>& rows);

}  // namespace indturan
