#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "indturan/graph.hpp"
#include "indturan/numeric.hpp"

namespace indturan {

// Vertex v*t + i of the blow-up belongs to the clique replacing base vertex v.
struct BlowupMap {
    Graph base;
    std::size_t t = 1;
    std::vector<Vertex> class_of;
};

std::pair<Graph, BlowupMap> blowup(const Graph& g0, std::size_t t);

// Point-line incidence graph of PG(2,q). Points are vertices 0..N-1 (side A),
// lines N..2N-1 (side B), N = q^2+q+1.
Bipartition pp_incidence(unsigned q);

// path(t), cycle(m), complete(n), complete_bipartite(s,t), hypercube(d),
// tree_from_pruefer(seq), empty(n). Throws BadSpec.
Graph named_graph(std::string_view spec);

// G(n,p); each pair is kept when a 64-bit draw falls below floor(p 2^64).
Graph random_graph(std::size_t n, const Rational& p, std::uint64_t seed);

struct DenseSample {
    Graph graph;             // the verified sample on N vertices
    std::size_t trials = 0;  // samples drawn, including the accepted one
    std::size_t min_edges = 0;
};

// N = ceil(s^(t/10)); p = 1 - s^(-1/2)
std::size_t dense_sample_order(std::size_t t, std::size_t s);

// Samples G(N, 1 - s^(-1/2)) until a sample has at least min_edges edges
// (default ceil(N^2/4)), no K_{s,s} and no independent set of size ceil(t/2).
// Throws TrialsExhausted, or PreconditionFailed for s < 2 or N > 5000.
DenseSample random_kss_free_dense(std::size_t t, std::size_t s, std::uint64_t seed, std::size_t trials,
                                  std::optional<std::size_t> min_edges = std::nullopt);

// n vertices made of disjoint copies of g; the last copy is truncated.
Graph disjoint_copies(const Graph& g, std::size_t n);

// Independent S = {0..a-1} plus theta private outside vertices for every
// T subset of S with |T| <= k, each adjacent to exactly T. Outside vertices
// are pairwise non-adjacent.
struct TraceGadget {
    Graph graph;
    std::vector<Vertex> s;
};
TraceGadget trace_gadget(std::size_t a, std::size_t k, std::size_t theta);

}  // namespace indturan
