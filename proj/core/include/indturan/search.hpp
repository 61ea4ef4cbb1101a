#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "indturan/graph.hpp"
#include "indturan/witness.hpp"

namespace indturan {

// Exact K_{s,s} search (disjoint sides). Candidate left vertices are tried in
// descending degree order with common-neighbourhood pruning.
Witness find_kss(const Graph& g, std::size_t s);
// Exact search restricted to copies that use vertex v.
Witness find_kss_through(const Graph& g, std::size_t s, Vertex v);

// Exact induced-subgraph isomorphism by backtracking with bitset filtering
// on neighbourhoods and non-neighbourhoods. Pattern vertices are matched in
// descending degree order, ties by index.
Witness find_induced_copy(const Graph& g, const Graph& h);
Witness find_induced_copy_through(const Graph& g, const Graph& h, Vertex v);

// Same search for (not necessarily induced) subgraph copies.
Witness find_subgraph_copy(const Graph& g, const Graph& h);
Witness find_subgraph_copy_through(const Graph& g, const Graph& h, Vertex v);

// {v not in S : S subset of N(v)}; the empty S gives V(G).
VertexSet common_neighborhood(const Graph& g, const VertexSet& s);
VertexSet common_neighborhood(const Graph& g, std::span<const Vertex> s);

// {v : |W \ N(v)| <= |W| / 2s}; throws WTooSmall when |W| < 2s.
VertexSet heavy_viewers(const Graph& g, const VertexSet& w, std::size_t s);

// Independent r-subsets of X in lexicographic order, at most cap of them.
std::vector<std::vector<Vertex>> enumerate_independent_sets(const Graph& g, const VertexSet& x,
                                                            std::size_t r, std::size_t cap);

// RichSet when every T subset of S with |T| <= k has at least theta outside
// vertices whose trace on S is exactly T; otherwise NotFound naming the first
// deficient trace.
Witness check_rich_set(const Graph& g, std::span<const Vertex> s, std::size_t k, std::size_t theta);

// Vertices left after repeatedly deleting a vertex of minimum degree while the
// minimum degree is below min_degree.
VertexSet peel_below(const Graph& g, std::size_t min_degree);

}  // namespace indturan
