#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "indturan/numeric.hpp"
#include "indturan/vertex_set.hpp"

namespace indturan {

using HyperEdge = std::vector<Vertex>;

// t-uniform set system on ground set [0, n). Edges are stored sorted and
// deduplicated. When parts are given, every edge meets each part at most once.
class UniformHypergraph {
public:
    UniformHypergraph() = default;
    UniformHypergraph(std::size_t n, std::size_t t, std::vector<HyperEdge> edges,
                      std::optional<std::vector<std::size_t>> parts = std::nullopt);

    std::size_t ground_size() const { return n_; }
    std::size_t uniformity() const { return t_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<HyperEdge>& edges() const { return edges_; }
    const HyperEdge& edge(std::size_t i) const { return edges_[i]; }

    bool partite() const { return parts_.has_value(); }
    const std::vector<std::size_t>& parts() const { return *parts_; }
    std::size_t part_count() const;

    // Edges containing v, as a bit set over edge indices.
    const VertexSet& incidence(Vertex v) const { return incidence_[v]; }

    bool operator==(const UniformHypergraph& other) const {
        return n_ == other.n_ && t_ == other.t_ && edges_ == other.edges_ && parts_ == other.parts_;
    }

private:
    std::size_t n_ = 0;
    std::size_t t_ = 0;
    std::vector<HyperEdge> edges_;
    std::optional<std::vector<std::size_t>> parts_;
    std::vector<VertexSet> incidence_;
};

// Whether the set S in the heaviness test may be empty. With S empty the
// test reads deg({v}) >= delta * e(H).
enum class EmptyCore { Allowed, Excluded };

struct SpreadParams {
    Rational epsilon;
    Rational delta;
    std::size_t a = 1;
    std::size_t r = 1;
    // When false the edge-count hypothesis of the cleaning step is reported
    // but not enforced.
    bool enforce_hypothesis = true;
    EmptyCore empty_core = EmptyCore::Allowed;

    // C_r = r^r * 2^(r^2)
    BigInt c_r() const;
    // e(H) >= C_r (eps delta)^-r n^(a-1)
    BigInt edge_threshold(std::size_t n) const;

    // r = 2a, eps = (2a)^-2, delta = (2a)^(-2(a+1)) / s.
    static SpreadParams for_independent_sets(std::size_t a, std::size_t s);
};

// deg(S) = number of edges containing S; deg(empty) = e(H).
std::size_t set_degree(const UniformHypergraph& h, std::span<const Vertex> s);

struct HeavyWitness {
    std::size_t edge = 0;
    std::vector<Vertex> core;  // S
    Vertex extra = 0;          // v
};

struct HeavyReport {
    std::size_t edge_count = 0;
    std::vector<HeavyWitness> heavy;  // ordered by edge index
    bool superspread(const Rational& epsilon) const;
};

// Flags every delta-heavy edge. S ranges over proper subsets of e by
// increasing size (lexicographic within a size); the first (S, v) found is
// recorded.
HeavyReport heavy_edges(const UniformHypergraph& h, const Rational& delta,
                        EmptyCore empty_core = EmptyCore::Allowed, unsigned threads = 1);

// Edges {e ∩ V_I}, deduplicated; I holds 0-based part indices. Throws
// NotPartite unless every edge meets every part of I exactly once.
UniformHypergraph restrict(const UniformHypergraph& h, std::span<const std::size_t> parts);

struct CleanResult {
    UniformHypergraph hypergraph;
    std::vector<std::size_t> partition;     // part of each ground vertex
    std::vector<std::size_t> dropped_parts; // in removal order
    std::size_t rainbow_edges = 0;          // edges kept by the partition
    bool hypothesis_held = true;
};

// Density-increment cleaning to an (eps, delta)-superspread family of
// uniformity in [a, r]. Returns H unchanged when it is already superspread.
CleanResult clean_to_superspread(const UniformHypergraph& h, const SpreadParams& p, std::uint64_t seed,
                                 unsigned threads = 1);

// A family of ordered ell-tuples of distinct ground vertices given by a
// membership predicate, with a claimed bound on the number of completions of
// any (ell-1)-prefix.
struct BadTupleFamily {
    std::size_t ell = 1;
    std::function<bool(std::span<const Vertex>)> contains;
    std::size_t s_bound = 0;
};

// Exhaustive check of the completion bound over all ordered (ell-1)-tuples
// of distinct vertices in [0, n).
bool verify_extension_bound(const BadTupleFamily& b, std::size_t n);

// Edges containing (in some order) at least one tuple of the family.
std::size_t count_bad_edges(const UniformHypergraph& h, const BadTupleFamily& b, unsigned threads = 1);

}  // namespace indturan
