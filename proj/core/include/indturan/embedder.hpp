#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "indturan/graph.hpp"
#include "indturan/numeric.hpp"
#include "indturan/witness.hpp"

namespace indturan {

// Parameters of the bounded-degree pipeline. defaults() gives
// ell = (C_H s)^(4h+10), m = (C_H s)^(2h), theta = (4bs)^b and t = k; any
// field may be replaced afterwards, in which case overrides should be set so
// that hypotheses are reported instead of enforced.
struct EmbedParams {
    std::size_t s = 2;
    std::size_t k = 1;
    std::size_t t = 1;  // DRC exponent
    BigInt m;
    BigInt ell;
    BigInt theta;
    bool overrides = false;
    std::size_t independent_cap = 200000;
    std::size_t clean_retries = 16;

    static EmbedParams defaults(const PatternSpec& h, std::size_t s);
};

struct EmbedStep {
    std::size_t index = 0;  // position of the embedded B-vertex
    Vertex chosen = 0;
    bool strict = true;     // chosen by |U_j \ N(v)| >= |U_j| / 2s
    std::vector<std::size_t> before;  // |U_j| for the later B-vertices
    std::vector<std::size_t> after;
};

struct EmbedTrace {
    std::vector<std::string> log;
    std::vector<Vertex> drc_set;
    std::size_t drc_attempts = 0;
    std::size_t spread_uniformity = 0;
    std::size_t spread_edges = 0;
    std::size_t bad_edges = 0;
    std::vector<Vertex> independent_set;
    std::vector<std::size_t> initial_candidates;
    std::vector<EmbedStep> steps;
};

struct DrcOptions {
    std::size_t retries = 16;
    // Skip the inequality gate and run the sampling anyway.
    bool best_effort = false;
};

struct DrcResult {
    VertexSet x;
    std::size_t attempts = 0;
    bool inequality_held = false;
};

// d^t / n^(t-1) - C(n,k) (m/n)^t >= ell, exactly.
bool drc_inequality(const Graph& g, std::size_t k, std::size_t t, const BigInt& m, const BigInt& ell);

// Samples t vertices with repetition, takes their common neighbourhood and
// deletes the last vertex of every k-subset with fewer than m common
// neighbours. Throws InequalityFails or RetriesExhausted.
DrcResult dependent_random_choice(const Graph& g, std::size_t k, std::size_t t, std::size_t m, std::size_t ell,
                                  std::uint64_t seed, const DrcOptions& options = {});

// True when (v_1..v_i ; v_{i+1}..v_{l-1} ; v_l) is a bad tuple: with
// S = N(T) minus the neighbourhoods of the middle vertices, |S| >= 2s and
// |S \ N(w)| < |S| / 2s.
bool is_bad_tuple(const Graph& g, std::span<const Vertex> core, std::span<const Vertex> middle, Vertex last,
                  std::size_t s);

// Rich independent a-set inside X, found through a superspread family of
// independent sets from which every edge containing a bad tuple is removed.
// Throws NoIndependentSets, AllEdgesBad, PreconditionFailed.
Witness find_rich_independent_set(const Graph& g, const VertexSet& x, std::size_t a, const EmbedParams& p,
                                  std::uint64_t seed, EmbedTrace* trace = nullptr);

struct GreedyOptions {
    // Skip the richness gate and fall back to the best available candidate
    // when the strict step rule has no solution.
    bool relaxed = false;
    std::optional<std::size_t> theta;  // default (4bs)^b
};

// Embeds A onto I (I[i] is the image of side_a[i]) and then the B-vertices
// one by one, keeping candidate sets large. Throws NoViableCandidate or
// PreconditionFailed.
Witness greedy_induced_embed(const Graph& g, std::span<const Vertex> i, const PatternSpec& h, std::size_t s,
                             const GreedyOptions& options = {}, EmbedTrace* trace = nullptr);

enum class PipelineMode { I, II };

struct PipelineResult {
    Witness witness;
    EmbedTrace trace;
};

// K_{s,s} gate, then DRC, rich independent set and greedy embedding. Stage
// failures come back as NotFound with the stage name.
PipelineResult bounded_degree_pipeline(const Graph& g, const PatternSpec& h, std::size_t s, PipelineMode mode,
                                       std::uint64_t seed, const std::optional<EmbedParams>& params = std::nullopt);

// Peels vertices of degree < 2t and grows T leaf by leaf. Throws TooSparse,
// or PreconditionFailed when G contains C4 (checked unless assumed).
Witness embed_tree_c4free(const Graph& g, const Graph& tree, bool assume_c4free = false);

// s = max(1, floor(n^(1/(8h+20)) / h^2))
std::size_t eh_biclique_size(std::size_t n, std::size_t h);

// Biclique K_{s,s} or an independent set from greedy max-degree deletion.
// Throws PatternPresent when G has an induced copy of H (checked unless
// assumed).
Witness eh_witness(const Graph& g, const PatternSpec& h, bool assume_free = false);

}  // namespace indturan
