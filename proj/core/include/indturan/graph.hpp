#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "indturan/numeric.hpp"
#include "indturan/vertex_set.hpp"

namespace indturan {

using Edge = std::pair<Vertex, Vertex>;

// Undirected simple graph stored as one bit row per vertex. Rows are kept
// symmetric and irreflexive by every mutator. Values are built once and then
// shared read-only.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t order);

    static Graph from_edges(std::size_t order, std::span<const Edge> edges);

    std::size_t order() const { return rows_.size(); }

    bool adjacent(Vertex u, Vertex v) const { return rows_[u].test(v); }
    const VertexSet& neighbors(Vertex v) const { return rows_[v]; }
    std::size_t degree(Vertex v) const { return rows_[v].count(); }

    void add_edge(Vertex u, Vertex v);
    void remove_edge(Vertex u, Vertex v);

    std::size_t edge_count() const;
    std::size_t max_degree() const;
    std::size_t min_degree() const;
    // d(G) = 2e(G)/n, exact; zero for the null graph.
    Rational average_degree() const;

    std::vector<Edge> edges() const;
    std::vector<std::size_t> degrees() const;

    // Subgraph induced on the listed vertices; vertex i of the result is
    // vertices[i].
    Graph induced(std::span<const Vertex> vertices) const;
    Graph induced(const VertexSet& vertices) const;

    VertexSet all_vertices() const { return VertexSet::full(order()); }

    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> labels);

    bool operator==(const Graph& other) const { return rows_ == other.rows_; }

private:
    std::vector<VertexSet> rows_;
    std::vector<std::string> labels_;
};

enum class Side : unsigned char { A = 0, B = 1 };

// Two-colouring of a graph's vertices together with the crossing-edge
// subgraph G1.
class Bipartition {
public:
    Bipartition() = default;
    Bipartition(Graph graph, std::vector<Side> sides);

    const Graph& graph() const { return graph_; }
    const Graph& crossing() const { return crossing_; }
    const std::vector<Side>& sides() const { return sides_; }
    Side side(Vertex v) const { return sides_[v]; }
    const VertexSet& side_set(Side s) const { return s == Side::A ? side_a_ : side_b_; }

private:
    Graph graph_;
    std::vector<Side> sides_;
    Graph crossing_;
    VertexSet side_a_;
    VertexSet side_b_;
};

// Proper 2-colouring by BFS from the lowest unvisited vertex (which gets side
// A); nullopt when the graph has an odd cycle.
std::optional<std::vector<Side>> two_colouring(const Graph& g);

// Deterministic local-search max cut: starts from the BFS colouring (or
// alternating indices) and flips the lowest-index improving vertex until no
// flip increases the cut. The result has at least e(G)/2 crossing edges.
std::vector<Side> local_max_cut(const Graph& g);

// Bipartite pattern H = (A, B; E) with every B-vertex of degree at most k.
struct PatternSpec {
    Graph pattern;
    std::vector<Vertex> side_a;
    std::vector<Vertex> side_b;
    std::size_t k = 0;

    std::size_t a() const { return side_a.size(); }
    std::size_t b() const { return side_b.size(); }
    std::size_t h() const { return pattern.order(); }
    // C_H = 4|A||B|.
    std::size_t c_h() const { return 4 * a() * b(); }

    // Uses the BFS two-colouring; throws BadSpec if H is not bipartite.
    static PatternSpec from_graph(Graph h);
    // Explicit A side, everything else is B; throws BadSpec unless every edge
    // crosses.
    static PatternSpec with_side_a(Graph h, std::span<const Vertex> side_a);
};

}  // namespace indturan
