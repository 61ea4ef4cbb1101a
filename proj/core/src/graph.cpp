#include "indturan/graph.hpp"

#include <algorithm>
#include <deque>

#include "indturan/error.hpp"

namespace indturan {

Graph::Graph(std::size_t order) : rows_(order, VertexSet(order)) {}

Graph Graph::from_edges(std::size_t order, std::span<const Edge> edges) {
    Graph g(order);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::add_edge(Vertex u, Vertex v) {
    if (u >= order() || v >= order()) throw Error(ErrorCode::BadSpec, "edge endpoint out of range");
    if (u == v) throw Error(ErrorCode::BadSpec, "self-loop on vertex " + std::to_string(u));
    rows_[u].set(v);
    rows_[v].set(u);
}

void Graph::remove_edge(Vertex u, Vertex v) {
    rows_[u].reset(v);
    rows_[v].reset(u);
}

std::size_t Graph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& row : rows_) twice += row.count();
    return twice / 2;
}

std::size_t Graph::max_degree() const {
    std::size_t best = 0;
    for (const auto& row : rows_) best = std::max(best, row.count());
    return best;
}

std::size_t Graph::min_degree() const {
    if (rows_.empty()) return 0;
    std::size_t best = rows_.front().count();
    for (const auto& row : rows_) best = std::min(best, row.count());
    return best;
}

Rational Graph::average_degree() const {
    if (rows_.empty()) return Rational(0);
    return Rational(BigInt(2 * edge_count()), BigInt(order()));
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < order(); ++u) {
        for (Vertex v = rows_[u].next(u); v != VertexSet::npos; v = rows_[u].next(v)) out.emplace_back(u, v);
    }
    return out;
}

std::vector<std::size_t> Graph::degrees() const {
    std::vector<std::size_t> out(order());
    for (Vertex v = 0; v < order(); ++v) out[v] = degree(v);
    return out;
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
    Graph out(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (adjacent(vertices[i], vertices[j])) out.add_edge(i, j);
    if (!labels_.empty()) {
        std::vector<std::string> labels;
        labels.reserve(vertices.size());
        for (Vertex v : vertices) labels.push_back(labels_[v]);
        out.labels_ = std::move(labels);
    }
    return out;
}

Graph Graph::induced(const VertexSet& vertices) const {
    auto list = vertices.to_vector();
    return induced(std::span<const Vertex>(list));
}

void Graph::set_labels(std::vector<std::string> labels) {
    if (!labels.empty() && labels.size() != order())
        throw Error(ErrorCode::BadSpec, "label count does not match vertex count");
    labels_ = std::move(labels);
}

Bipartition::Bipartition(Graph graph, std::vector<Side> sides)
    : graph_(std::move(graph)), sides_(std::move(sides)), crossing_(graph_.order()),
      side_a_(graph_.order()), side_b_(graph_.order()) {
    if (sides_.size() != graph_.order()) throw Error(ErrorCode::BadSpec, "bipartition size mismatch");
    for (Vertex v = 0; v < graph_.order(); ++v) (sides_[v] == Side::A ? side_a_ : side_b_).set(v);
    for (auto [u, v] : graph_.edges())
        if (sides_[u] != sides_[v]) crossing_.add_edge(u, v);
}

std::optional<std::vector<Side>> two_colouring(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<int> colour(n, -1);
    for (Vertex root = 0; root < n; ++root) {
        if (colour[root] != -1) continue;
        colour[root] = 0;
        std::deque<Vertex> queue{root};
        while (!queue.empty()) {
            Vertex u = queue.front();
            queue.pop_front();
            bool clash = false;
            g.neighbors(u).for_each([&](Vertex v) {
                if (colour[v] == -1) {
                    colour[v] = 1 - colour[u];
                    queue.push_back(v);
                } else if (colour[v] == colour[u]) {
                    clash = true;
                }
            });
            if (clash) return std::nullopt;
        }
    }
    std::vector<Side> out(n);
    for (Vertex v = 0; v < n; ++v) out[v] = colour[v] == 0 ? Side::A : Side::B;
    return out;
}

std::vector<Side> local_max_cut(const Graph& g) {
    const std::size_t n = g.order();
    if (auto proper = two_colouring(g)) return *proper;
    std::vector<Side> sides(n);
    for (Vertex v = 0; v < n; ++v) sides[v] = (v % 2 == 0) ? Side::A : Side::B;
    VertexSet a(n);
    for (Vertex v = 0; v < n; ++v)
        if (sides[v] == Side::A) a.set(v);
    bool improved = true;
    while (improved) {
        improved = false;
        for (Vertex v = 0; v < n; ++v) {
            std::size_t same = sides[v] == Side::A ? g.neighbors(v).count_and(a) : g.neighbors(v).count_and_not(a);
            std::size_t other = g.degree(v) - same;
            if (same > other) {
                sides[v] = sides[v] == Side::A ? Side::B : Side::A;
                if (sides[v] == Side::A) a.set(v);
                else a.reset(v);
                improved = true;
                break;
            }
        }
    }
    return sides;
}

namespace {

PatternSpec finish_pattern(Graph h, std::vector<Vertex> side_a, std::vector<Vertex> side_b) {
    PatternSpec spec;
    spec.side_a = std::move(side_a);
    spec.side_b = std::move(side_b);
    for (Vertex b : spec.side_b) spec.k = std::max(spec.k, h.degree(b));
    spec.pattern = std::move(h);
    return spec;
}

}  // namespace

PatternSpec PatternSpec::from_graph(Graph h) {
    auto colouring = two_colouring(h);
    if (!colouring) throw Error(ErrorCode::BadSpec, "pattern is not bipartite");
    std::vector<Vertex> a, b;
    for (Vertex v = 0; v < h.order(); ++v) ((*colouring)[v] == Side::A ? a : b).push_back(v);
    return finish_pattern(std::move(h), std::move(a), std::move(b));
}

PatternSpec PatternSpec::with_side_a(Graph h, std::span<const Vertex> side_a) {
    VertexSet in_a(h.order());
    for (Vertex v : side_a) {
        if (v >= h.order()) throw Error(ErrorCode::BadSpec, "side A vertex out of range");
        in_a.set(v);
    }
    for (auto [u, v] : h.edges())
        if (in_a.test(u) == in_a.test(v)) throw Error(ErrorCode::BadSpec, "pattern edge inside one side");
    std::vector<Vertex> b;
    for (Vertex v = 0; v < h.order(); ++v)
        if (!in_a.test(v)) b.push_back(v);
    return finish_pattern(std::move(h), in_a.to_vector(), std::move(b));
}

}  // namespace indturan
