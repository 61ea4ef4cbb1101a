#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "indturan/graph.hpp"

namespace indturan {

// phi: V(H) -> V(G); map[h] is the image of pattern vertex h.
struct InducedCopy {
    std::vector<Vertex> map;
};

// Two disjoint s-sets, every cross pair adjacent.
struct Biclique {
    std::vector<Vertex> left;
    std::vector<Vertex> right;
};

struct IndependentSet {
    std::vector<Vertex> vertices;
};

struct TraceCount {
    std::vector<Vertex> trace;
    std::size_t count = 0;
};

// A rich set S: every trace T of S with |T| <= k is realised by at least
// theta outside vertices. traces lists every such T with its count.
struct RichSet {
    std::vector<Vertex> vertices;
    std::size_t k = 0;
    std::size_t theta = 0;
    std::vector<TraceCount> traces;
};

// Ordered cycle v0 v1 ... v_{m-1}; consecutive (cyclically) pairs adjacent,
// all other pairs non-adjacent.
struct InducedCycle {
    std::vector<Vertex> cycle;
};

struct NotFound {
    std::string stage;
    std::string reason;
};

using Witness = std::variant<NotFound, InducedCopy, Biclique, IndependentSet, RichSet, InducedCycle>;

std::string_view kind_name(const Witness& w);
bool found(const Witness& w);

struct Validation {
    bool ok = true;
    std::string message;
    explicit operator bool() const { return ok; }
};

// Independent re-check of a witness against its host graph, using only
// Graph::order() and Graph::adjacent(). InducedCopy requires the pattern;
// InducedCycle additionally checks alternation when sides are supplied.
// NotFound always validates (it asserts nothing).
Validation validate(const Graph& host, const Witness& w, const Graph* pattern = nullptr,
                    const std::vector<Side>* sides = nullptr);

}  // namespace indturan
