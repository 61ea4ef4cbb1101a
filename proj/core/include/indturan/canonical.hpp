#pragma once

#include <cstdint>
#include <vector>

#include "indturan/graph.hpp"

namespace indturan {

constexpr std::size_t kMaxCanonicalOrder = 11;

// Upper triangle in column order (0,1),(0,2),(1,2),(0,3),... with the first
// pair as the most significant bit.
std::uint64_t adjacency_code(const Graph& g);
Graph graph_from_code(std::size_t n, std::uint64_t code);

struct CanonicalForm {
    std::uint64_t code = 0;
    std::vector<Vertex> order;  // order[i] is the input vertex placed at i
};

// Minimum adjacency_code over all vertex orders. Branches only on the
// candidates with the smallest next column and on one vertex per twin class.
// Throws TooLarge for n > kMaxCanonicalOrder.
CanonicalForm canonical_form(const Graph& g);
std::uint64_t canonical_code(const Graph& g);

// Reference implementation over all n! orders; used as a cross-check.
std::uint64_t canonical_code_bruteforce(const Graph& g);

}  // namespace indturan
