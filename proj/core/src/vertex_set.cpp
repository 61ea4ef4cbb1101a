#include "indturan/vertex_set.hpp"

#include <cassert>

namespace indturan {

namespace {
std::size_t word_count(std::size_t universe) { return (universe + 63) / 64; }
}  // namespace

VertexSet::VertexSet(std::size_t universe) : universe_(universe), words_(word_count(universe), 0) {}

VertexSet VertexSet::full(std::size_t universe) {
    VertexSet s(universe);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    if (universe % 64 != 0 && !s.words_.empty()) s.words_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
    return s;
}

VertexSet VertexSet::of(std::size_t universe, std::span<const Vertex> members) {
    VertexSet s(universe);
    for (Vertex v : members) s.set(v);
    return s;
}

void VertexSet::clear() {
    for (auto& w : words_) w = 0;
}

std::size_t VertexSet::count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

bool VertexSet::empty() const {
    for (auto w : words_)
        if (w != 0) return false;
    return true;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
    assert(universe_ == other.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
    assert(universe_ == other.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
    assert(universe_ == other.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
}

VertexSet VertexSet::complement() const {
    return full(universe_) - *this;
}

bool VertexSet::intersects(const VertexSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if ((words_[i] & other.words_[i]) != 0) return true;
    return false;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if ((words_[i] & ~other.words_[i]) != 0) return false;
    return true;
}

std::size_t VertexSet::count_and(const VertexSet& other) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & other.words_[i]);
    return c;
}

std::size_t VertexSet::count_and_not(const VertexSet& other) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & ~other.words_[i]);
    return c;
}

Vertex VertexSet::first() const {
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w] != 0) return (w << 6) + std::countr_zero(words_[w]);
    return npos;
}

Vertex VertexSet::next(Vertex v) const {
    Vertex start = v + 1;
    if (start >= universe_) return npos;
    std::size_t w = start >> 6;
    std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (start & 63));
    while (true) {
        if (bits != 0) return (w << 6) + std::countr_zero(bits);
        if (++w >= words_.size()) return npos;
        bits = words_[w];
    }
}

std::vector<Vertex> VertexSet::to_vector() const {
    std::vector<Vertex> out;
    out.reserve(count());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
}

std::size_t VertexSetHash::operator()(const VertexSet& s) const noexcept {
    std::size_t h = 0x84222325cbf29ce4ULL ^ s.universe();
    for (auto w : s.words()) {
        h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

}  // namespace indturan
