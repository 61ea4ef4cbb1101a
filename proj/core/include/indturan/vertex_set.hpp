#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace indturan {

using Vertex = std::size_t;

// Fixed-universe bit set over vertex indices [0, universe). Bits past the
// universe in the last word are always zero.
class VertexSet {
public:
    static constexpr Vertex npos = static_cast<Vertex>(-1);

    VertexSet() = default;
    explicit VertexSet(std::size_t universe);

    static VertexSet full(std::size_t universe);
    static VertexSet of(std::size_t universe, std::span<const Vertex> members);

    std::size_t universe() const { return universe_; }

    bool test(Vertex v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }
    void set(Vertex v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void reset(Vertex v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
    void clear();

    std::size_t count() const;
    bool empty() const;

    VertexSet& operator&=(const VertexSet& other);
    VertexSet& operator|=(const VertexSet& other);
    // Set difference.
    VertexSet& operator-=(const VertexSet& other);
    VertexSet complement() const;

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    bool intersects(const VertexSet& other) const;
    bool is_subset_of(const VertexSet& other) const;
    std::size_t count_and(const VertexSet& other) const;
    std::size_t count_and_not(const VertexSet& other) const;

    Vertex first() const;
    // First member strictly greater than v, or npos.
    Vertex next(Vertex v) const;

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits != 0) {
                f(static_cast<Vertex>((w << 6) + std::countr_zero(bits)));
                bits &= bits - 1;
            }
        }
    }

    std::vector<Vertex> to_vector() const;
    std::span<const std::uint64_t> words() const { return words_; }

    bool operator==(const VertexSet& other) const = default;

private:
    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const noexcept;
};

}  // namespace indturan
