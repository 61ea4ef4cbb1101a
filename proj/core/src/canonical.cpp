#include "indturan/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "indturan/error.hpp"

namespace indturan {

namespace {

void check_order(std::size_t n) {
    if (n > kMaxCanonicalOrder) throw Error(ErrorCode::TooLarge, "canonical forms need n <= 11");
}

std::size_t code_bits(std::size_t n) { return n * (n - (n > 0 ? 1 : 0)) / 2; }

class Canonizer {
public:
    explicit Canonizer(const Graph& g) : n_(g.order()), total_(code_bits(n_)), adj_(n_, 0), twins_(n_, 0) {
        for (Vertex v = 0; v < n_; ++v)
            g.neighbors(v).for_each([&](Vertex w) { adj_[v] |= 1U << w; });
        for (Vertex x = 0; x < n_; ++x)
            for (Vertex y = 0; y < n_; ++y) {
                const unsigned mask = ~((1U << x) | (1U << y));
                if (x != y && (adj_[x] & mask) == (adj_[y] & mask)) twins_[x] |= 1U << y;
            }
        order_.resize(n_);
    }

    CanonicalForm run() {
        place(0, 0, 0);
        return {best_, best_order_};
    }

private:
    void place(std::size_t pos, unsigned used, std::uint64_t prefix) {
        if (pos == n_) {
            if (!have_ || prefix < best_) {
                best_ = prefix;
                best_order_ = order_;
                have_ = true;
            }
            return;
        }
        std::uint64_t chunk_of[kMaxCanonicalOrder];
        std::uint64_t min_chunk = ~std::uint64_t{0};
        for (Vertex x = 0; x < n_; ++x) {
            if ((used >> x) & 1U) continue;
            std::uint64_t c = 0;
            for (std::size_t i = 0; i < pos; ++i) c = (c << 1) | ((adj_[order_[i]] >> x) & 1U);
            chunk_of[x] = c;
            min_chunk = std::min(min_chunk, c);
        }
        const std::uint64_t next = (prefix << pos) | min_chunk;
        const std::size_t used_bits = code_bits(pos + 1);
        if (have_) {
            const std::uint64_t best_prefix = best_ >> (total_ - used_bits);
            if (next > best_prefix) return;
        }
        unsigned tried = 0;
        for (Vertex x = 0; x < n_; ++x) {
            if (((used >> x) & 1U) || chunk_of[x] != min_chunk) continue;
            if (twins_[x] & tried & ~used) continue;
            tried |= 1U << x;
            order_[pos] = x;
            place(pos + 1, used | (1U << x), next);
            // A strictly better branch may have lowered best_ below next.
            if (have_ && (best_ >> (total_ - used_bits)) < next) return;
        }
    }

    std::size_t n_;
    std::size_t total_;
    std::vector<unsigned> adj_;
    std::vector<unsigned> twins_;
    std::vector<Vertex> order_;
    std::uint64_t best_ = 0;
    std::vector<Vertex> best_order_;
    bool have_ = false;
};

}  // namespace

std::uint64_t adjacency_code(const Graph& g) {
    check_order(g.order());
    std::uint64_t code = 0;
    for (Vertex j = 1; j < g.order(); ++j)
        for (Vertex i = 0; i < j; ++i) code = (code << 1) | (g.adjacent(i, j) ? 1U : 0U);
    return code;
}

Graph graph_from_code(std::size_t n, std::uint64_t code) {
    check_order(n);
    Graph g(n);
    std::size_t bit = code_bits(n);
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i) {
            --bit;
            if ((code >> bit) & 1U) g.add_edge(i, j);
        }
    return g;
}

CanonicalForm canonical_form(const Graph& g) {
    check_order(g.order());
    return Canonizer(g).run();
}

std::uint64_t canonical_code(const Graph& g) {
    check_order(g.order());
    thread_local std::unordered_map<std::uint64_t, std::uint64_t> memo;
    const std::uint64_t key = adjacency_code(g) | (std::uint64_t{g.order()} << 58);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    if (memo.size() >= (std::size_t{1} << 20)) memo.clear();
    const std::uint64_t code = Canonizer(g).run().code;
    memo.emplace(key, code);
    return code;
}

std::uint64_t canonical_code_bruteforce(const Graph& g) {
    check_order(g.order());
    const std::size_t n = g.order();
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), Vertex{0});
    std::uint64_t best = ~std::uint64_t{0};
    do {
        std::uint64_t code = 0;
        for (Vertex j = 1; j < n; ++j)
            for (Vertex i = 0; i < j; ++i) code = (code << 1) | (g.adjacent(perm[i], perm[j]) ? 1U : 0U);
        best = std::min(best, code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return n < 2 ? 0 : best;
}

}  // namespace indturan
