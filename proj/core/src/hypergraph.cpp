#include "indturan/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

#include <boost/container_hash/hash.hpp>

#include "indturan/error.hpp"
#include "indturan/parallel.hpp"
#include "indturan/rng.hpp"

namespace indturan {

namespace {

using SubsetKey = std::vector<std::uint32_t>;

struct SubsetKeyHash {
    std::size_t operator()(const SubsetKey& k) const noexcept { return boost::hash_range(k.begin(), k.end()); }
};

// lhs >= ratio * rhs for a nonnegative rational ratio.
class RatioTest {
public:
    explicit RatioTest(const Rational& ratio)
        : num_(boost::multiprecision::numerator(ratio)), den_(boost::multiprecision::denominator(ratio)) {
        small_ = num_ >= 0 && num_ <= std::numeric_limits<std::uint64_t>::max() &&
                 den_ <= std::numeric_limits<std::uint64_t>::max();
        if (small_) {
            n64_ = static_cast<std::uint64_t>(num_);
            d64_ = static_cast<std::uint64_t>(den_);
        }
    }

    bool at_least(std::uint64_t lhs, std::uint64_t rhs) const {
        if (small_) return Count{lhs} * d64_ >= Count{rhs} * n64_;
        return BigInt(lhs) * den_ >= num_ * BigInt(rhs);
    }

private:
    BigInt num_;
    BigInt den_;
    bool small_ = false;
    std::uint64_t n64_ = 0;
    std::uint64_t d64_ = 1;
};

// deg(S) for every subset S of every edge.
std::unordered_map<SubsetKey, std::size_t, SubsetKeyHash> subset_degrees(const UniformHypergraph& h) {
    std::unordered_map<SubsetKey, std::size_t, SubsetKeyHash> table;
    const std::size_t t = h.uniformity();
    if (t > 20) throw Error(ErrorCode::TooLarge, "heaviness test supports uniformity <= 20");
    SubsetKey key;
    for (const auto& e : h.edges()) {
        for (std::uint32_t mask = 0; mask < (1U << t); ++mask) {
            key.clear();
            for (std::size_t i = 0; i < t; ++i)
                if (mask >> i & 1U) key.push_back(static_cast<std::uint32_t>(e[i]));
            ++table[key];
        }
    }
    return table;
}

}  // namespace

UniformHypergraph::UniformHypergraph(std::size_t n, std::size_t t, std::vector<HyperEdge> edges,
                                     std::optional<std::vector<std::size_t>> parts)
    : n_(n), t_(t), parts_(std::move(parts)) {
    if (parts_ && parts_->size() != n) throw Error(ErrorCode::BadSpec, "part assignment must cover the ground set");
    for (auto& e : edges) {
        std::sort(e.begin(), e.end());
        if (e.size() != t || std::adjacent_find(e.begin(), e.end()) != e.end())
            throw Error(ErrorCode::BadSpec, "edge does not have exactly t distinct vertices");
        if (!e.empty() && e.back() >= n) throw Error(ErrorCode::BadSpec, "edge vertex outside ground set");
        if (parts_) {
            std::set<std::size_t> seen;
            for (Vertex v : e)
                if (!seen.insert((*parts_)[v]).second)
                    throw Error(ErrorCode::NotPartite, "edge meets a part twice");
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
    incidence_.assign(n, VertexSet(edges_.size()));
    for (std::size_t i = 0; i < edges_.size(); ++i)
        for (Vertex v : edges_[i]) incidence_[v].set(i);
}

std::size_t UniformHypergraph::part_count() const {
    if (!parts_ || parts_->empty()) return 0;
    return *std::max_element(parts_->begin(), parts_->end()) + 1;
}

BigInt SpreadParams::c_r() const {
    return pow(BigInt(r), static_cast<unsigned>(r)) * pow(BigInt(2), static_cast<unsigned>(r * r));
}

BigInt SpreadParams::edge_threshold(std::size_t n) const {
    Rational x = Rational(c_r()) / pow(epsilon * delta, static_cast<unsigned>(r)) *
                 Rational(pow(BigInt(n), static_cast<unsigned>(a == 0 ? 0 : a - 1)));
    return ceil(x);
}

SpreadParams SpreadParams::for_independent_sets(std::size_t a, std::size_t s) {
    if (a == 0 || s == 0) throw Error(ErrorCode::PreconditionFailed, "a and s must be positive");
    SpreadParams p;
    p.a = a;
    p.r = 2 * a;
    p.epsilon = Rational(1) / Rational(pow(BigInt(2 * a), 2));
    p.delta = Rational(1) / (Rational(pow(BigInt(2 * a), static_cast<unsigned>(2 * (a + 1)))) * Rational(s));
    return p;
}

std::size_t set_degree(const UniformHypergraph& h, std::span<const Vertex> s) {
    if (s.empty()) return h.edge_count();
    for (Vertex v : s)
        if (v >= h.ground_size()) throw Error(ErrorCode::BadSpec, "vertex outside ground set");
    VertexSet acc = h.incidence(s[0]);
    for (std::size_t i = 1; i < s.size(); ++i) acc &= h.incidence(s[i]);
    return acc.count();
}

bool HeavyReport::superspread(const Rational& epsilon) const {
    return Rational(heavy.size()) <= epsilon * Rational(edge_count);
}

HeavyReport heavy_edges(const UniformHypergraph& h, const Rational& delta, EmptyCore empty_core, unsigned threads) {
    HeavyReport report;
    report.edge_count = h.edge_count();
    const auto degrees = subset_degrees(h);
    const RatioTest test(delta);
    const std::size_t t = h.uniformity();
    std::vector<std::optional<HeavyWitness>> found(h.edge_count());

    parallel_for(h.edge_count(), threads, [&](std::size_t idx) {
        const auto& e = h.edge(idx);
        SubsetKey core, grown;
        std::vector<std::size_t> pick;
        for (std::size_t size = empty_core == EmptyCore::Allowed ? 0 : 1; size < t; ++size) {
            pick.resize(size);
            std::iota(pick.begin(), pick.end(), std::size_t{0});
            while (true) {
                core.clear();
                for (auto i : pick) core.push_back(static_cast<std::uint32_t>(e[i]));
                const std::size_t base = degrees.at(core);
                for (std::size_t j = 0; j < t; ++j) {
                    if (std::find(pick.begin(), pick.end(), j) != pick.end()) continue;
                    grown = core;
                    grown.insert(std::upper_bound(grown.begin(), grown.end(), e[j]), static_cast<std::uint32_t>(e[j]));
                    if (test.at_least(degrees.at(grown), base)) {
                        found[idx] = HeavyWitness{idx, std::vector<Vertex>(core.begin(), core.end()), e[j]};
                        return;
                    }
                }
                std::size_t i = size;
                while (i > 0 && pick[i - 1] == t - size + i - 1) --i;
                if (i == 0) break;
                ++pick[i - 1];
                for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
            }
        }
    });
    for (auto& w : found)
        if (w) report.heavy.push_back(std::move(*w));
    return report;
}

UniformHypergraph restrict(const UniformHypergraph& h, std::span<const std::size_t> parts) {
    if (!h.partite()) throw Error(ErrorCode::NotPartite, "restriction needs a partite hypergraph");
    if (parts.empty()) throw Error(ErrorCode::PreconditionFailed, "restriction needs a non-empty index set");
    std::set<std::size_t> keep(parts.begin(), parts.end());
    std::vector<HyperEdge> out;
    out.reserve(h.edge_count());
    for (const auto& e : h.edges()) {
        HyperEdge f;
        for (Vertex v : e)
            if (keep.count(h.parts()[v])) f.push_back(v);
        if (f.size() != keep.size())
            throw Error(ErrorCode::NotPartite, "edge does not meet every selected part exactly once");
        out.push_back(std::move(f));
    }
    return UniformHypergraph(h.ground_size(), keep.size(), std::move(out), h.parts());
}

CleanResult clean_to_superspread(const UniformHypergraph& h, const SpreadParams& p, std::uint64_t seed,
                                 unsigned threads) {
    if (p.r != h.uniformity())
        throw Error(ErrorCode::PreconditionFailed, "hypergraph uniformity differs from r");
    if (p.a == 0 || p.a > p.r) throw Error(ErrorCode::PreconditionFailed, "need 1 <= a <= r");
    if (p.epsilon <= 0 || p.epsilon >= 1 || p.delta <= 0 || p.delta >= 1)
        throw Error(ErrorCode::PreconditionFailed, "epsilon and delta must lie in (0,1)");
    if (h.edge_count() == 0) throw Error(ErrorCode::HypothesisFailed, "hypergraph has no edges");

    CleanResult result;
    const BigInt threshold = p.edge_threshold(h.ground_size());
    result.hypothesis_held = BigInt(h.edge_count()) >= threshold;
    if (p.enforce_hypothesis && !result.hypothesis_held)
        throw Error(ErrorCode::HypothesisFailed, "e(H) = " + std::to_string(h.edge_count()) + " < " +
                                                     threshold.str() + " = C_r (eps delta)^-r n^(a-1)");

    if (heavy_edges(h, p.delta, p.empty_core, threads).superspread(p.epsilon)) {
        result.hypergraph = h;
        if (h.partite()) result.partition = h.parts();
        result.rainbow_edges = h.edge_count();
        return result;
    }

    const std::size_t r = p.r;
    UniformHypergraph current;
    if (h.partite() && h.part_count() == r) {
        current = h;
        result.partition = h.parts();
    } else {
        Rng rng(seed);
        result.partition.resize(h.ground_size());
        for (auto& part : result.partition) part = rng.below(r);
        std::vector<HyperEdge> rainbow;
        for (const auto& e : h.edges()) {
            std::uint64_t seen = 0;
            for (Vertex v : e) seen |= std::uint64_t{1} << result.partition[v];
            if (static_cast<std::size_t>(std::popcount(seen)) == r) rainbow.push_back(e);
        }
        if (rainbow.empty()) throw Error(ErrorCode::StuckBelowUniformity, "random partition kept no edge");
        current = UniformHypergraph(h.ground_size(), r, std::move(rainbow), result.partition);
    }
    result.rainbow_edges = current.edge_count();

    std::vector<std::size_t> active(r);
    std::iota(active.begin(), active.end(), std::size_t{0});
    while (true) {
        HeavyReport rep = heavy_edges(current, p.delta, p.empty_core, threads);
        if (rep.superspread(p.epsilon)) break;
        if (current.uniformity() <= p.a)
            throw Error(ErrorCode::StuckBelowUniformity,
                        "not superspread at uniformity " + std::to_string(current.uniformity()));
        // Pigeonhole over (parts of S_e, part of v_e).
        std::map<std::pair<std::uint64_t, std::size_t>, std::size_t> classes;
        for (const auto& w : rep.heavy) {
            std::uint64_t j = 0;
            for (Vertex v : w.core) j |= std::uint64_t{1} << result.partition[v];
            ++classes[{j, result.partition[w.extra]}];
        }
        auto best = classes.begin();
        for (auto it = classes.begin(); it != classes.end(); ++it)
            if (it->second > best->second) best = it;
        const std::size_t drop = best->first.second;
        active.erase(std::find(active.begin(), active.end(), drop));
        result.dropped_parts.push_back(drop);
        current = restrict(current, active);
    }
    result.hypergraph = std::move(current);
    return result;
}

namespace {

template <class F>
void for_each_ordered_tuple(std::span<const Vertex> pool, std::size_t len, F&& f) {
    std::vector<Vertex> tuple;
    std::vector<bool> used(pool.size(), false);
    auto dfs = [&](auto&& self) -> bool {
        if (tuple.size() == len) return f(std::span<const Vertex>(tuple));
        for (std::size_t i = 0; i < pool.size(); ++i) {
            if (used[i]) continue;
            used[i] = true;
            tuple.push_back(pool[i]);
            bool stop = self(self);
            tuple.pop_back();
            used[i] = false;
            if (stop) return true;
        }
        return false;
    };
    dfs(dfs);
}

}  // namespace

bool verify_extension_bound(const BadTupleFamily& b, std::size_t n) {
    if (b.ell == 0) return true;
    std::vector<Vertex> ground(n);
    std::iota(ground.begin(), ground.end(), Vertex{0});
    bool ok = true;
    std::vector<Vertex> full;
    for_each_ordered_tuple(ground, b.ell - 1, [&](std::span<const Vertex> prefix) {
        std::size_t completions = 0;
        full.assign(prefix.begin(), prefix.end());
        full.push_back(0);
        for (Vertex v = 0; v < n; ++v) {
            if (std::find(prefix.begin(), prefix.end(), v) != prefix.end()) continue;
            full.back() = v;
            if (b.contains(full)) ++completions;
        }
        if (completions > b.s_bound) ok = false;
        return !ok;
    });
    return ok;
}

std::size_t count_bad_edges(const UniformHypergraph& h, const BadTupleFamily& b, unsigned threads) {
    if (b.ell > h.uniformity()) throw Error(ErrorCode::PreconditionFailed, "tuple length exceeds uniformity");
    std::vector<unsigned char> bad(h.edge_count(), 0);
    parallel_for(h.edge_count(), threads, [&](std::size_t i) {
        for_each_ordered_tuple(h.edge(i), b.ell, [&](std::span<const Vertex> tuple) {
            if (b.contains(tuple)) bad[i] = 1;
            return bad[i] != 0;
        });
    });
    return static_cast<std::size_t>(std::count(bad.begin(), bad.end(), 1));
}

}  // namespace indturan
