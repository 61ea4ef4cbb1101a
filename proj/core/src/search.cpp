#include "indturan/search.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "indturan/error.hpp"

namespace indturan {

namespace {

// Left-side candidates ordered by descending degree, ties by index.
std::vector<Vertex> kss_candidates(const Graph& g, std::size_t s) {
    std::vector<Vertex> cands;
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) >= s) cands.push_back(v);
    std::stable_sort(cands.begin(), cands.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    return cands;
}

struct KssSearch {
    const Graph& g;
    std::size_t s;
    const std::vector<Vertex>& cands;
    std::vector<Vertex> left;
    std::vector<Vertex> right;

    bool extend(std::size_t start, const VertexSet& common) {
        if (left.size() == s) {
            common.for_each([&](Vertex v) {
                if (right.size() < s) right.push_back(v);
            });
            return true;
        }
        const std::size_t need = s - left.size();
        for (std::size_t i = start; i + need <= cands.size(); ++i) {
            Vertex v = cands[i];
            if (std::find(left.begin(), left.end(), v) != left.end()) continue;
            if (common.count_and(g.neighbors(v)) < s) continue;
            VertexSet next = common & g.neighbors(v);
            left.push_back(v);
            if (extend(i + 1, next)) return true;
            left.pop_back();
        }
        return false;
    }
};

Witness biclique_of(std::vector<Vertex> left, std::vector<Vertex> right) {
    std::sort(left.begin(), left.end());
    std::sort(right.begin(), right.end());
    return Biclique{std::move(left), std::move(right)};
}

// Backtracking (induced or plain) subgraph matcher.
class CopySearch {
public:
    CopySearch(const Graph& g, const Graph& h, bool induced) : g_(g), h_(h), induced_(induced) {
        order_.resize(h.order());
        std::iota(order_.begin(), order_.end(), Vertex{0});
        std::stable_sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) { return h.degree(a) > h.degree(b); });
        for (Vertex v = 0; v < g.order(); ++v) g_degree_.push_back(g.degree(v));
    }

    Witness run(std::optional<Vertex> through) {
        const std::size_t hn = h_.order();
        if (hn == 0) return through ? Witness{NotFound{"search", "empty pattern uses no vertex"}} : Witness{InducedCopy{}};
        if (hn > g_.order()) return NotFound{"search", "pattern larger than host"};
        map_.assign(hn, VertexSet::npos);
        if (!through) {
            if (extend(0, order_)) return InducedCopy{map_};
            return NotFound{"search", "no copy"};
        }
        // Try every pattern vertex as the preimage of the required vertex.
        for (Vertex x = 0; x < hn; ++x) {
            if (g_degree_[*through] < h_.degree(x)) continue;
            std::vector<Vertex> order{x};
            for (Vertex y : order_)
                if (y != x) order.push_back(y);
            map_.assign(hn, VertexSet::npos);
            map_[x] = *through;
            if (extend(1, order)) return InducedCopy{map_};
        }
        return NotFound{"search", "no copy through vertex"};
    }

private:
    bool extend(std::size_t depth, const std::vector<Vertex>& order) {
        if (depth == order.size()) return true;
        const Vertex x = order[depth];
        VertexSet cand = VertexSet::full(g_.order());
        for (std::size_t j = 0; j < depth; ++j) {
            const Vertex y = order[j];
            const Vertex image = map_[y];
            cand.reset(image);
            if (h_.adjacent(x, y)) cand &= g_.neighbors(image);
            else if (induced_) cand -= g_.neighbors(image);
            if (cand.empty()) return false;
        }
        const std::size_t need = h_.degree(x);
        for (Vertex v = cand.first(); v != VertexSet::npos; v = cand.next(v)) {
            if (g_degree_[v] < need) continue;
            map_[x] = v;
            if (extend(depth + 1, order)) return true;
        }
        map_[x] = VertexSet::npos;
        return false;
    }

    const Graph& g_;
    const Graph& h_;
    bool induced_;
    std::vector<Vertex> order_;
    std::vector<std::size_t> g_degree_;
    std::vector<Vertex> map_;
};

}  // namespace

Witness find_kss(const Graph& g, std::size_t s) {
    if (s == 0) throw Error(ErrorCode::PreconditionFailed, "find_kss requires s >= 1");
    if (2 * s > g.order()) return NotFound{"find_kss", "fewer than 2s vertices"};
    auto cands = kss_candidates(g, s);
    KssSearch search{g, s, cands, {}, {}};
    if (search.extend(0, g.all_vertices())) return biclique_of(search.left, search.right);
    return NotFound{"find_kss", "no K_{s,s}"};
}

Witness find_kss_through(const Graph& g, std::size_t s, Vertex v) {
    if (s == 0) throw Error(ErrorCode::PreconditionFailed, "find_kss requires s >= 1");
    if (2 * s > g.order() || g.degree(v) < s) return NotFound{"find_kss", "vertex cannot lie in a K_{s,s}"};
    // By symmetry of the two sides we may put v on the left.
    auto cands = kss_candidates(g, s);
    cands.erase(std::remove(cands.begin(), cands.end(), v), cands.end());
    KssSearch search{g, s, cands, {v}, {}};
    if (search.extend(0, g.neighbors(v))) return biclique_of(search.left, search.right);
    return NotFound{"find_kss", "no K_{s,s} through vertex"};
}

Witness find_induced_copy(const Graph& g, const Graph& h) { return CopySearch(g, h, true).run(std::nullopt); }

Witness find_induced_copy_through(const Graph& g, const Graph& h, Vertex v) {
    return CopySearch(g, h, true).run(v);
}

Witness find_subgraph_copy(const Graph& g, const Graph& h) { return CopySearch(g, h, false).run(std::nullopt); }

Witness find_subgraph_copy_through(const Graph& g, const Graph& h, Vertex v) {
    return CopySearch(g, h, false).run(v);
}

VertexSet common_neighborhood(const Graph& g, const VertexSet& s) {
    VertexSet out = g.all_vertices();
    s.for_each([&](Vertex v) { out &= g.neighbors(v); });
    return out;
}

VertexSet common_neighborhood(const Graph& g, std::span<const Vertex> s) {
    VertexSet out = g.all_vertices();
    for (Vertex v : s) out &= g.neighbors(v);
    return out;
}

VertexSet heavy_viewers(const Graph& g, const VertexSet& w, std::size_t s) {
    const std::size_t size = w.count();
    if (s == 0 || size < 2 * s)
        throw Error(ErrorCode::WTooSmall, "|W| = " + std::to_string(size) + " < 2s = " + std::to_string(2 * s));
    VertexSet out(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
        // |W \ N(v)| <= |W| / 2s  <=>  2s |W \ N(v)| <= |W|
        if (2 * s * w.count_and_not(g.neighbors(v)) <= size) out.set(v);
    }
    return out;
}

std::vector<std::vector<Vertex>> enumerate_independent_sets(const Graph& g, const VertexSet& x, std::size_t r,
                                                            std::size_t cap) {
    std::vector<std::vector<Vertex>> out;
    if (r == 0) throw Error(ErrorCode::PreconditionFailed, "independent set size must be >= 1");
    std::vector<Vertex> current;
    auto dfs = [&](auto&& self, const VertexSet& allowed) -> void {
        if (out.size() >= cap) return;
        if (current.size() == r) {
            out.push_back(current);
            return;
        }
        if (allowed.count() + current.size() < r) return;
        for (Vertex v = allowed.first(); v != VertexSet::npos; v = allowed.next(v)) {
            VertexSet rest = allowed - g.neighbors(v);
            // keep only vertices after v
            for (Vertex u = rest.first(); u != VertexSet::npos && u <= v; u = rest.next(u)) rest.reset(u);
            current.push_back(v);
            self(self, rest);
            current.pop_back();
            if (out.size() >= cap) return;
        }
    };
    dfs(dfs, x);
    return out;
}

Witness check_rich_set(const Graph& g, std::span<const Vertex> s, std::size_t k, std::size_t theta) {
    std::vector<Vertex> members(s.begin(), s.end());
    std::sort(members.begin(), members.end());
    if (members.size() > 62) throw Error(ErrorCode::TooLarge, "rich-set check supports |S| <= 62");
    const VertexSet in_s = VertexSet::of(g.order(), members);

    // Bucket outside vertices by their trace, encoded as a bitmask over the
    // positions of S.
    std::unordered_map<std::uint64_t, std::size_t> buckets;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (in_s.test(v)) continue;
        std::uint64_t mask = 0;
        for (std::size_t i = 0; i < members.size(); ++i)
            if (g.adjacent(v, members[i])) mask |= std::uint64_t{1} << i;
        ++buckets[mask];
    }

    RichSet rich{members, k, theta, {}};
    const std::size_t m = members.size();
    // Enumerate traces of size <= k in order of size, then lexicographic.
    std::vector<std::size_t> pick;
    for (std::size_t size = 0; size <= std::min(k, m); ++size) {
        pick.resize(size);
        std::iota(pick.begin(), pick.end(), std::size_t{0});
        while (true) {
            std::uint64_t mask = 0;
            std::vector<Vertex> trace;
            for (auto i : pick) {
                mask |= std::uint64_t{1} << i;
                trace.push_back(members[i]);
            }
            auto it = buckets.find(mask);
            std::size_t count = it == buckets.end() ? 0 : it->second;
            if (count < theta) {
                std::string t;
                for (auto v : trace) t += (t.empty() ? "" : ",") + std::to_string(v);
                return NotFound{"check_rich_set", "trace {" + t + "} realised " + std::to_string(count) +
                                                      " < theta = " + std::to_string(theta) + " times"};
            }
            rich.traces.push_back(TraceCount{std::move(trace), count});
            // next combination
            std::size_t i = size;
            while (i > 0 && pick[i - 1] == m - size + i - 1) --i;
            if (i == 0) break;
            ++pick[i - 1];
            for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return rich;
}

VertexSet peel_below(const Graph& g, std::size_t min_degree) {
    VertexSet alive = g.all_vertices();
    std::vector<std::size_t> deg = g.degrees();
    bool changed = true;
    while (changed) {
        changed = false;
        for (Vertex v = alive.first(); v != VertexSet::npos; v = alive.next(v)) {
            if (deg[v] < min_degree) {
                alive.reset(v);
                g.neighbors(v).for_each([&](Vertex u) {
                    if (alive.test(u)) --deg[u];
                });
                changed = true;
            }
        }
    }
    return alive;
}

}  // namespace indturan
