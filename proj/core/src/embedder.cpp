#include "indturan/embedder.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>

#include "indturan/error.hpp"
#include "indturan/hypergraph.hpp"
#include "indturan/rng.hpp"
#include "indturan/search.hpp"

namespace indturan {

namespace {

std::size_t clamp_size(const BigInt& v) {
    if (v < 0) return 0;
    if (v > BigInt(std::numeric_limits<std::size_t>::max())) return std::numeric_limits<std::size_t>::max();
    return static_cast<std::size_t>(v);
}

std::uint64_t stage_seed(std::uint64_t seed, std::uint64_t stage) { return Rng(seed, stage).key(); }

BigInt ceil_sqrt(std::size_t n) {
    BigInt r = boost::multiprecision::sqrt(BigInt(n));
    if (r * r < n) r += 1;
    return r;
}

}  // namespace

EmbedParams EmbedParams::defaults(const PatternSpec& h, std::size_t s) {
    EmbedParams p;
    p.s = s;
    p.k = h.k;
    p.t = std::max<std::size_t>(h.k, 1);
    const BigInt base = BigInt(h.c_h()) * s;
    p.ell = pow(base, static_cast<unsigned>(4 * h.h() + 10));
    p.m = pow(base, static_cast<unsigned>(2 * h.h()));
    p.theta = pow(BigInt(4 * h.b() * s), static_cast<unsigned>(h.b()));
    return p;
}

bool drc_inequality(const Graph& g, std::size_t k, std::size_t t, const BigInt& m, const BigInt& ell) {
    const std::size_t n = g.order();
    if (n == 0 || t == 0) return false;
    const Rational d = g.average_degree();
    const Rational nn(n);
    Rational lhs = pow(d, static_cast<unsigned>(t)) / pow(nn, static_cast<unsigned>(t - 1));
    lhs -= Rational(binomial(static_cast<unsigned>(n), static_cast<unsigned>(k))) *
           pow(Rational(m) / nn, static_cast<unsigned>(t));
    return lhs >= Rational(ell);
}

DrcResult dependent_random_choice(const Graph& g, std::size_t k, std::size_t t, std::size_t m, std::size_t ell,
                                  std::uint64_t seed, const DrcOptions& options) {
    if (t == 0) throw Error(ErrorCode::PreconditionFailed, "DRC exponent t must be >= 1");
    DrcResult result;
    result.inequality_held = drc_inequality(g, k, t, BigInt(m), BigInt(ell));
    if (!result.inequality_held && !options.best_effort)
        throw Error(ErrorCode::InequalityFails, "d^t/n^(t-1) - C(n,k)(m/n)^t < ell");
    const std::size_t n = g.order();
    const Rng rng(seed);
    for (std::size_t attempt = 0; attempt < options.retries && n > 0; ++attempt) {
        Rng r = rng.split(attempt);
        VertexSet x = g.all_vertices();
        for (std::size_t i = 0; i < t; ++i) x &= g.neighbors(r.below(n));
        const std::vector<Vertex> pool = x.to_vector();
        if (k > 0 && pool.size() >= k) {
            if (binomial(static_cast<unsigned>(pool.size()), static_cast<unsigned>(k)) > BigInt(200000000))
                throw Error(ErrorCode::TooLarge, "too many k-subsets in the sampled neighbourhood");
            // Lexicographic sweep over k-subsets of the sample; subtrees through a
            // deleted vertex are skipped since those subsets are already broken.
            std::vector<Vertex> chosen;
            auto dfs = [&](auto&& self, std::size_t start, const VertexSet& common) -> void {
                if (chosen.size() == k) {
                    if (common.count() < m) x.reset(chosen.back());
                    return;
                }
                for (std::size_t i = start; i + (k - chosen.size()) <= pool.size(); ++i) {
                    for (Vertex c : chosen)
                        if (!x.test(c)) return;
                    if (!x.test(pool[i])) continue;
                    chosen.push_back(pool[i]);
                    self(self, i + 1, common & g.neighbors(pool[i]));
                    chosen.pop_back();
                }
            };
            dfs(dfs, 0, g.all_vertices());
        }
        result.attempts = attempt + 1;
        if (x.count() >= ell) {
            result.x = std::move(x);
            return result;
        }
    }
    throw Error(ErrorCode::RetriesExhausted, "no sample produced " + std::to_string(ell) + " vertices in " +
                                                 std::to_string(options.retries) + " attempts");
}

bool is_bad_tuple(const Graph& g, std::span<const Vertex> core, std::span<const Vertex> middle, Vertex last,
                  std::size_t s) {
    VertexSet set = common_neighborhood(g, core);
    for (Vertex v : middle) set -= g.neighbors(v);
    const std::size_t size = set.count();
    if (size < 2 * s) return false;
    return 2 * s * set.count_and_not(g.neighbors(last)) < size;
}

namespace {

// Does the independent set e contain an ordered tuple from one of the bad
// families? The core T has size 1..k, the middle vertices R any subset of
// the rest, the last vertex anything outside T and R.
bool contains_bad_tuple(const Graph& g, const std::vector<Vertex>& e, std::size_t k, std::size_t s) {
    const std::size_t t = e.size();
    for (std::uint32_t core = 1; core < (1U << t); ++core) {
        if (static_cast<std::size_t>(std::popcount(core)) > k) continue;
        std::vector<Vertex> tv;
        for (std::size_t i = 0; i < t; ++i)
            if (core >> i & 1U) tv.push_back(e[i]);
        const VertexSet cn = common_neighborhood(g, tv);
        if (cn.count() < 2 * s) continue;
        const std::uint32_t rest = ((1U << t) - 1) & ~core;
        // Iterate over submasks of rest as the middle set.
        for (std::uint32_t mid = rest;; mid = (mid - 1) & rest) {
            VertexSet set = cn;
            for (std::size_t i = 0; i < t; ++i)
                if (mid >> i & 1U) set -= g.neighbors(e[i]);
            const std::size_t size = set.count();
            if (size >= 2 * s) {
                const std::uint32_t last = rest & ~mid;
                for (std::size_t i = 0; i < t; ++i)
                    if ((last >> i & 1U) && 2 * s * set.count_and_not(g.neighbors(e[i])) < size) return true;
            }
            if (mid == 0) break;
        }
    }
    return false;
}

}  // namespace

Witness find_rich_independent_set(const Graph& g, const VertexSet& x, std::size_t a, const EmbedParams& p,
                                  std::uint64_t seed, EmbedTrace* trace) {
    if (a == 0) throw Error(ErrorCode::PreconditionFailed, "a must be >= 1");
    const std::vector<Vertex> xs = x.to_vector();
    const std::size_t theta = clamp_size(p.theta);
    auto note = [&](std::string line) {
        if (trace) trace->log.push_back(std::move(line));
    };

    if (!p.overrides && p.k > 0) {
        const std::size_t m = clamp_size(p.m);
        std::vector<Vertex> chosen;
        bool ok = true;
        auto dfs = [&](auto&& self, std::size_t start, const VertexSet& common) -> void {
            if (!ok) return;
            if (chosen.size() == p.k) {
                ok = common.count() >= m;
                return;
            }
            for (std::size_t i = start; i < xs.size() && ok; ++i) {
                chosen.push_back(xs[i]);
                self(self, i + 1, common & g.neighbors(xs[i]));
                chosen.pop_back();
            }
        };
        dfs(dfs, 0, g.all_vertices());
        if (!ok) throw Error(ErrorCode::PreconditionFailed, "some k-subset of X has fewer than m common neighbours");
    }

    std::vector<std::vector<Vertex>> sets;
    std::size_t r = 2 * a;
    for (; r >= a; --r) {
        sets = enumerate_independent_sets(g, x, r, p.independent_cap);
        if (!sets.empty()) break;
    }
    if (sets.empty()) throw Error(ErrorCode::NoIndependentSets, "X has no independent set of size " + std::to_string(a));
    note("independent " + std::to_string(r) + "-sets: " + std::to_string(sets.size()));

    std::vector<std::size_t> index(g.order(), 0);
    for (std::size_t i = 0; i < xs.size(); ++i) index[xs[i]] = i;
    std::vector<HyperEdge> edges;
    edges.reserve(sets.size());
    for (const auto& set : sets) {
        HyperEdge e;
        for (Vertex v : set) e.push_back(index[v]);
        edges.push_back(std::move(e));
    }
    const UniformHypergraph family(xs.size(), r, std::move(edges));

    SpreadParams sp = SpreadParams::for_independent_sets(a, p.s);
    sp.r = r;
    sp.enforce_hypothesis = !p.overrides;
    std::optional<UniformHypergraph> cleaned;
    for (std::size_t attempt = 0; attempt < p.clean_retries && !cleaned; ++attempt) {
        try {
            cleaned = clean_to_superspread(family, sp, stage_seed(seed, attempt)).hypergraph;
        } catch (const Error& e) {
            if (e.code() != ErrorCode::StuckBelowUniformity) throw;
        }
    }
    if (!cleaned) {
        if (!p.overrides)
            throw Error(ErrorCode::StuckBelowUniformity, "cleaning failed for every retry seed");
        note("cleaning fell back to the uncleaned family");
        cleaned = family;
    }
    if (trace) {
        trace->spread_uniformity = cleaned->uniformity();
        trace->spread_edges = cleaned->edge_count();
    }
    note("superspread family: uniformity " + std::to_string(cleaned->uniformity()) + ", " +
         std::to_string(cleaned->edge_count()) + " edges");

    std::size_t bad = 0;
    const std::size_t k = std::max<std::size_t>(p.k, 1);
    for (const auto& e : cleaned->edges()) {
        std::vector<Vertex> members;
        for (auto i : e) members.push_back(xs[i]);
        if (contains_bad_tuple(g, members, k, p.s)) {
            ++bad;
            continue;
        }
        // Try the a-subsets of the surviving edge in lexicographic order.
        std::vector<std::size_t> pick(a);
        std::iota(pick.begin(), pick.end(), std::size_t{0});
        while (true) {
            std::vector<Vertex> subset;
            for (auto i : pick) subset.push_back(members[i]);
            Witness w = check_rich_set(g, subset, p.k, theta);
            if (found(w)) {
                if (trace) {
                    trace->bad_edges = bad;
                    trace->independent_set = subset;
                }
                note("rich independent set after " + std::to_string(bad) + " bad edges");
                return w;
            }
            std::size_t i = a;
            while (i > 0 && pick[i - 1] == members.size() - a + i - 1) --i;
            if (i == 0) break;
            ++pick[i - 1];
            for (std::size_t j = i; j < a; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    if (trace) trace->bad_edges = bad;
    throw Error(ErrorCode::AllEdgesBad, std::to_string(bad) + " of " + std::to_string(cleaned->edge_count()) +
                                            " edges contain a bad tuple and no survivor is rich");
}

Witness greedy_induced_embed(const Graph& g, std::span<const Vertex> image_a, const PatternSpec& h, std::size_t s,
                             const GreedyOptions& options, EmbedTrace* trace) {
    if (s == 0) throw Error(ErrorCode::PreconditionFailed, "s must be >= 1");
    if (image_a.size() != h.a()) throw Error(ErrorCode::PreconditionFailed, "|I| must equal |A|");
    VertexSet iset(g.order());
    for (Vertex v : image_a) {
        if (v >= g.order() || iset.test(v)) throw Error(ErrorCode::PreconditionFailed, "I must be a set of host vertices");
        iset.set(v);
    }
    for (Vertex v : image_a)
        if (g.neighbors(v).intersects(iset)) throw Error(ErrorCode::PreconditionFailed, "I is not independent");
    if (!options.relaxed) {
        const std::size_t theta = options.theta.value_or(
            clamp_size(pow(BigInt(4 * h.b() * s), static_cast<unsigned>(h.b()))));
        Witness rich = check_rich_set(g, image_a, h.k, theta);
        if (!found(rich))
            throw Error(ErrorCode::PreconditionFailed, "I is not rich: " + std::get<NotFound>(rich).reason);
    }

    std::vector<Vertex> map(h.h(), VertexSet::npos);
    for (std::size_t i = 0; i < h.a(); ++i) map[h.side_a[i]] = image_a[i];

    const std::size_t b = h.b();
    std::vector<VertexSet> cand(b, VertexSet(g.order()));
    for (std::size_t j = 0; j < b; ++j) {
        VertexSet target(g.order());
        h.pattern.neighbors(h.side_b[j]).for_each([&](Vertex x) { target.set(map[x]); });
        for (Vertex v = 0; v < g.order(); ++v)
            if (!iset.test(v) && (g.neighbors(v) & iset) == target) cand[j].set(v);
        if (trace) trace->initial_candidates.push_back(cand[j].count());
    }

    for (std::size_t i = 0; i < b; ++i) {
        if (cand[i].empty())
            throw Error(ErrorCode::NoViableCandidate, "no candidate left for B-vertex " + std::to_string(i));
        Vertex chosen = VertexSet::npos;
        bool strict = false;
        for (Vertex v = cand[i].first(); v != VertexSet::npos && chosen == VertexSet::npos; v = cand[i].next(v)) {
            bool ok = true;
            for (std::size_t j = i + 1; j < b && ok; ++j)
                ok = 2 * s * cand[j].count_and_not(g.neighbors(v)) >= cand[j].count();
            if (ok) {
                chosen = v;
                strict = true;
            }
        }
        if (chosen == VertexSet::npos) {
            if (!options.relaxed)
                throw Error(ErrorCode::NoViableCandidate, "step rule has no solution at B-vertex " + std::to_string(i));
            std::size_t best = 0;
            for (Vertex v = cand[i].first(); v != VertexSet::npos; v = cand[i].next(v)) {
                std::size_t worst = std::numeric_limits<std::size_t>::max();
                for (std::size_t j = i + 1; j < b; ++j) {
                    VertexSet left = cand[j] - g.neighbors(v);
                    left.reset(v);
                    worst = std::min(worst, left.count());
                }
                if (chosen == VertexSet::npos || worst > best) {
                    chosen = v;
                    best = worst;
                }
            }
        }
        EmbedStep step{i, chosen, strict, {}, {}};
        for (std::size_t j = i + 1; j < b; ++j) {
            step.before.push_back(cand[j].count());
            cand[j] -= g.neighbors(chosen);
            cand[j].reset(chosen);
            step.after.push_back(cand[j].count());
        }
        map[h.side_b[i]] = chosen;
        if (trace) trace->steps.push_back(std::move(step));
    }

    Witness w = InducedCopy{map};
    if (auto v = validate(g, w, &h.pattern); !v)
        throw Error(ErrorCode::ValidationFailed, "greedy embedding produced an invalid copy: " + v.message);
    return w;
}

PipelineResult bounded_degree_pipeline(const Graph& g, const PatternSpec& h, std::size_t s, PipelineMode mode,
                                       std::uint64_t seed, const std::optional<EmbedParams>& params) {
    PipelineResult out{NotFound{}, {}};
    auto& trace = out.trace;
    const std::size_t n = g.order();
    EmbedParams p = params ? *params : EmbedParams::defaults(h, s);
    p.s = s;
    const std::size_t k = std::max<std::size_t>(h.k, 1);
    if (!params && mode == PipelineMode::II) {
        p.t = 2 * k;
        p.ell = p.m = ceil_sqrt(n);
    }

    Witness gate = find_kss(g, s);
    if (found(gate)) {
        trace.log.push_back("K_{s,s} gate fired");
        out.witness = std::move(gate);
        return out;
    }
    trace.log.push_back("K_{s,s} gate passed");

    auto fail = [&](const char* stage, const Error& e) {
        trace.log.push_back(std::string(stage) + " failed: " + e.what());
        out.witness = NotFound{stage, e.what()};
        return out;
    };

    DrcResult drc;
    try {
        if (!p.overrides) {
            const BigInt e(g.edge_count());
            const BigInt base = BigInt(h.c_h()) * s;
            const unsigned hh = static_cast<unsigned>(h.h());
            const unsigned kk = static_cast<unsigned>(k);
            if (mode == PipelineMode::I) {
                // e >= (C_H s)^(4h+10) n^(2-1/k)
                if (pow(e, kk) < pow(base, (4 * hh + 10) * kk) * pow(BigInt(n), 2 * kk - 1))
                    throw Error(ErrorCode::PreconditionFailed, "e(G) < (C_H s)^(4h+10) n^(2-1/k)");
            } else {
                if (BigInt(n) < pow(base, 8 * hh + 20))
                    throw Error(ErrorCode::PreconditionFailed, "n < (C_H s)^(8h+20)");
                if (pow(e, 4 * kk) < pow(BigInt(n), 8 * kk - 1))
                    throw Error(ErrorCode::PreconditionFailed, "e(G) < n^(2-1/4k)");
            }
        }
        drc = dependent_random_choice(g, k, p.t, clamp_size(p.m), clamp_size(p.ell), stage_seed(seed, 1),
                                      DrcOptions{16, p.overrides});
    } catch (const Error& e) {
        return fail("DRC", e);
    }
    trace.drc_set = drc.x.to_vector();
    trace.drc_attempts = drc.attempts;
    trace.log.push_back("DRC: |X| = " + std::to_string(trace.drc_set.size()));

    Witness rich;
    try {
        rich = find_rich_independent_set(g, drc.x, h.a(), p, stage_seed(seed, 2), &trace);
    } catch (const Error& e) {
        return fail("rich", e);
    }
    const auto& iset = std::get<RichSet>(rich).vertices;

    try {
        out.witness = greedy_induced_embed(g, iset, h, s, GreedyOptions{p.overrides, clamp_size(p.theta)}, &trace);
    } catch (const Error& e) {
        return fail("embed", e);
    }
    trace.log.push_back("embedded");
    return out;
}

Witness embed_tree_c4free(const Graph& g, const Graph& tree, bool assume_c4free) {
    const std::size_t t = tree.order();
    if (t == 0 || tree.edge_count() != t - 1) throw Error(ErrorCode::BadSpec, "pattern is not a tree");
    // BFS order from vertex 0; every later vertex has its parent earlier.
    std::vector<Vertex> order{0};
    std::vector<Vertex> parent(t, VertexSet::npos);
    std::vector<bool> seen(t, false);
    seen[0] = true;
    for (std::size_t i = 0; i < order.size(); ++i)
        tree.neighbors(order[i]).for_each([&](Vertex y) {
            if (!seen[y]) {
                seen[y] = true;
                parent[y] = order[i];
                order.push_back(y);
            }
        });
    if (order.size() != t) throw Error(ErrorCode::BadSpec, "pattern is not a tree");
    if (g.order() == 0) throw Error(ErrorCode::TooSparse, "empty host");
    if (!assume_c4free && found(find_kss(g, 2))) throw Error(ErrorCode::PreconditionFailed, "host contains C4");

    const VertexSet alive = t == 1 ? g.all_vertices() : peel_below(g, 2 * t);
    if (alive.empty()) throw Error(ErrorCode::TooSparse, "peeling below degree " + std::to_string(2 * t) + " emptied the host");

    std::vector<Vertex> map(t, VertexSet::npos);
    map[0] = alive.first();
    VertexSet used(g.order());
    used.set(map[0]);
    for (std::size_t i = 1; i < t; ++i) {
        const Vertex x = order[i];
        const Vertex anchor = map[parent[x]];
        // Neighbours of the anchor outside the image that see no other image vertex.
        VertexSet options = g.neighbors(anchor) & alive;
        options -= used;
        VertexSet blocked(g.order());
        used.for_each([&](Vertex u) {
            if (u != anchor) blocked |= g.neighbors(u);
        });
        options -= blocked;
        if (options.empty()) return NotFound{"embed_tree", "no extension at tree vertex " + std::to_string(x)};
        map[x] = options.first();
        used.set(map[x]);
    }
    Witness w = InducedCopy{map};
    if (auto v = validate(g, w, &tree); !v) throw Error(ErrorCode::ValidationFailed, v.message);
    return w;
}

std::size_t eh_biclique_size(std::size_t n, std::size_t h) {
    if (h == 0) throw Error(ErrorCode::PreconditionFailed, "pattern must be non-empty");
    const unsigned e = static_cast<unsigned>(8 * h + 20);
    std::size_t s = 1;
    while (pow(BigInt(s + 1) * h * h, e) <= n) ++s;
    return s;
}

Witness eh_witness(const Graph& g, const PatternSpec& h, bool assume_free) {
    if (!assume_free && found(find_induced_copy(g, h.pattern)))
        throw Error(ErrorCode::PatternPresent, "host contains an induced copy of the pattern");
    const std::size_t s = eh_biclique_size(g.order(), h.h());
    Witness w = find_kss(g, s);
    if (!found(w)) {
        // Greedy max-degree deletion until no edge remains.
        VertexSet alive = g.all_vertices();
        std::vector<std::size_t> deg = g.degrees();
        while (true) {
            Vertex worst = VertexSet::npos;
            for (Vertex v = alive.first(); v != VertexSet::npos; v = alive.next(v))
                if (deg[v] > 0 && (worst == VertexSet::npos || deg[v] > deg[worst])) worst = v;
            if (worst == VertexSet::npos) break;
            alive.reset(worst);
            g.neighbors(worst).for_each([&](Vertex u) {
                if (alive.test(u)) --deg[u];
            });
        }
        w = IndependentSet{alive.to_vector()};
    }
    if (auto v = validate(g, w); !v) throw Error(ErrorCode::ValidationFailed, v.message);
    return w;
}

}  // namespace indturan
