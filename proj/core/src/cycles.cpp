#include "indturan/cycles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "indturan/error.hpp"
#include "indturan/rng.hpp"
#include "indturan/search.hpp"

namespace indturan {

namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > kSaturated / a) return kSaturated;
    return a * b;
}

std::uint64_t walk_cost(std::size_t n, std::size_t delta, std::size_t steps) {
    std::uint64_t c = n;
    for (std::size_t i = 0; i < steps; ++i) c = sat_mul(c, delta);
    return c;
}

struct AlphaParts {
    unsigned p = 0;
    unsigned q = 1;
};

AlphaParts split_alpha(const Rational& alpha) {
    if (alpha <= 0 || alpha > 1) throw Error(ErrorCode::BadSpec, "alpha must lie in (0, 1]");
    const BigInt num = numerator(alpha);
    const BigInt den = denominator(alpha);
    if (den > 64) throw Error(ErrorCode::TooLarge, "alpha denominator above 64");
    return {static_cast<unsigned>(num), static_cast<unsigned>(den)};
}

// e1 / v1^(1+alpha) > e2 / v2^(1+alpha)
bool ratio_greater(std::size_t e1, std::size_t v1, std::size_t e2, std::size_t v2, AlphaParts a) {
    const BigInt lhs = pow(BigInt(e1), a.q) * pow(BigInt(v2), a.q + a.p);
    const BigInt rhs = pow(BigInt(e2), a.q) * pow(BigInt(v1), a.q + a.p);
    return lhs > rhs;
}

// e >= c * v^(1+alpha)
bool density_at_least(std::size_t e, std::size_t v, const Rational& c, AlphaParts a) {
    return pow(Rational(e), a.q) >= pow(c, a.q) * Rational(pow(BigInt(v), a.q + a.p));
}

std::size_t induced_edges(const Graph& g, const VertexSet& s) {
    std::size_t twice = 0;
    s.for_each([&](Vertex v) { twice += g.neighbors(v).count_and(s); });
    return twice / 2;
}

std::vector<Vertex> peel_by_ratio(const Graph& g, AlphaParts a) {
    const std::size_t n = g.order();
    VertexSet alive = g.all_vertices();
    std::vector<std::size_t> deg = g.degrees();
    std::size_t e = g.edge_count();
    std::vector<Vertex> order;
    std::size_t best_size = n;
    std::size_t best_e = e;
    for (std::size_t size = n; size > 1; --size) {
        Vertex victim = VertexSet::npos;
        alive.for_each([&](Vertex v) {
            if (victim == VertexSet::npos || deg[v] < deg[victim]) victim = v;
        });
        alive.reset(victim);
        order.push_back(victim);
        e -= deg[victim];
        g.neighbors(victim).for_each([&](Vertex w) {
            if (alive.test(w)) --deg[w];
        });
        if (ratio_greater(e, size - 1, best_e, best_size, a)) {
            best_size = size - 1;
            best_e = e;
        }
    }
    VertexSet keep = g.all_vertices();
    for (std::size_t i = 0; i < n - best_size; ++i) keep.reset(order[i]);
    return keep.to_vector();
}

std::vector<Vertex> scan_by_ratio(const Graph& g, AlphaParts a) {
    const std::size_t n = g.order();
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    std::uint64_t best = full;
    std::size_t best_e = g.edge_count();
    std::size_t best_v = n;
    std::vector<std::uint64_t> rows(n);
    for (Vertex v = 0; v < n; ++v) rows[v] = n == 0 ? 0 : g.neighbors(v).words()[0];
    for (std::uint64_t mask = 1; mask < full; ++mask) {
        std::size_t twice = 0;
        for (std::uint64_t bits = mask; bits != 0; bits &= bits - 1)
            twice += static_cast<std::size_t>(std::popcount(rows[std::countr_zero(bits)] & mask));
        const std::size_t v = static_cast<std::size_t>(std::popcount(mask));
        if (ratio_greater(twice / 2, v, best_e, best_v, a)) {
            best = mask;
            best_e = twice / 2;
            best_v = v;
        }
    }
    std::vector<Vertex> out;
    for (Vertex v = 0; v < n; ++v)
        if ((best >> v) & 1U) out.push_back(v);
    return out;
}

Bipartition restrict_bipartition(const Bipartition& b, const std::vector<Vertex>& vertices) {
    std::vector<Side> sides;
    sides.reserve(vertices.size());
    for (Vertex v : vertices) sides.push_back(b.side(v));
    return Bipartition(b.graph().induced(vertices), std::move(sides));
}

// Exhaustive search for an induced alternating cycle of length len starting
// on side A. v0 is the smallest A-vertex of the cycle and path[1] < path.back().
class CycleDfs {
public:
    CycleDfs(const Bipartition& b, std::size_t len, std::uint64_t budget)
        : g_(b.graph()), cross_(b.crossing()), a_(b.side_set(Side::A)), len_(len), budget_(budget) {}

    bool run() {
        const std::size_t n = g_.order();
        VertexSet low_a(n);
        for (Vertex v0 = a_.first(); v0 != VertexSet::npos; v0 = a_.next(v0)) {
            low_a.set(v0);
            path_.assign(1, v0);
            if (extend(low_a)) return true;
            if (exhausted_) return false;
        }
        return false;
    }

    bool exhausted() const { return exhausted_; }
    const std::vector<Vertex>& cycle() const { return path_; }

private:
    // blocked: path vertices, A-vertices <= v0, and neighbours of every path
    // vertex other than v0 and the last one.
    bool extend(const VertexSet& blocked) {
        if (++nodes_ > budget_) {
            exhausted_ = true;
            return false;
        }
        const Vertex v0 = path_.front();
        const Vertex last = path_.back();
        const std::size_t d = path_.size();
        VertexSet cand = cross_.neighbors(last) - blocked;
        const bool closing = d + 1 == len_;
        if (closing)
            cand &= cross_.neighbors(v0);
        else if (d >= 2)
            cand -= g_.neighbors(v0);
        for (Vertex x = cand.first(); x != VertexSet::npos; x = cand.next(x)) {
            if (closing) {
                if (path_[1] < x) {
                    path_.push_back(x);
                    return true;
                }
                continue;
            }
            VertexSet next = blocked;
            next.set(x);
            if (d >= 2) next |= g_.neighbors(last);
            path_.push_back(x);
            if (extend(next)) return true;
            path_.pop_back();
            if (exhausted_) return false;
        }
        return false;
    }

    const Graph& g_;
    const Graph& cross_;
    const VertexSet& a_;
    std::size_t len_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
    std::vector<Vertex> path_;
};

bool is_induced_cycle(const Graph& g, const std::vector<Vertex>& c) {
    const std::size_t m = c.size();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            const bool consecutive = j == i + 1 || (i == 0 && j == m - 1);
            if (g.adjacent(c[i], c[j]) != consecutive) return false;
        }
    return true;
}

void note(std::vector<std::string>* log, std::string line) {
    if (log) log->push_back(std::move(line));
}

std::vector<std::size_t> greedy_disjoint(std::size_t count, const std::vector<VertexSet>& interiors) {
    std::vector<std::size_t> chosen;
    for (std::size_t i = 0; i < count; ++i) {
        bool ok = true;
        for (std::size_t j : chosen)
            if (interiors[i].intersects(interiors[j])) {
                ok = false;
                break;
            }
        if (ok) chosen.push_back(i);
    }
    return chosen;
}

Graph cube_graph() {
    Graph q(8);
    for (Vertex x = 0; x < 8; ++x)
        for (unsigned bit = 0; bit < 3; ++bit) {
            const Vertex y = x ^ (Vertex{1} << bit);
            if (x < y) q.add_edge(x, y);
        }
    return q;
}

}  // namespace

Rational CycleParams::alpha_value() const {
    if (alpha) {
        if (*alpha <= 0 || *alpha > 1) throw Error(ErrorCode::BadSpec, "alpha must lie in (0, 1]");
        return *alpha;
    }
    if (k == 0) throw Error(ErrorCode::BadSpec, "k must be positive");
    return Rational(1, static_cast<long long>(k));
}

BigInt CycleParams::k0_value() const {
    const BigInt e = ceil(Rational(3) / alpha_value());
    return pow(BigInt(2), static_cast<unsigned>(e) + 2);
}

Rational CycleParams::k_value() const {
    if (K) return *K;
    const BigInt e = ceil(Rational(3) / alpha_value());
    return Rational(pow(BigInt(2), static_cast<unsigned>(e) + 5));
}

Count hom_cycle_count(const Graph& g, std::size_t k) {
    if (k == 0) throw Error(ErrorCode::BadSpec, "k must be positive");
    const std::size_t n = g.order();
    Count total = 0;
    std::vector<Count> cur(n), nxt(n);
    for (Vertex v = 0; v < n; ++v) {
        std::fill(cur.begin(), cur.end(), Count{0});
        cur[v] = 1;
        for (std::size_t step = 0; step < k; ++step) {
            for (Vertex w = 0; w < n; ++w) {
                Count sum = 0;
                g.neighbors(w).for_each([&](Vertex x) { sum = checked_add(sum, cur[x]); });
                nxt[w] = sum;
            }
            cur.swap(nxt);
        }
        for (Vertex u = 0; u < n; ++u) total = checked_add(total, checked_mul(cur[u], cur[u]));
    }
    return total;
}

CycleSplit nondegenerate_cycle_count(const Graph& g, std::size_t k, std::uint64_t cost_limit) {
    if (k < 2) throw Error(ErrorCode::BadSpec, "k must be at least 2");
    const std::size_t n = g.order();
    if (walk_cost(n, g.max_degree(), 2 * k - 1) > cost_limit)
        throw Error(ErrorCode::TooLarge, "exhaustive cycle count over the cost limit");
    const std::size_t len = 2 * k;
    Count nondeg = 0;
    std::vector<Vertex> path;
    VertexSet used(n);
    auto dfs = [&](auto&& self) -> void {
        const Vertex last = path.back();
        if (path.size() == len) {
            if (g.adjacent(last, path.front())) nondeg = checked_add(nondeg, 1);
            return;
        }
        const VertexSet cand = g.neighbors(last) - used;
        cand.for_each([&](Vertex x) {
            used.set(x);
            path.push_back(x);
            self(self);
            path.pop_back();
            used.reset(x);
        });
    };
    for (Vertex v = 0; v < n; ++v) {
        used.set(v);
        path.assign(1, v);
        dfs(dfs);
        used.reset(v);
    }
    const Count hom = hom_cycle_count(g, k);
    return {nondeg, hom - nondeg};
}

bool sidorenko_holds(const Graph& g, std::size_t k, Count hom) {
    const std::size_t n = g.order();
    if (n == 0) return true;
    const unsigned e2k = static_cast<unsigned>(2 * k);
    return to_big(hom) * pow(BigInt(n), e2k) >= pow(BigInt(2 * g.edge_count()), e2k);
}

bool janzer_bound_holds(const Graph& g, std::size_t k, Count degenerate, Count hom) {
    const unsigned kk = static_cast<unsigned>(k);
    const BigInt lhs = pow(to_big(degenerate), 2 * kk);
    const BigInt rhs = pow(BigInt(32), 2 * kk) * pow(BigInt(k), 3 * kk) * pow(BigInt(g.max_degree()), kk) *
                       BigInt(g.order()) * pow(to_big(hom), 2 * kk - 1);
    return lhs <= rhs;
}

AlmostRegularResult almost_regular_subgraph(const Graph& g, const CycleParams& p) {
    const AlphaParts a = split_alpha(p.alpha_value());
    const std::size_t n = g.order();
    AlmostRegularResult out;
    out.K = p.k_value();
    out.precondition_held = n > 0 && density_at_least(g.edge_count(), n, p.C, a);
    if (!out.precondition_held && !p.overrides)
        throw Error(ErrorCode::PreconditionFailed, "e(G) < C n^(1+alpha)");

    std::vector<Vertex> best;
    if (n == 0) {
    } else if (n <= 14) {
        out.exact_maximal = true;
        best = scan_by_ratio(g, a);
    } else {
        best = peel_by_ratio(g, a);
    }

    const Graph g1 = g.induced(best);
    const Rational d1 = g1.average_degree();
    const Rational k0(p.k0_value());
    VertexSet keep(g1.order());
    for (Vertex v = 0; v < g1.order(); ++v)
        if (Rational(g1.degree(v)) < k0 * d1) keep.set(v);

    const Rational threshold = Graph(g1.induced(keep)).average_degree() / 4;
    std::vector<std::size_t> deg(g1.order());
    keep.for_each([&](Vertex v) { deg[v] = g1.neighbors(v).count_and(keep); });
    for (bool changed = true; changed;) {
        changed = false;
        for (Vertex v = keep.first(); v != VertexSet::npos; v = keep.next(v)) {
            if (Rational(deg[v]) > threshold) continue;
            keep.reset(v);
            g1.neighbors(v).for_each([&](Vertex w) {
                if (keep.test(w)) --deg[w];
            });
            changed = true;
        }
    }

    keep.for_each([&](Vertex v) { out.vertices.push_back(best[v]); });
    out.graph = g.induced(out.vertices);
    const std::size_t m = out.graph.order();
    if (m > 0) {
        out.almost_regular = Rational(out.graph.max_degree()) <= out.K * Rational(out.graph.min_degree());
        out.dense = density_at_least(out.graph.edge_count(), m, p.C / 4, a);
    }
    return out;
}

PathStats alternating_path_stats(const Bipartition& b, Vertex u, Vertex v, std::size_t k, bool materialize,
                                 std::uint64_t pair_budget) {
    const Graph& g = b.graph();
    const Graph& cross = b.crossing();
    const std::size_t n = g.order();
    if (u >= n || v >= n || u == v) throw Error(ErrorCode::BadSpec, "path endpoints must be distinct vertices");
    if (k == 0) throw Error(ErrorCode::BadSpec, "k must be positive");

    const std::uint64_t path_cap = std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::sqrt(double(pair_budget))));
    std::vector<std::vector<Vertex>> paths;
    std::vector<Vertex> path{u};
    VertexSet used(n);
    used.set(u);
    used.set(v);
    auto dfs = [&](auto&& self) -> void {
        const Vertex last = path.back();
        if (path.size() == k) {
            if (cross.adjacent(last, v)) {
                if (paths.size() >= path_cap) throw Error(ErrorCode::CostGuard, "too many alternating paths");
                path.push_back(v);
                paths.push_back(path);
                path.pop_back();
            }
            return;
        }
        const VertexSet cand = cross.neighbors(last) - used;
        cand.for_each([&](Vertex x) {
            used.set(x);
            path.push_back(x);
            self(self);
            path.pop_back();
            used.reset(x);
        });
    };
    dfs(dfs);

    PathStats st;
    st.u = u;
    st.v = v;
    st.P = paths.size();
    std::vector<VertexSet> interior(paths.size(), VertexSet(n));
    std::vector<VertexSet> reach(paths.size(), VertexSet(n));
    for (std::size_t i = 0; i < paths.size(); ++i)
        for (std::size_t j = 1; j + 1 < paths[i].size(); ++j) {
            interior[i].set(paths[i][j]);
            reach[i] |= g.neighbors(paths[i][j]);
        }
    st.A = st.P;
    for (std::size_t i = 0; i < paths.size(); ++i)
        for (std::size_t j = i + 1; j < paths.size(); ++j) {
            if (interior[i].intersects(interior[j])) st.A += 2;
            if (reach[i].intersects(interior[j])) st.B += 2;
        }
    if (materialize) st.paths = std::move(paths);
    return st;
}

Rational red_blue_default_delta(const Rational& c, std::size_t t) {
    if (c <= 0) throw Error(ErrorCode::BadSpec, "c must be positive");
    const Rational tt = Rational(t) * t;
    Rational x = 1;
    for (int i = 0; i < 4096; ++i, x *= 2)
        if (c * c * c * x * x * Rational(4, 1000) - c * c * x * Rational(7, 100) - tt > 0) return 1 / x;
    throw Error(ErrorCode::TooLarge, "no admissible delta");
}

RedBlueResult red_blue_select(std::size_t n, const std::vector<Edge>& red, const std::vector<Edge>& blue,
                              const Rational& c, std::size_t t, std::uint64_t seed, std::size_t retries,
                              std::optional<Rational> delta) {
    if (n == 0) throw Error(ErrorCode::PreconditionFailed, "empty ground set");
    Graph r(n), bl(n);
    auto fill = [&](Graph& h, const std::vector<Edge>& es) {
        for (auto [x, y] : es) {
            if (x >= n || y >= n || x == y) throw Error(ErrorCode::BadSpec, "edge outside the ground set");
            h.add_edge(x, y);
        }
    };
    fill(r, red);
    fill(bl, blue);

    RedBlueResult out;
    out.delta = delta ? *delta : red_blue_default_delta(c, t);
    const Rational nn(n);
    if (Rational(r.edge_count()) > out.delta * nn * nn)
        throw Error(ErrorCode::PreconditionFailed, "more than delta n^2 red edges");
    if (Rational(bl.edge_count()) < c * nn * nn)
        throw Error(ErrorCode::PreconditionFailed, "fewer than c n^2 blue edges");
    if (nn <= c / out.delta) throw Error(ErrorCode::PreconditionFailed, "n <= c / delta");
    out.p = c / (out.delta * 10 * nn);
    const BigInt two64 = BigInt(1) << 64;
    const BigInt th = floor(out.p * Rational(two64));
    const std::uint64_t threshold = th >= two64 ? kSaturated : static_cast<std::uint64_t>(th);

    std::vector<Edge> red_sorted = r.edges();
    const Rational tt = Rational(t) * t;
    const Rational half_c = c / 2;
    const Rng base(seed, 0x72656462);
    for (std::size_t attempt = 0; attempt < retries; ++attempt) {
        Rng rng = base.split(attempt);
        VertexSet s(n);
        for (std::size_t i = 0; i < n; ++i)
            if (rng() < threshold) s.set(i);
        const std::size_t size = s.count();
        const std::size_t eb = induced_edges(bl, s);
        const std::size_t er = induced_edges(r, s);
        const Rational ss = Rational(size) * size;
        if (!(Rational(eb) > half_c * ss + Rational(size) * er + tt)) continue;
        for (auto [x, y] : red_sorted)
            if (s.test(x) && s.test(y)) s.reset(std::max(x, y));
        const std::size_t kept = s.count();
        if (kept < t || induced_edges(r, s) != 0) continue;
        if (Rational(induced_edges(bl, s)) < half_c * Rational(kept) * kept) continue;
        out.selected = s.to_vector();
        out.attempts = attempt + 1;
        return out;
    }
    throw Error(ErrorCode::RetriesExhausted, "no sample passed the red/blue test");
}

Witness find_induced_alternating_cycle(const Bipartition& b, std::size_t k, std::size_t s, const CycleParams& p,
                                       std::uint64_t seed, std::vector<std::string>* log) {
    if (k < 2) throw Error(ErrorCode::BadSpec, "k must be at least 2");
    {
        CycleDfs dfs(b, 2 * k, p.search_budget);
        if (dfs.run()) {
            note(log, "direct search found an induced cycle");
            return InducedCycle{dfs.cycle()};
        }
        if (!dfs.exhausted()) {
            note(log, "direct search exhausted the graph");
            return NotFound{"direct", "no induced alternating C" + std::to_string(2 * k)};
        }
        note(log, "direct search over budget; running the pipeline");
    }

    CycleParams cp = p;
    cp.k = k;
    cp.alpha = Rational(1, static_cast<long long>(k));
    cp.overrides = true;
    const AlmostRegularResult ar = almost_regular_subgraph(b.crossing(), cp);
    note(log, "almost-regular subgraph on " + std::to_string(ar.vertices.size()) + " vertices, precondition " +
                  (ar.precondition_held ? "held" : "overridden"));
    if (ar.vertices.size() < 2) return NotFound{"almost-regular", "fewer than two vertices survive"};
    const Bipartition h = restrict_bipartition(b, ar.vertices);
    const std::size_t m = h.graph().order();

    std::uint64_t spent = 0;
    PathStats best;
    bool have = false;
    for (Vertex u = 0; u < m; ++u)
        for (Vertex v = u + 1; v < m; ++v) {
            if (spent > p.pair_budget) throw Error(ErrorCode::CostGuard, "path-pair statistics over budget");
            PathStats st = alternating_path_stats(h, u, v, k, false, p.pair_budget - spent);
            spent += st.P * st.P + 1;
            if (!have || st.B > best.B || (st.B == best.B && st.A < best.A)) {
                best = std::move(st);
                have = true;
            }
        }
    if (!have || best.P < 2) return NotFound{"pair", "no vertex pair joined by two alternating paths"};
    PathStats chosen = alternating_path_stats(h, best.u, best.v, k, true, p.pair_budget);
    note(log, "pair (" + std::to_string(ar.vertices[best.u]) + ", " + std::to_string(ar.vertices[best.v]) +
                  ") with P=" + std::to_string(chosen.P) + " A=" + std::to_string(chosen.A) +
                  " B=" + std::to_string(chosen.B));

    const std::size_t count = chosen.paths.size();
    std::vector<VertexSet> interior(count, VertexSet(m)), reach(count, VertexSet(m));
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 1; j + 1 < chosen.paths[i].size(); ++j) {
            interior[i].set(chosen.paths[i][j]);
            reach[i] |= h.graph().neighbors(chosen.paths[i][j]);
        }
    std::vector<Edge> red, blue;
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = i + 1; j < count; ++j) {
            if (interior[i].intersects(interior[j])) red.emplace_back(i, j);
            if (reach[i].intersects(interior[j])) blue.emplace_back(i, j);
        }

    std::vector<std::size_t> selected;
    const std::size_t t = p.selection_size.value_or(std::max<std::size_t>(2, 2 * s));
    try {
        selected = red_blue_select(count, red, blue, Rational(1, static_cast<long long>(32 * k)), t, seed).selected;
        note(log, "red/blue selection kept " + std::to_string(selected.size()) + " paths");
    } catch (const Error& e) {
        selected = greedy_disjoint(count, interior);
        note(log, std::string("red/blue selection failed (") + e.what() + "); greedy disjoint selection kept " +
                      std::to_string(selected.size()) + " paths");
    }

    for (std::size_t i = 0; i < selected.size(); ++i)
        for (std::size_t j = i + 1; j < selected.size(); ++j) {
            const auto& p1 = chosen.paths[selected[i]];
            const auto& p2 = chosen.paths[selected[j]];
            if (interior[selected[i]].intersects(interior[selected[j]])) continue;
            std::vector<Vertex> cyc(p1.begin(), p1.end());
            for (std::size_t x = p2.size() - 2; x >= 1; --x) cyc.push_back(p2[x]);
            if (!is_induced_cycle(h.graph(), cyc)) continue;
            if (h.side(cyc[0]) != Side::A) std::rotate(cyc.begin(), cyc.begin() + 1, cyc.end());
            for (Vertex& x : cyc) x = ar.vertices[x];
            note(log, "glued an induced cycle from two paths");
            return InducedCycle{cyc};
        }

    VertexSet f(m);
    for (std::size_t i : selected)
        for (Vertex x : chosen.paths[i]) f.set(x);
    const std::vector<Vertex> fv = f.to_vector();
    Witness w = find_kss(h.graph().induced(fv), s);
    if (auto* bc = std::get_if<Biclique>(&w)) {
        for (Vertex& x : bc->left) x = ar.vertices[fv[x]];
        for (Vertex& x : bc->right) x = ar.vertices[fv[x]];
        note(log, "no glued cycle is induced; found K_{s,s} among the selected paths");
        return w;
    }
    return NotFound{"glue", "no induced glued cycle and no K_{s,s} among the selected paths"};
}

PathCount induced_path_fraction(const Bipartition& b, std::size_t k, std::uint64_t cost_limit) {
    if (k == 0) throw Error(ErrorCode::BadSpec, "k must be positive");
    const Graph& g = b.graph();
    const Graph& cross = b.crossing();
    const std::size_t n = g.order();
    if (walk_cost(n, cross.max_degree(), k) > cost_limit)
        throw Error(ErrorCode::CostGuard, "path enumeration over the cost limit");
    PathCount out;
    std::vector<Vertex> path;
    VertexSet used(n);
    auto dfs = [&](auto&& self, bool induced) -> void {
        if (path.size() == k + 1) {
            ++out.total;
            if (induced) ++out.induced;
            return;
        }
        const Vertex last = path.back();
        const VertexSet cand = cross.neighbors(last) - used;
        cand.for_each([&](Vertex x) {
            bool still = induced;
            for (std::size_t i = 0; still && i + 1 < path.size(); ++i)
                if (g.adjacent(path[i], x)) still = false;
            used.set(x);
            path.push_back(x);
            self(self, still);
            path.pop_back();
            used.reset(x);
        });
    };
    for (Vertex v = 0; v < n; ++v) {
        used.set(v);
        path.assign(1, v);
        dfs(dfs, true);
        used.reset(v);
    }
    return out;
}

Witness find_induced_cube(const Graph& g, std::size_t s, const CycleParams& p, std::uint64_t seed,
                          std::vector<std::string>* log) {
    (void)s;
    (void)seed;
    const std::size_t n = g.order();
    const Bipartition b(g, local_max_cut(g));
    const Graph& cross = b.crossing();

    struct Candidate {
        std::uint64_t paths;
        Vertex u;
        Vertex v;
    };
    std::vector<Candidate> pairs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            if (g.adjacent(u, v)) continue;
            std::uint64_t count = 0;
            const VertexSet far_v = cross.neighbors(v) - g.neighbors(u);
            (cross.neighbors(u) - g.neighbors(v)).for_each([&](Vertex a) { count += cross.neighbors(a).count_and(far_v); });
            if (count >= 6) pairs.push_back({count, u, v});
        }
    std::sort(pairs.begin(), pairs.end(), [](const Candidate& x, const Candidate& y) {
        if (x.paths != y.paths) return x.paths > y.paths;
        return std::pair(x.u, x.v) < std::pair(y.u, y.v);
    });
    note(log, std::to_string(pairs.size()) + " non-adjacent pairs with at least six induced alternating 3-paths");

    std::uint64_t spent = 0;
    for (const Candidate& c : pairs) {
        if (spent > p.search_budget) break;
        const VertexSet u_side = cross.neighbors(c.u) - g.neighbors(c.v);
        const VertexSet v_side = cross.neighbors(c.v) - g.neighbors(c.u);
        VertexSet u_used(n), v_used(n);
        u_side.for_each([&](Vertex a) {
            const VertexSet bs = cross.neighbors(a) & v_side;
            if (!bs.empty()) {
                u_used.set(a);
                v_used |= bs;
            }
        });
        std::vector<Vertex> verts = (u_used | v_used).to_vector();
        std::vector<Side> sides;
        for (Vertex x : verts) sides.push_back(u_used.test(x) ? Side::A : Side::B);
        // U-V edges of G may be non-crossing for the cut; any induced
        // alternating C6 between U and V completes the cube.
        const Bipartition local(g.induced(verts), sides);
        CycleDfs dfs(local, 6, p.search_budget - spent);
        const bool ok = dfs.run();
        spent += p.search_budget / 64 + 1;
        if (!ok) continue;
        const std::vector<Vertex>& cyc = dfs.cycle();
        InducedCopy copy;
        copy.map.assign(8, 0);
        static constexpr Vertex label[6] = {1, 3, 2, 6, 4, 5};
        for (std::size_t i = 0; i < 6; ++i) copy.map[label[i]] = verts[cyc[i]];
        copy.map[0] = c.u;
        copy.map[7] = c.v;
        note(log, "cube through the pair (" + std::to_string(c.u) + ", " + std::to_string(c.v) + ")");
        return copy;
    }

    if (walk_cost(n, g.max_degree(), 7) > p.search_budget)
        throw Error(ErrorCode::CostGuard, "direct cube search over budget");
    note(log, "falling back to a direct induced copy search");
    return find_induced_copy(g, cube_graph());
}

}  // namespace indturan
