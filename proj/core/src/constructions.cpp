#include "indturan/constructions.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <map>
#include <string>

#include "indturan/error.hpp"
#include "indturan/field.hpp"
#include "indturan/rng.hpp"
#include "indturan/search.hpp"

namespace indturan {

std::pair<Graph, BlowupMap> blowup(const Graph& g0, std::size_t t) {
    if (t == 0) throw Error(ErrorCode::PreconditionFailed, "blow-up factor must be >= 1");
    const std::size_t n0 = g0.order();
    Graph g(n0 * t);
    BlowupMap map{g0, t, std::vector<Vertex>(n0 * t)};
    for (Vertex v = 0; v < n0; ++v)
        for (std::size_t i = 0; i < t; ++i) {
            map.class_of[v * t + i] = v;
            for (std::size_t j = i + 1; j < t; ++j) g.add_edge(v * t + i, v * t + j);
        }
    for (auto [u, v] : g0.edges())
        for (std::size_t i = 0; i < t; ++i)
            for (std::size_t j = 0; j < t; ++j) g.add_edge(u * t + i, v * t + j);
    return {std::move(g), std::move(map)};
}

Bipartition pp_incidence(unsigned q) {
    const PrimePowerField f(q);
    using E = PrimePowerField::Element;
    // Normalised representatives: first nonzero coordinate equal to 1.
    std::vector<std::array<E, 3>> points;
    for (unsigned x = 0; x < q; ++x)
        for (unsigned y = 0; y < q; ++y)
            for (unsigned z = 0; z < q; ++z) {
                std::array<E, 3> c{static_cast<E>(x), static_cast<E>(y), static_cast<E>(z)};
                auto lead = std::find_if(c.begin(), c.end(), [](E e) { return e != 0; });
                if (lead != c.end() && *lead == 1) points.push_back(c);
            }
    const std::size_t n = points.size();
    Graph g(2 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            E dot = 0;
            for (int c = 0; c < 3; ++c) dot = f.add(dot, f.mul(points[i][c], points[j][c]));
            if (dot == 0) g.add_edge(i, n + j);
        }
    std::vector<Side> sides(2 * n, Side::A);
    std::fill(sides.begin() + static_cast<std::ptrdiff_t>(n), sides.end(), Side::B);
    return Bipartition(std::move(g), std::move(sides));
}

namespace {

std::vector<std::size_t> parse_args(std::string_view body, std::string_view spec) {
    std::vector<std::size_t> out;
    std::string cleaned;
    for (char c : body)
        if (c != '[' && c != ']' && c != ' ') cleaned.push_back(c);
    std::size_t pos = 0;
    while (pos < cleaned.size()) {
        std::size_t end = cleaned.find(',', pos);
        if (end == std::string::npos) end = cleaned.size();
        std::size_t value = 0;
        auto [ptr, ec] = std::from_chars(cleaned.data() + pos, cleaned.data() + end, value);
        if (ec != std::errc{} || ptr != cleaned.data() + end)
            throw Error(ErrorCode::BadSpec, "bad argument in '" + std::string(spec) + "'");
        out.push_back(value);
        pos = end + 1;
    }
    return out;
}

Graph tree_from_pruefer(const std::vector<std::size_t>& seq) {
    const std::size_t n = seq.size() + 2;
    std::vector<std::size_t> degree(n, 1);
    for (auto x : seq) {
        if (x >= n) throw Error(ErrorCode::BadSpec, "Pruefer label out of range");
        ++degree[x];
    }
    Graph g(n);
    for (auto x : seq) {
        Vertex leaf = 0;
        while (degree[leaf] != 1) ++leaf;
        g.add_edge(leaf, x);
        --degree[leaf];
        --degree[x];
    }
    Vertex u = n, v = n;
    for (Vertex w = 0; w < n; ++w)
        if (degree[w] == 1) (u == n ? u : v) = w;
    g.add_edge(u, v);
    return g;
}

}  // namespace

Graph named_graph(std::string_view spec) {
    const auto open = spec.find('(');
    if (open == std::string_view::npos || spec.back() != ')')
        throw Error(ErrorCode::BadSpec, "expected name(args): '" + std::string(spec) + "'");
    const std::string_view name = spec.substr(0, open);
    const auto args = parse_args(spec.substr(open + 1, spec.size() - open - 2), spec);
    auto arity = [&](std::size_t k) {
        if (args.size() != k) throw Error(ErrorCode::BadSpec, "wrong argument count in '" + std::string(spec) + "'");
    };

    if (name == "tree_from_pruefer") return tree_from_pruefer(args);
    if (name == "complete_bipartite") {
        arity(2);
        Graph g(args[0] + args[1]);
        for (Vertex u = 0; u < args[0]; ++u)
            for (Vertex v = 0; v < args[1]; ++v) g.add_edge(u, args[0] + v);
        return g;
    }
    arity(1);
    const std::size_t n = args[0];
    if (name == "empty") return Graph(n);
    if (name == "path") {
        Graph g(n);
        for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
        return g;
    }
    if (name == "cycle") {
        if (n < 3) throw Error(ErrorCode::BadSpec, "cycle needs at least 3 vertices");
        Graph g(n);
        for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
        return g;
    }
    if (name == "complete") {
        Graph g(n);
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
        return g;
    }
    if (name == "hypercube") {
        if (n > 16) throw Error(ErrorCode::BadSpec, "hypercube dimension must be <= 16");
        const std::size_t order = std::size_t{1} << n;
        Graph g(order);
        for (Vertex v = 0; v < order; ++v)
            for (std::size_t bit = 0; bit < n; ++bit)
                if (!(v >> bit & 1U)) g.add_edge(v, v | (std::size_t{1} << bit));
        return g;
    }
    throw Error(ErrorCode::BadSpec, "unknown graph family '" + std::string(name) + "'");
}

namespace {

Graph sample_with_threshold(std::size_t n, const BigInt& threshold, Rng& rng) {
    // threshold is floor(p 2^64) clipped to [0, 2^64]; 2^64 means always.
    const bool always = threshold > BigInt(std::numeric_limits<std::uint64_t>::max());
    const std::uint64_t cut = always ? 0 : static_cast<std::uint64_t>(threshold);
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            const std::uint64_t draw = rng();
            if (always || draw < cut) g.add_edge(u, v);
        }
    return g;
}

}  // namespace

Graph random_graph(std::size_t n, const Rational& p, std::uint64_t seed) {
    if (p < 0 || p > 1) throw Error(ErrorCode::PreconditionFailed, "edge probability must lie in [0,1]");
    Rng rng(seed);
    return sample_with_threshold(n, floor(p * Rational(BigInt(1) << 64)), rng);
}

std::size_t dense_sample_order(std::size_t t, std::size_t s) {
    // Smallest N with N^10 >= s^t.
    const BigInt target = pow(BigInt(s), static_cast<unsigned>(t));
    std::size_t lo = 1, hi = 1;
    while (pow(BigInt(hi), 10) < target) {
        hi *= 2;
        if (hi > (std::size_t{1} << 40)) throw Error(ErrorCode::TooLarge, "sample order overflows");
    }
    while (lo < hi) {
        std::size_t mid = lo + (hi - lo) / 2;
        if (pow(BigInt(mid), 10) >= target) hi = mid;
        else lo = mid + 1;
    }
    return lo;
}

DenseSample random_kss_free_dense(std::size_t t, std::size_t s, std::uint64_t seed, std::size_t trials,
                                  std::optional<std::size_t> min_edges) {
    if (s < 2) throw Error(ErrorCode::PreconditionFailed, "s must be >= 2 (p = 1 - s^-1/2 vanishes at s = 1)");
    if (t == 0) throw Error(ErrorCode::PreconditionFailed, "t must be >= 1");
    const std::size_t n = dense_sample_order(t, s);
    if (n > 5000) throw Error(ErrorCode::PreconditionFailed, "N = ceil(s^(t/10)) exceeds 5000");

    // floor(p 2^64) = 2^64 - ceil(sqrt(2^128 / s))
    const BigInt two64 = BigInt(1) << 64;
    const BigInt ratio = (two64 * two64) / s;
    BigInt root = boost::multiprecision::sqrt(ratio);
    if (root * root != ratio || ratio * s != two64 * two64) root += 1;
    const BigInt threshold = two64 - root;
    const std::size_t independent = (t + 1) / 2;

    DenseSample out;
    out.min_edges = min_edges.value_or((n * n + 3) / 4);
    Rng base(seed);
    for (std::size_t trial = 0; trial < trials; ++trial) {
        Rng rng = base.split(trial);
        Graph g = sample_with_threshold(n, threshold, rng);
        out.trials = trial + 1;
        if (g.edge_count() < out.min_edges) continue;
        if (found(find_kss(g, s))) continue;
        if (independent <= n && !enumerate_independent_sets(g, g.all_vertices(), independent, 1).empty()) continue;
        out.graph = std::move(g);
        return out;
    }
    throw Error(ErrorCode::TrialsExhausted,
                "no verified sample in " + std::to_string(trials) + " trials (N = " + std::to_string(n) + ")");
}

Graph disjoint_copies(const Graph& g, std::size_t n) {
    Graph out(n);
    if (g.order() == 0) return out;
    for (std::size_t base = 0; base < n; base += g.order())
        for (auto [u, v] : g.edges())
            if (base + v < n) out.add_edge(base + u, base + v);
    return out;
}

TraceGadget trace_gadget(std::size_t a, std::size_t k, std::size_t theta) {
    if (a > 20) throw Error(ErrorCode::TooLarge, "trace gadget supports a <= 20");
    std::vector<std::uint32_t> traces;
    for (std::uint32_t mask = 0; mask < (1U << a); ++mask)
        if (static_cast<std::size_t>(std::popcount(mask)) <= k) traces.push_back(mask);
    std::stable_sort(traces.begin(), traces.end(),
                     [](std::uint32_t x, std::uint32_t y) { return std::popcount(x) < std::popcount(y); });
    Graph g(a + traces.size() * theta);
    Vertex next = a;
    for (auto mask : traces)
        for (std::size_t c = 0; c < theta; ++c, ++next)
            for (std::size_t i = 0; i < a; ++i)
                if (mask >> i & 1U) g.add_edge(next, i);
    TraceGadget gadget{std::move(g), {}};
    for (Vertex v = 0; v < a; ++v) gadget.s.push_back(v);
    return gadget;
}

}  // namespace indturan
