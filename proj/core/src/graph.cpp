#include "taucore/graph.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <stdexcept>
#include <thread>

namespace tauv {

long long Graph::edge_count() const {
    long long twice = 0;
    for (std::uint64_t row : adj) twice += std::popcount(row);
    return twice / 2;
}

Graph skeleton_graph(const SimplicialComplex& c) {
    SimplicialComplex c0 = on_vertex_set(c);
    Graph g(c0.ground_set_size());
    for (VertexSet f : c0.facets()) {
        auto vs = f.positions();
        for (size_t i = 0; i < vs.size(); ++i)
            for (size_t j = i + 1; j < vs.size(); ++j) g.add_edge(vs[i], vs[j]);
    }
    return g;
}

namespace {

/// Number of connected components of the induced subgraph on `mask`.
int component_count(const Graph& g, std::uint64_t mask) {
    int comps = 0;
    std::uint64_t left = mask;
    while (left) {
        ++comps;
        std::uint64_t frontier = left & -left;
        std::uint64_t seen = frontier;
        while (frontier) {
            std::uint64_t grow = 0;
            for (std::uint64_t b = frontier; b; b &= b - 1)
                grow |= g.adj[static_cast<size_t>(std::countr_zero(b))];
            frontier = grow & mask & ~seen;
            seen |= frontier;
        }
        left &= ~seen;
    }
    return comps;
}

}  // namespace

Rational tau0_graph(const Graph& g, const TauOptions& opt) {
    int n = g.n;
    if (n > opt.cap) throw EnumerationCapExceeded(n, opt.cap);
    const std::uint64_t total = std::uint64_t(1) << n;
    const std::uint64_t chunk = 4096;
    std::atomic<std::uint64_t> next{0};
    int workers = std::max(1, opt.workers);

    std::vector<std::vector<long long>> partial(
        static_cast<size_t>(workers),
        std::vector<long long>(static_cast<size_t>(n) + 1, 0));
    auto run = [&](int wi) {
        auto& s = partial[static_cast<size_t>(wi)];
        for (;;) {
            std::uint64_t start = next.fetch_add(chunk);
            if (start >= total) break;
            std::uint64_t stop = std::min(total, start + chunk);
            for (std::uint64_t mask = start; mask < stop; ++mask)
                if (mask)
                    s[static_cast<size_t>(std::popcount(mask))] +=
                        component_count(g, mask) - 1;
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (int wi = 0; wi < workers; ++wi) pool.emplace_back(run, wi);
        for (auto& t : pool) t.join();
    }
    std::vector<long long> s(static_cast<size_t>(n) + 1, 0);
    for (const auto& p : partial)
        for (size_t k = 0; k < p.size(); ++k) s[k] += p[k];
    Rational acc = 0;
    for (int k = 1; k <= n; ++k)
        if (s[static_cast<size_t>(k)] != 0)
            acc += Rational(s[static_cast<size_t>(k)]) / Rational(binomial(n, k));
    return acc / (n + 1);
}

bool is_peo(const Graph& g, const std::vector<int>& order) {
    std::uint64_t earlier = 0;
    for (int v : order) {
        std::uint64_t back = g.adj[static_cast<size_t>(v)] & earlier;
        for (std::uint64_t b = back; b; b &= b - 1) {
            int u = std::countr_zero(b);
            // back-neighborhood must be a clique
            if ((back & ~g.adj[static_cast<size_t>(u)] & ~(std::uint64_t(1) << u)) != 0)
                return false;
        }
        earlier |= std::uint64_t(1) << v;
    }
    return true;
}

PeoBound peo_bound(const Graph& g, const std::vector<int>& order) {
    PeoBound out;
    std::uint64_t earlier = 0;
    for (int v : order) {
        out.deltas.push_back(
            std::popcount(g.adj[static_cast<size_t>(v)] & earlier));
        earlier |= std::uint64_t(1) << v;
    }
    Rational b = Rational(1, g.n + 1) - 1;
    for (int d : out.deltas)
        b += Rational(1, static_cast<long long>(d + 1) * (d + 2));
    out.bound = b;
    out.is_equality = is_peo(g, order);
    return out;
}

std::optional<std::vector<int>> find_peo(const Graph& g) {
    std::vector<int> order;
    std::vector<int> weight(static_cast<size_t>(g.n), 0);
    std::uint64_t numbered = 0;
    for (int step = 0; step < g.n; ++step) {
        int pick = -1;
        for (int v = 0; v < g.n; ++v) {
            if (numbered >> v & 1) continue;
            if (pick < 0 || weight[static_cast<size_t>(v)] > weight[static_cast<size_t>(pick)])
                pick = v;
        }
        order.push_back(pick);
        numbered |= std::uint64_t(1) << pick;
        for (std::uint64_t b = g.adj[static_cast<size_t>(pick)] & ~numbered; b; b &= b - 1)
            ++weight[static_cast<size_t>(std::countr_zero(b))];
    }
    if (is_peo(g, order)) return order;
    return std::nullopt;
}

InDegreeSequence d_dim_order(const SimplicialComplex& c_in) {
    SimplicialComplex c = on_vertex_set(c_in);
    Classification cls = classify(c);
    if (!cls.is_pure || !cls.is_strongly_connected || c.dim() < 0)
        throw std::invalid_argument(
            "vertex ordering needs a pure, strongly connected complex");
    Graph g = skeleton_graph(c);
    InDegreeSequence out;
    std::uint64_t visited = 0;
    // seed: the lexicographically smallest facet, vertices in label order
    VertexSet seed = c.facets().front();
    for (int v : seed.positions()) {
        out.order.push_back(v);
        out.deltas.push_back(std::popcount(g.adj[static_cast<size_t>(v)] & visited));
        visited |= std::uint64_t(1) << v;
    }
    int n = c.ground_set_size();
    while (std::popcount(visited) < n) {
        // smallest new vertex completing a facet whose other vertices are seen
        int pick = -1;
        for (const VertexSet& f : c.facets()) {
            std::uint64_t fresh = f.bits() & ~visited;
            if (std::popcount(fresh) != 1) continue;
            int v = std::countr_zero(fresh);
            if (pick < 0 || v < pick) pick = v;
        }
        if (pick < 0)
            throw std::logic_error("facet ordering stalled on a strongly connected complex");
        out.order.push_back(pick);
        out.deltas.push_back(std::popcount(g.adj[static_cast<size_t>(pick)] & visited));
        visited |= std::uint64_t(1) << pick;
    }
    return out;
}

std::pair<Graph, BLGraphParams> bl_graph(long long f0, long long f1, int d) {
    if (f0 < d + 1 || f0 > 63)
        throw std::invalid_argument("vertex count out of range");
    long long lo = d * f0 - static_cast<long long>(d + 1) * d / 2;
    long long hi = f0 * (f0 - 1) / 2;
    if (f1 < lo || f1 > hi)
        throw std::invalid_argument("edge count " + std::to_string(f1) +
                                    " infeasible for f0=" + std::to_string(f0) +
                                    ", d=" + std::to_string(d));
    long long k = d + 1;
    while (k < f0 && (k + 1) * k / 2 + (f0 - k - 1) * d <= f1) ++k;
    BLGraphParams p{f0, f1, d, k, 0};
    Graph g(static_cast<int>(f0));
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) g.add_edge(u, v);
    if (k < f0) {
        p.j = f1 - k * (k - 1) / 2 - (f0 - k - 1) * d;
        for (int v = 0; v < p.j; ++v) g.add_edge(static_cast<int>(k), v);
        for (long long w = k + 1; w < f0; ++w)
            for (int v = 0; v < d; ++v) g.add_edge(static_cast<int>(w), v);
    }
    return {g, p};
}

Rational bl_tau0(long long f0, long long f1, int d) {
    auto [g, p] = bl_graph(f0, f1, d);
    if (p.k == f0) return 0;
    return Rational(1, f0 + 1) - Rational(1, p.k + 1) +
           Rational(1, (p.j + 1) * (p.j + 2)) +
           Rational(f0 - p.k - 1) / Rational(static_cast<long long>(d + 1) * (d + 2));
}

Tau0Bounds tau0_bounds_strongly_connected(long long f0, long long f1, int d) {
    Tau0Bounds out;
    out.lower = bl_tau0(f0, f1, d + 1);
    out.upper = bl_tau0(f0, f1, d);
    out.quotient_ok =
        out.lower == 0 ? out.upper == 0
                       : out.upper / out.lower < Rational(d + 3, d + 1);
    return out;
}

Rational binomial_quotient(long long n, long long a, long long b) {
    if (a < 0 || a > b) throw std::invalid_argument("need 0 <= a <= b");
    Rational lhs = 0;
    for (long long k = 0; k <= n; ++k)
        lhs += Rational(binomial(n, k)) / Rational(binomial(n + b, k + a));
    Rational rhs = Rational(n + b + 1) / (Rational(b + 1) * Rational(binomial(b, a)));
    if (lhs != rhs) throw std::logic_error("binomial quotient identity violated");
    return rhs;
}

}  // namespace tauv
