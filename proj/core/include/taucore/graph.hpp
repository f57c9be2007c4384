#ifndef TAUCORE_GRAPH_HPP
#define TAUCORE_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "taucore/complex.hpp"
#include "taucore/rational.hpp"
#include "taucore/tau.hpp"

namespace tauv {

/// Simple undirected graph, adjacency stored one bitmask row per vertex.
struct Graph {
    int n = 0;
    std::vector<std::uint64_t> adj;

    explicit Graph(int n_ = 0) : n(n_), adj(static_cast<size_t>(n_), 0) {}

    void add_edge(int u, int v) {
        adj[static_cast<size_t>(u)] |= std::uint64_t(1) << v;
        adj[static_cast<size_t>(v)] |= std::uint64_t(1) << u;
    }
    bool has_edge(int u, int v) const {
        return adj[static_cast<size_t>(u)] >> v & 1;
    }
    long long edge_count() const;
};

/// 1-skeleton on the complex's used vertices (re-indexed). Unused ground
/// elements are dropped: a graph vertex is always a vertex.
Graph skeleton_graph(const SimplicialComplex& c);

/// tau_0 of a graph by subset enumeration; beta~_0 counted by bitmask BFS.
Rational tau0_graph(const Graph& g, const TauOptions& opt = {});

struct PeoBound {
    Rational bound;
    bool is_equality = false;  // order is a perfect elimination ordering
    std::vector<int> deltas;   // back-neighbor counts along the order
};

/// In-degree bound on tau_0 for one vertex ordering; exact at p.e.o.s.
PeoBound peo_bound(const Graph& g, const std::vector<int>& order);

/// Whether each vertex's earlier neighbors (along the order) form a clique.
bool is_peo(const Graph& g, const std::vector<int>& order);

/// Maximum-cardinality-search order (ties to the smallest label), verified;
/// nullopt iff the graph is not chordal.
std::optional<std::vector<int>> find_peo(const Graph& g);

struct InDegreeSequence {
    std::vector<int> order;
    std::vector<int> deltas;
};

/// Vertex order of a pure strongly connected d-complex built facet by facet;
/// the first d+1 entries have back-degrees 0..d and every later one >= d.
InDegreeSequence d_dim_order(const SimplicialComplex& c);

struct BLGraphParams {
    long long f0 = 0, f1 = 0;
    int d = 0;
    long long k = 0;  // clique size
    long long j = 0;  // attachment degree of the one special vertex
};

/// Clique of size k, one vertex joined to j clique vertices, and f0-k-1
/// vertices each joined to a fixed d-subclique.
std::pair<Graph, BLGraphParams> bl_graph(long long f0, long long f1, int d);

/// Closed form for tau_0 of that graph.
Rational bl_tau0(long long f0, long long f1, int d);

struct Tau0Bounds {
    Rational lower, upper;
    bool quotient_ok = false;  // upper/lower < (d+3)/(d+1) when lower > 0
};

/// tau_0 range for strongly connected pure d-complexes with given f0, f1.
Tau0Bounds tau0_bounds_strongly_connected(long long f0, long long f1, int d);

/// Checks and returns sum_k C(n,k)/C(n+b,k+a) = (n+b+1)/((b+1) C(b,a)).
Rational binomial_quotient(long long n, long long a, long long b);

}  // namespace tauv

#endif
