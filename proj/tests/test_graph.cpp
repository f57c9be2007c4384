#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "taucore/constructions.hpp"
#include "taucore/graph.hpp"
#include "taucore/tau.hpp"

using namespace tauv;

TEST_SUITE("graph") {

TEST_CASE("skeleton tau0 agrees with the full enumeration") {
    for (const auto& c : {cycle_complex(7), stacked_sphere(3, 8, 11), cycle_join_sphere(5, 3),
                          simplex_join_sphere(2, 3)}) {
        Rational via_graph = tau0_graph(skeleton_graph(c));
        Rational direct = tau_vector(c, FieldSpec::fp(2)).tau(0);
        CHECK(via_graph == direct);
    }
}

TEST_CASE("peo bound equality on a chordal graph") {
    // A tree is chordal; any leaf-first elimination gives equality.
    Graph g(5);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(1, 3);
    g.add_edge(3, 4);
    auto peo = find_peo(g);
    REQUIRE(peo.has_value());
    auto pb = peo_bound(g, *peo);
    CHECK(pb.is_equality);
    CHECK(pb.bound == tau0_graph(g));
}

TEST_CASE("cycles are not chordal") {
    Graph g(5);
    for (int i = 0; i < 5; ++i) g.add_edge(i, (i + 1) % 5);
    CHECK_FALSE(find_peo(g).has_value());
    // Every ordering strictly overestimates tau0.
    std::vector<int> order(5);
    std::iota(order.begin(), order.end(), 0);
    Rational t0 = tau0_graph(g);
    do {
        auto pb = peo_bound(g, order);
        CHECK_FALSE(pb.is_equality);
        CHECK(pb.bound > t0);
    } while (std::next_permutation(order.begin(), order.end()));
}

TEST_CASE("exhaustive bound check on all graphs with up to 5 vertices") {
    for (int n = 1; n <= 5; ++n) {
        int pairs = n * (n - 1) / 2;
        std::vector<int> order(static_cast<size_t>(n));
        for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
            Graph g(n);
            int bit = 0;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v, ++bit)
                    if (mask >> bit & 1) g.add_edge(u, v);
            Rational t0 = tau0_graph(g);
            std::iota(order.begin(), order.end(), 0);
            do {
                auto pb = peo_bound(g, order);
                CHECK(pb.bound >= t0);
                CHECK(pb.is_equality == (pb.bound == t0));
            } while (std::next_permutation(order.begin(), order.end()));
        }
    }
}

TEST_CASE("d-dimensional construction order of a stacked sphere") {
    auto c = stacked_sphere(3, 9, 13);
    auto seq = d_dim_order(c);
    REQUIRE(seq.deltas.size() == 9);
    for (int i = 0; i < 4; ++i) CHECK(seq.deltas[static_cast<size_t>(i)] == i);
    for (size_t i = 4; i < 9; ++i) CHECK(seq.deltas[i] >= 3);
}

TEST_CASE("reference graph parameters") {
    auto [g, params] = bl_graph(10, 30, 3);
    CHECK(params.k == 7);
    CHECK(params.j == 3);
    CHECK(g.edge_count() == 30);
    CHECK(bl_tau0(10, 30, 3) == rat(51, 440));
    CHECK(tau0_graph(g) == rat(51, 440));

    // Complete graph: the clique swallows everything and tau0 vanishes.
    CHECK(bl_tau0(6, 15, 3) == 0);
}

TEST_CASE("closed form matches enumeration across the feasible range") {
    for (int d = 1; d <= 4; ++d)
        for (long long f0 = d + 2; f0 <= 9; ++f0) {
            long long lo = d * f0 - d * (d + 1) / 2;
            long long hi = f0 * (f0 - 1) / 2;
            for (long long f1 = lo; f1 <= hi; f1 += 3) {
                auto [g, params] = bl_graph(f0, f1, d);
                CHECK(g.edge_count() == f1);
                CHECK(tau0_graph(g) == bl_tau0(f0, f1, d));
            }
        }
}

TEST_CASE("strongly connected tau0 envelope") {
    auto b = tau0_bounds_strongly_connected(10, 30, 3);
    CHECK(b.lower == bl_tau0(10, 30, 4));
    CHECK(b.upper == rat(51, 440));
    CHECK(b.lower <= b.upper);
    CHECK(b.quotient_ok);
}

TEST_CASE("binomial quotient identity") {
    for (long long b = 0; b <= 5; ++b)
        for (long long a = 0; a <= b; ++a)
            for (long long n : {1LL, 4LL, 9LL}) {
                Rational v = binomial_quotient(n, a, b);
                CHECK(v == Rational(n + b + 1) / (Rational(b + 1) * Rational(binomial(b, a))));
            }
}

}  // TEST_SUITE
