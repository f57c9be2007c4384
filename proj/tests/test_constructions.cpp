#include <doctest.h>

#include <random>
#include <set>

#include "taucore/canonical.hpp"
#include "taucore/constructions.hpp"
#include "taucore/identities.hpp"
#include "taucore/tau.hpp"

using namespace tauv;

namespace {
const FieldSpec f2 = FieldSpec::fp(2);
}

TEST_SUITE("constructions") {

TEST_CASE("gale evenness lower facets at small parameters") {
    // d = 4, n = 6: three lower facets of the cyclic 5-polytope.
    auto b6 = lower_cyclic_facets(4, 6);
    CHECK(b6.facets() == std::vector<VertexSet>{VertexSet::from_labels({1, 2, 3, 4, 5}),
                                                VertexSet::from_labels({1, 2, 3, 5, 6}),
                                                VertexSet::from_labels({1, 3, 4, 5, 6})});
    auto b7 = lower_cyclic_facets(4, 7);
    CHECK(b7.facets().size() == 6);

    // h-vector of the full lower ball: h_i = C(n-d-2+i, i) through the middle
    // entry, zero beyond.
    for (int d = 2; d <= 5; ++d)
        for (int n = d + 2; n <= d + 5; ++n) {
            auto fv = face_vectors(lower_cyclic_facets(d, n));
            REQUIRE(fv.h_defined);
            for (size_t i = 0; i < fv.h.size(); ++i) {
                long long expect =
                    static_cast<long long>(i) <= (d + 1) / 2
                        ? static_cast<long long>(
                              binomial(n - d - 2 + static_cast<long long>(i),
                                       static_cast<long long>(i)))
                        : 0;
                CHECK(fv.h[i] == expect);
            }
        }
}

TEST_CASE("m-sequence recognition") {
    CHECK(m_sequence_check({1}));
    CHECK(m_sequence_check({1, 4, 10}));
    CHECK(m_sequence_check({1, 3, 6, 10}));
    CHECK(m_sequence_check({1, 2, 3, 2}));
    CHECK_FALSE(m_sequence_check({2, 1}));
    CHECK_FALSE(m_sequence_check({1, 2, 4}));
    CHECK_FALSE(m_sequence_check({1, 3, -1}));
}

TEST_CASE("billera-lee ball h-vector equals the requested sequence") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        int d = 4 + static_cast<int>(rng() % 3);  // ball dimension d, sphere d-1
        int n = d + 2 + static_cast<int>(rng() % 6);
        std::vector<long long> k{1};
        long long prev = 1;
        for (int i = 1; i <= d / 2; ++i) {
            long long cap_mac = static_cast<long long>(binomial(prev + i - 1, i));
            long long cap_ball = static_cast<long long>(binomial(n - d - 2 + i, i));
            long long hi = std::min(cap_mac, cap_ball);
            long long v = static_cast<long long>(rng() % static_cast<std::uint64_t>(hi + 1));
            k.push_back(v);
            prev = v;
            if (v == 0) break;
        }
        while (!k.empty() && k.back() == 0) k.pop_back();
        auto r = billera_lee(d, k, n);
        std::vector<long long> expect = k;
        expect.resize(static_cast<size_t>(d) + 2, 0);
        CHECK(r.ball_h == expect);
        CHECK(classify(r.sphere).is_closed_pseudomanifold);
    }
}

TEST_CASE("billera-lee boundary sphere has the prescribed g-vector") {
    for (long long g2 : {0LL, 2LL, 5LL}) {
        auto sphere = billera_lee(4, {1, 3, g2}, 8).sphere;
        auto fv = face_vectors(sphere);
        REQUIRE(fv.h_defined);
        CHECK(fv.g[1] == 3);
        CHECK(fv.g[2] == g2);
    }
}

TEST_CASE("stacked spheres have g2 = 0") {
    for (int d = 2; d <= 4; ++d)
        for (std::uint64_t s : {1ULL, 9ULL}) {
            auto c = stacked_sphere(d, d + 6, s);
            auto fv = face_vectors(c);
            REQUIRE(fv.h_defined);
            if (d >= 3) CHECK(fv.g[2] == 0);
            CHECK(classify(c).is_closed_pseudomanifold);
        }
}

TEST_CASE("flip legality") {
    auto c = boundary_simplex(3);  // facets: all 4-subsets of {1..5}
    // Interior edge swap is illegal on the boundary simplex (every subset is
    // a face), but stacking with a fresh vertex is always available.
    auto flips = enumerate_flips(c);
    int stackings = 0;
    for (const auto& f : flips) {
        CHECK(flip_is_legal(c, f));
        if (f.i() == 1) ++stackings;
    }
    CHECK(stackings == 5);

    FlipDescriptor bogus{VertexSet::from_labels({1}), VertexSet::from_labels({2, 3, 4, 5})};
    CHECK_FALSE(flip_is_legal(c, bogus));  // label 1 is already a vertex
}

TEST_CASE("stacking then unstacking returns the same sphere") {
    auto c = stacked_sphere(3, 7, 21);
    auto flips = enumerate_flips(c);
    REQUIRE(!flips.empty());
    const auto& st = flips.front();
    REQUIRE(st.i() == 1);
    auto bigger = apply_flip(c, st);
    CHECK(bigger.vertex_count() == 8);
    CHECK(classify(bigger).is_closed_pseudomanifold);
    // The inverse flip removes the fresh vertex again.
    FlipDescriptor inverse{st.f2, st.f1};
    REQUIRE(flip_is_legal(bigger, inverse));
    auto back = apply_flip(bigger, inverse);
    CHECK(canonical_form(on_vertex_set(back)) == canonical_form(on_vertex_set(c)));
}

TEST_CASE("flip deltas follow the two-entry rule") {
    // A (2,3)-flip on a 3-sphere: tau_0 down, tau_1 up, tau_1 up... the rule:
    // entries i-2, i-1, j-2, j-1 move, the rest stay fixed.
    std::mt19937_64 rng(77);
    int checked = 0;
    auto m = stacked_sphere(3, 7, 2);
    for (int step = 0; step < 10 && checked < 5; ++step) {
        auto flips = enumerate_flips(m);
        std::vector<FlipDescriptor> usable;
        for (const auto& f : flips)
            if (f.i() >= 2 && f.j() >= 2 && f.i() != f.j()) usable.push_back(f);
        if (usable.empty()) break;
        const auto& f = usable[rng() % usable.size()];
        auto before = tau_vector(m, f2);
        auto after_complex = apply_flip(m, f);
        auto after = tau_vector(after_complex, f2);
        int i = f.i(), j = f.j();
        for (int t = -1; t <= 3; ++t) {
            bool moved = t == i - 2 || t == i - 1 || t == j - 2 || t == j - 1;
            if (!moved) CHECK(after.tau(t) == before.tau(t));
        }
        CHECK(after.tau(i - 2) < before.tau(i - 2));
        CHECK(after.tau(j - 1) < before.tau(j - 1));
        CHECK(after.tau(i - 1) > before.tau(i - 1));
        CHECK(after.tau(j - 2) > before.tau(j - 2));
        m = after_complex;
        ++checked;
    }
    CHECK(checked > 0);
}

TEST_CASE("connected sum of two boundary 4-simplices") {
    auto s = connected_sum(boundary_simplex(3), boundary_simplex(3));
    CHECK(s.vertex_count() == 6);
    CHECK(classify(s).is_closed_pseudomanifold);
    CHECK(tau_vector(s, f2).tau(0) == rat(1, 105));
}

TEST_CASE("connected sum matches the combination formula") {
    std::mt19937_64 rng(55);
    for (int trial = 0; trial < 10; ++trial) {
        int d = 3;
        int n1 = d + 2 + static_cast<int>(rng() % 3);
        int n2 = d + 2 + static_cast<int>(rng() % 3);
        auto a = stacked_sphere(d, n1, rng());
        auto b = stacked_sphere(d, n2, rng());
        auto s = connected_sum(a, b);
        auto expect = connected_sum_tau(tau_vector(a, f2), tau_vector(b, f2), d, n1, n2);
        CHECK(tau_vector(s, f2).entries == expect.entries);
    }
}

TEST_CASE("flip explorer finds the two 6-vertex 3-spheres") {
    // At 6 vertices there are exactly 2 combinatorial types of 3-spheres.
    auto seed = stacked_sphere(3, 6, 1);
    auto r = flip_explore(seed, 100);
    CHECK(r.complete);
    CHECK(r.forms.size() == 2);

    // Budget zero: only the seed is recorded.
    auto r0 = flip_explore(seed, 0);
    CHECK(r0.forms.size() == 1);
    CHECK_FALSE(r0.complete);
}

TEST_CASE("flip explorer reaches all four 7-vertex 3-spheres") {
    auto seed = stacked_sphere(3, 7, 1);
    auto r = flip_explore(seed, 1000);
    CHECK(r.complete);
    CHECK(r.forms.size() == 5);  // 5 combinatorial types at f0 = 7
}

}  // TEST_SUITE
