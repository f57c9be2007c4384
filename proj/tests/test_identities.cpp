#include <doctest.h>

#include "taucore/bounds.hpp"
#include "taucore/constructions.hpp"
#include "taucore/graph.hpp"
#include "taucore/identities.hpp"
#include "taucore/tau.hpp"

using namespace tauv;

namespace {
const FieldSpec f2 = FieldSpec::fp(2);
}

TEST_SUITE("identities") {

TEST_CASE("euler relation holds on arbitrary complexes") {
    for (const auto& c :
         {build_complex({{1, 2, 3}, {3, 4}, {5}}, 5), cycle_complex(6), boundary_simplex(4)}) {
        auto rep = verify_identities(c, tau_vector(c, f2));
        auto* e = rep.find("euler");
        REQUIRE(e != nullptr);
        CHECK(e->applicable);
        CHECK(e->holds);
    }
}

TEST_CASE("sphere identities on a 3-sphere") {
    auto c = cycle_join_sphere(5, 3);
    auto rep = verify_identities(c, tau_vector(c, f2));
    CHECK(rep.all_hold());
    for (const char* name : {"euler", "euler-h", "sphere-duality", "odd-sphere-tau",
                             "odd-sphere-h", "three-sphere-tau02", "three-sphere-h",
                             "three-sphere-f", "three-sphere-g"}) {
        auto* e = rep.find(name);
        REQUIRE(e != nullptr);
        CHECK(e->applicable);
        CHECK(e->holds);
    }
}

TEST_CASE("even-dimensional spheres skip the odd-sphere identity") {
    auto c = boundary_simplex(2);
    auto rep = verify_identities(c, tau_vector(c, f2));
    auto* e = rep.find("odd-sphere-tau");
    REQUIRE(e != nullptr);
    CHECK_FALSE(e->applicable);
    CHECK(rep.find("sphere-duality")->applicable);
}

TEST_CASE("stacked closed form") {
    for (int d = 2; d <= 4; ++d)
        for (int n = d + 2; n <= d + 7; ++n) {
            auto expect = closed_form_tau(TauFamily::stacked, d, n);
            auto got = tau_vector(stacked_sphere(d, n, 3), f2);
            CHECK(got.entries == expect.entries);
        }
}

TEST_CASE("simplex join closed form") {
    for (int i = 2; i <= 3; ++i)
        for (int j = i; j <= 4; ++j) {
            auto expect = closed_form_tau(TauFamily::simplex_join, i, j);
            auto got = tau_vector(simplex_join_sphere(i, j), f2);
            CHECK(got.entries == expect.entries);
        }
}

TEST_CASE("cycle join closed form") {
    for (int d = 3; d <= 4; ++d)
        for (int m = 3; m <= 6; ++m) {
            auto expect = closed_form_tau(TauFamily::cycle_join, m, d);
            auto got = tau_vector(cycle_join_sphere(m, d), f2);
            CHECK(got.entries == expect.entries);
        }
}

TEST_CASE("cycle closed form") {
    for (int m = 3; m <= 12; ++m) {
        auto expect = closed_form_tau(TauFamily::cycle, m);
        auto got = tau_vector(cycle_complex(m), f2);
        CHECK(got.entries == expect.entries);
    }
}

TEST_CASE("stacking shift formula") {
    int d = 3, n = 6, k = 3;
    auto base = stacked_sphere(d, n, 5);
    auto t = tau_vector(base, f2);
    auto m = base;
    for (int step = 0; step < k; ++step) {
        auto flips = enumerate_flips(m);
        REQUIRE(flips.front().i() == 1);
        m = apply_flip(m, flips.front());
    }
    auto expect = stacking_delta_tau(t, d, n, k);
    CHECK(tau_vector(m, f2).entries == expect.entries);
}

TEST_CASE("g2 = 1 envelope endpoints") {
    // Upper endpoint: join of two simplex boundaries; lower: cycle joins.
    int d = 4;
    for (int extra = 0; extra <= 2; ++extra) {
        int n = d + 3 + extra;
        auto b = g2_one_bounds(d, n);
        CHECK(b.tau0_lo <= b.tau0_hi);
        CHECK(b.tau1_lo <= b.tau1_hi);
    }
    // At n = d + 3 the simplex-boundary join realizes the upper endpoint.
    auto j = simplex_join_sphere(2, 3);  // 4-sphere on 7 vertices, g2 = 1
    auto fv = face_vectors(j);
    REQUIRE(fv.h_defined);
    REQUIRE(fv.g[2] == 1);
    auto t = tau_vector(j, f2);
    auto b = g2_one_bounds(4, 7);
    CHECK(t.tau(0) == b.tau0_hi);
    CHECK(t.tau(0) >= b.tau0_lo);
    CHECK(t.tau(1) >= b.tau1_lo);
    CHECK(t.tau(1) <= b.tau1_hi);
}

TEST_CASE("cycle join attains the tau0 lower endpoint") {
    for (int d : {3, 4}) {
        for (int m = 4; m <= 6; ++m) {
            auto s = cycle_join_sphere(m, d);
            auto fv = face_vectors(s);
            REQUIRE(fv.h_defined);
            REQUIRE(fv.g[2] == 1);
            auto t = tau_vector(s, f2);
            auto b = g2_one_bounds(d, s.ground_set_size());
            CHECK(t.tau(0) == b.tau0_lo);
            CHECK(t.tau(d - 1) == b.tau0_lo);
        }
    }
}

TEST_CASE("nearly neighborly upper bound") {
    auto c = boundary_simplex(3);
    auto e = nearly_neighborly_check(c, tau_vector(c, f2).tau(0));
    CHECK(e.applicable);
    CHECK(e.holds);
}

}  // TEST_SUITE

TEST_SUITE("bounds") {

TEST_CASE("bound pair formulas at hand-checked anchors") {
    auto [b1, b2] = mu_bound_pair(10, 30, BoundMode::proven);
    CHECK(b1 == rat(51, 40));
    CHECK(b2 == rat(11, 20));
    // Conjectured mode uses the parameter-4 graph: tau0 = 1/11 here.
    auto [c1, c2] = mu_bound_pair(10, 30, BoundMode::conjectured);
    CHECK(c1 == 1);
    CHECK(c2 == 0);
}

TEST_CASE("feasible-parameter table reproduces the published pairs") {
    struct Expect {
        long long n, e, chi;
        std::pair<long long, long long> proven, conj;
    };
    const std::vector<Expect> expected = {
        {5, 10, 2, {0, 0}, {0, 0}},     {8, 28, 3, {0, 1}, {0, 1}},
        {9, 36, 4, {0, 2}, {0, 2}},     {10, 30, 0, {1, 0}, {1, 0}},
        {11, 36, 0, {1, 1}, {1, 0}},    {11, 41, 2, {1, 2}, {0, 1}},
        {11, 46, 4, {0, 3}, {0, 2}},    {11, 51, 6, {0, 4}, {0, 4}},
        {13, 48, 0, {2, 2}, {1, 1}},    {13, 63, 7, {0, 6}, {0, 6}},
        {13, 78, 14, {0, 12}, {0, 12}}, {14, 46, -4, {3, 1}, {3, 0}},
        {14, 50, -2, {3, 2}, {2, 0}},   {14, 52, -1, {3, 3}, {2, 1}},
        {14, 54, 0, {2, 3}, {2, 2}},    {14, 56, 1, {2, 4}, {2, 3}},
        {14, 60, 3, {2, 5}, {1, 4}},    {14, 62, 4, {2, 6}, {1, 4}},
        {14, 64, 5, {2, 7}, {1, 5}},    {14, 66, 6, {1, 7}, {1, 6}},
        {14, 68, 7, {1, 7}, {1, 7}},    {14, 70, 8, {1, 8}, {0, 7}},
        {14, 72, 9, {1, 9}, {0, 8}},    {14, 74, 10, {0, 9}, {0, 9}},
        {14, 76, 11, {0, 10}, {0, 10}}, {14, 78, 12, {0, 11}, {0, 11}},
        {14, 80, 13, {0, 12}, {0, 11}}, {14, 82, 14, {0, 12}, {0, 12}},
        {14, 84, 15, {0, 13}, {0, 13}}, {14, 86, 16, {0, 14}, {0, 14}},
        {14, 88, 17, {0, 15}, {0, 15}}, {14, 90, 18, {0, 16}, {0, 16}},
        {15, 60, 0, {3, 5}, {2, 3}},    {15, 75, 8, {2, 10}, {1, 8}},
        {15, 105, 24, {0, 22}, {0, 22}},
    };
    auto rows = figure_table();
    REQUIRE(rows.size() == expected.size());
    for (size_t i = 0; i < rows.size(); ++i) {
        CAPTURE(expected[i].n);
        CAPTURE(expected[i].e);
        CHECK(rows[i].link_n == expected[i].n);
        CHECK(rows[i].link_e == expected[i].e);
        CHECK(rows[i].chi == expected[i].chi);
        CHECK(rows[i].proven_pair == expected[i].proven);
        CHECK(rows[i].conjectured_pair == expected[i].conj);
        // f(M) is determined by the link parameters.
        long long f0 = expected[i].n + 1;
        CHECK(rows[i].manifold_f ==
              std::vector<long long>{f0, f0 * expected[i].n / 2, f0 * expected[i].e / 3,
                                     f0 * (expected[i].e - expected[i].n) / 2,
                                     f0 * (expected[i].e - expected[i].n) / 5});
    }
}

TEST_CASE("csv emission is deterministic") {
    auto a = figure_table_csv();
    auto b = figure_table_csv();
    CHECK(a == b);
    CHECK(a.size() == 36);  // header + 35 rows
    CHECK(a[0] ==
          "link_n,link_e,f0,f1,f2,f3,f4,chi,b1_proven,b2_proven,b1_conj,b2_conj");
}

TEST_CASE("tightness inequalities") {
    // chi formula at k = 1 for a 2-neighborly 4-manifold.
    auto e = TightnessInequalities::chi_bound(15, 0, 1);
    CHECK(e.holds);
    auto g = TightnessInequalities::g2_bound(30, 4, 2);
    CHECK(g.holds);
    CHECK_FALSE(TightnessInequalities::g2_bound(10, 4, 2).holds);
    CHECK(TightnessInequalities::tight_neighborly(15, 4, 2).holds);
}

}  // TEST_SUITE
