#include <doctest.h>

#include "taucore/constructions.hpp"
#include "taucore/homology.hpp"

using namespace tauv;

namespace {

// Minimal 6-vertex triangulation of the real projective plane.
SimplicialComplex rp2() {
    return build_complex({{1, 2, 5}, {1, 2, 6}, {1, 3, 4}, {1, 3, 6}, {1, 4, 5},
                          {2, 3, 4}, {2, 3, 5}, {2, 4, 6}, {3, 5, 6}, {4, 5, 6}},
                         6);
}

// 7-vertex torus: triangles {i, i+1, i+3} and {i, i+2, i+3} mod 7.
SimplicialComplex torus7() {
    std::vector<std::vector<int>> facets;
    for (int i = 0; i < 7; ++i) {
        facets.push_back({i + 1, (i + 1) % 7 + 1, (i + 3) % 7 + 1});
        facets.push_back({i + 1, (i + 2) % 7 + 1, (i + 3) % 7 + 1});
    }
    return build_complex(facets, 7);
}

}  // namespace

TEST_SUITE("homology") {

TEST_CASE("reduced betti of simplex boundaries") {
    for (int d = 1; d <= 4; ++d) {
        auto b = reduced_betti(boundary_simplex(d), FieldSpec::fp(2));
        for (int i = -1; i <= d; ++i) CHECK(b.beta(i) == (i == d ? 1 : 0));
    }
}

TEST_CASE("reduced betti of degenerate complexes") {
    auto b_empty = reduced_betti(SimplicialComplex(3, {}), FieldSpec::fp(2));
    CHECK(b_empty.beta(-1) == 1);

    auto pt = build_complex({{1}}, 1);
    auto b_pt = reduced_betti(pt, FieldSpec::fp(2));
    CHECK(b_pt.beta(-1) == 0);
    CHECK(b_pt.beta(0) == 0);

    auto two = build_complex({{1}, {2}}, 2);
    CHECK(reduced_betti(two, FieldSpec::fp(2)).beta(0) == 1);
}

TEST_CASE("projective plane separates the fields") {
    auto c = rp2();
    CHECK(classify(c).is_closed_pseudomanifold);

    auto f2 = reduced_betti(c, FieldSpec::fp(2));
    CHECK(f2.beta(1) == 1);
    CHECK(f2.beta(2) == 1);

    auto f3 = reduced_betti(c, FieldSpec::fp(3));
    CHECK(f3.beta(1) == 0);
    CHECK(f3.beta(2) == 0);

    auto q = reduced_betti(c, FieldSpec::rationals());
    CHECK(q.beta(1) == 0);
    CHECK(q.beta(2) == 0);
}

TEST_CASE("torus has two independent cycles over every field") {
    auto c = torus7();
    CHECK(classify(c).is_closed_pseudomanifold);
    for (auto field : {FieldSpec::fp(2), FieldSpec::fp(5), FieldSpec::rationals()}) {
        auto b = reduced_betti(c, field);
        CHECK(b.beta(0) == 0);
        CHECK(b.beta(1) == 2);
        CHECK(b.beta(2) == 1);
    }
}

TEST_CASE("face cache agrees with direct computation on subsets") {
    auto c = rp2();
    FaceCache cache(c);
    for (std::uint64_t w = 0; w < (1u << 6); ++w) {
        auto via_cache = cache.betti_of_subset(VertexSet(w), FieldSpec::fp(2));
        auto direct =
            reduced_betti(restrict_to(c, VertexSet(w)), FieldSpec::fp(2));
        for (int i = -1; i <= 2; ++i) CHECK(via_cache.beta(i) == direct.beta(i));
    }
}

TEST_CASE("sphere boundaries are injective for every induced subcomplex") {
    auto c = boundary_simplex(3);
    FaceCache cache(c);
    for (std::uint64_t w = 0; w < (1u << 5); ++w)
        for (int i = 0; i <= 3; ++i)
            CHECK(inclusion_injective(cache, VertexSet(w), i, FieldSpec::fp(2)));
}

TEST_CASE("a non-2-neighborly sphere has a non-injective inclusion") {
    // Any missing edge {u,v} spans a 0-cycle that dies in the sphere.
    auto c = stacked_sphere(3, 7, 3);
    bool found = false;
    FaceCache cache(c);
    for (std::uint64_t w = 0; w < (1u << 7) && !found; ++w)
        for (int i = 0; i <= 3 && !found; ++i)
            if (!inclusion_injective(cache, VertexSet(w), i, FieldSpec::fp(2)))
                found = true;
    CHECK(found);
}

TEST_CASE("injectivity agrees between fp and rational implementations") {
    auto c = rp2();
    FaceCache cache(c);
    for (std::uint64_t w = 0; w < (1u << 6); ++w)
        for (int i = 0; i <= 2; ++i) {
            bool over_q = inclusion_injective(cache, VertexSet(w), i, FieldSpec::rationals());
            bool over_f7 = inclusion_injective(cache, VertexSet(w), i, FieldSpec::fp(7));
            CHECK(over_q == over_f7);
        }
}

}  // TEST_SUITE
