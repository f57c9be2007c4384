#include <doctest.h>

#include <algorithm>
#include <random>

#include "taucore/complex.hpp"
#include "taucore/constructions.hpp"

using namespace tauv;

TEST_SUITE("complex") {

TEST_CASE("facets are maximalized and deduplicated") {
    SimplicialComplex c(4, {VertexSet::from_labels({1, 2}), VertexSet::from_labels({1}),
                            VertexSet::from_labels({1, 2}), VertexSet::from_labels({3})});
    CHECK(c.facets().size() == 2);
    CHECK(c.dim() == 1);
    CHECK(c.has_face(VertexSet::from_labels({1})));
    CHECK(c.has_face(VertexSet{}));
    CHECK_FALSE(c.has_face(VertexSet::from_labels({4})));
}

TEST_CASE("empty complex has the empty face only") {
    SimplicialComplex c(3, {});
    CHECK(c.is_empty_complex());
    CHECK(c.dim() == -1);
    CHECK(c.has_face(VertexSet{}));
    CHECK(f_vector(c).entries == std::vector<long long>{1});
}

TEST_CASE("build_complex validates labels") {
    CHECK_THROWS_AS(build_complex({{1, 0}}, 3), std::invalid_argument);
    CHECK_THROWS_AS(build_complex({{1, 4}}, 3), std::invalid_argument);
    auto c = build_complex({{1, 2, 3}}, 3);
    CHECK(c.dim() == 2);
}

TEST_CASE("f-vector of the boundary 4-simplex") {
    auto c = boundary_simplex(3);
    CHECK(f_vector(c).entries == std::vector<long long>{1, 5, 10, 10, 5});
    auto fv = face_vectors(c);
    REQUIRE(fv.h_defined);
    CHECK(fv.h == std::vector<long long>{1, 1, 1, 1, 1});
    CHECK(fv.g == std::vector<long long>{1, 0, 0, 0, 0});
}

TEST_CASE("h and f determine each other") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        int d = 2 + static_cast<int>(rng() % 3);
        int n = d + 3 + static_cast<int>(rng() % 6);
        auto c = stacked_sphere(d, n, rng());
        auto fv = f_vector(c);
        auto h = h_from_f(fv);
        auto back = f_from_h(h, d);
        CHECK(back.entries == fv.entries);
    }
}

TEST_CASE("induced subcomplex vs restriction") {
    auto c = boundary_simplex(3);
    VertexSet w = VertexSet::from_labels({1, 2, 3});
    auto ind = induced_subcomplex(c, w);
    CHECK(ind.ground_set_size() == 3);
    CHECK(ind.dim() == 2);
    auto res = restrict_to(c, w);
    CHECK(res.ground_set_size() == 5);
    CHECK(res.dim() == 2);
    CHECK(res.used_vertices() == w);
}

TEST_CASE("link of a vertex in a stacked sphere is a sphere") {
    auto c = stacked_sphere(3, 8, 17);
    for (int v = 0; v < 8; ++v) {
        auto lk = link(c, v);
        CHECK(lk.dim() == 2);
        auto cls = classify(lk);
        CHECK(cls.is_closed_pseudomanifold);
    }
}

TEST_CASE("join of boundary simplices") {
    // Two triangle boundaries join to a 3-sphere on 6 vertices.
    auto j = join(boundary_simplex(1), boundary_simplex(1));
    CHECK(j.ground_set_size() == 6);
    CHECK(j.dim() == 3);
    CHECK(classify(j).is_closed_pseudomanifold);

    // Joining with the empty complex changes nothing but the ground set.
    auto e = join(boundary_simplex(2), SimplicialComplex(0, {}));
    CHECK(e.dim() == 2);
    CHECK(f_vector(e).entries == f_vector(boundary_simplex(2)).entries);
}

TEST_CASE("classification flags") {
    auto sphere = boundary_simplex(3);
    auto cls = classify(sphere);
    CHECK(cls.is_pure);
    CHECK(cls.is_strongly_connected);
    CHECK(cls.is_closed_pseudomanifold);
    CHECK(cls.neighborliness == 4);

    // A path of two edges: pure, strongly connected, but has boundary.
    auto path = build_complex({{1, 2}, {2, 3}}, 3);
    auto pc = classify(path);
    CHECK(pc.is_pure);
    CHECK(pc.is_strongly_connected);
    CHECK_FALSE(pc.is_closed_pseudomanifold);

    // Two triangles glued at a vertex: pure but not strongly connected.
    auto wedge = build_complex({{1, 2, 3}, {3, 4, 5}}, 5);
    CHECK_FALSE(classify(wedge).is_strongly_connected);

    auto impure = build_complex({{1, 2, 3}, {4, 5}}, 5);
    CHECK_FALSE(classify(impure).is_pure);
}

TEST_CASE("minimal non-faces of the 4-cycle") {
    auto c4 = cycle_complex(4);
    auto mnf = minimal_nonfaces(c4);
    REQUIRE(mnf.size() == 2);  // the two diagonals
    for (auto f : mnf) CHECK(f.size() == 2);
}

TEST_CASE("minimal non-faces of a simplex boundary") {
    auto c = boundary_simplex(2);
    auto mnf = minimal_nonfaces(c);
    REQUIRE(mnf.size() == 1);
    CHECK(mnf[0] == VertexSet::full(4));
}

TEST_CASE("ghost vertices preserve faces") {
    auto c = cycle_complex(5);
    auto g = with_ghost_vertices(c, 2);
    CHECK(g.ground_set_size() == 7);
    CHECK(g.used_vertices() == c.used_vertices());
    CHECK(on_vertex_set(g).facets() == on_vertex_set(c).facets());
}

}  // TEST_SUITE
