#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "taucore/canonical.hpp"
#include "taucore/constructions.hpp"

using namespace tauv;

namespace {

SimplicialComplex permuted(const SimplicialComplex& c, const std::vector<int>& perm) {
    std::vector<VertexSet> facets;
    for (VertexSet f : c.facets()) {
        VertexSet g;
        for (int p : f.positions()) g = g.with(perm[static_cast<size_t>(p)]);
        facets.push_back(g);
    }
    return SimplicialComplex(c.ground_set_size(), std::move(facets));
}

}  // namespace

TEST_SUITE("canonical") {

TEST_CASE("canonical form is invariant under relabeling") {
    std::mt19937_64 rng(123);
    std::vector<SimplicialComplex> samples = {
        cycle_complex(6),
        stacked_sphere(3, 8, 4),
        cycle_join_sphere(5, 3),
        simplex_join_sphere(2, 3),
        build_complex({{1, 2, 3}, {3, 4}, {4, 5}, {5}}, 6),
    };
    for (const auto& c : samples) {
        auto base = canonical_form(c);
        std::vector<int> perm(static_cast<size_t>(c.ground_set_size()));
        std::iota(perm.begin(), perm.end(), 0);
        for (int trial = 0; trial < 100; ++trial) {
            std::shuffle(perm.begin(), perm.end(), rng);
            CHECK(canonical_form(permuted(c, perm)) == base);
        }
    }
}

TEST_CASE("non-isomorphic complexes separate") {
    // Path with 4 edges vs star with 4 edges: same f-vector.
    auto path = build_complex({{1, 2}, {2, 3}, {3, 4}, {4, 5}}, 5);
    auto star = build_complex({{1, 2}, {1, 3}, {1, 4}, {1, 5}}, 5);
    CHECK_FALSE(canonical_form(path) == canonical_form(star));
}

TEST_CASE("relabeling field maps the complex onto its canonical facets") {
    auto c = stacked_sphere(2, 7, 9);
    auto cf = canonical_form(c);
    auto relabeled = permuted(c, cf.relabeling);
    auto sorted = relabeled.facets();
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == cf.facets);
}

TEST_CASE("ghost vertices keep complexes distinguishable after reduction") {
    auto c = cycle_complex(5);
    auto g = canonical_form(with_ghost_vertices(c, 2));
    CHECK(g.ground_set_size == 7);
    // Dropping the ghosts again restores the original canonical facets.
    CHECK(canonical_form(on_vertex_set(with_ghost_vertices(c, 2))) == canonical_form(c));
}

}  // TEST_SUITE
