#ifndef TAUCORE_CONSTRUCTIONS_HPP
#define TAUCORE_CONSTRUCTIONS_HPP

#include <cstdint>
#include <vector>

#include "taucore/canonical.hpp"
#include "taucore/complex.hpp"

namespace tauv {

/// One bistellar move on a closed d-pseudomanifold. F1 and F2 partition a
/// (d+2)-set F; the facets {F \ x : x in F1} are replaced by
/// {F \ x : x in F2}. Type (i,j) = (|F1|,|F2|); (1,d+1) with a fresh
/// ground-set element is stacking.
struct FlipDescriptor {
    VertexSet f1;  // not a face before the flip; becomes one after
    VertexSet f2;  // face before, not a face after
    int i() const { return f1.size(); }
    int j() const { return f2.size(); }
    VertexSet whole() const { return f1 | f2; }
    bool operator==(const FlipDescriptor&) const = default;
    auto operator<=>(const FlipDescriptor&) const = default;
};

/// Boundary of a (d+1)-simplex: the d-sphere on d+2 vertices.
SimplicialComplex boundary_simplex(int d);

/// Shellable d-ball: lower facets of the cyclic (d+1)-polytope on n vertices
/// by the Gale evenness condition (adjacent index pairs, with a leading 1
/// when d+1 is odd).
SimplicialComplex lower_cyclic_facets(int d, int n);

bool m_sequence_check(const std::vector<long long>& g);

struct BilleraLeeResult {
    SimplicialComplex ball;    // ideal of k_i facets of in-degree i
    SimplicialComplex sphere;  // its boundary, a (d-1)-sphere
    std::vector<long long> ball_h;
};

/// Billera-Lee ball and sphere for an M-sequence k = (k_0, .., k_m),
/// m <= floor(d/2). Requires k_i <= h_i of the full lower-facet ball.
BilleraLeeResult billera_lee(int d, const std::vector<long long>& k, int n);

/// n-vertex stacked d-sphere; facet choices drawn from the seeded RNG.
SimplicialComplex stacked_sphere(int d, int n, std::uint64_t seed);

/// Cycle with m vertices (m >= 3) as a 1-complex.
SimplicialComplex cycle_complex(int m);

/// Boundary-simplex join bdΔ_i * bdΔ_j, i,j >= 2: the (i+j-1)-sphere on
/// i+j+2 vertices.
SimplicialComplex simplex_join_sphere(int i, int j);

/// C_m * bdΔ_{d-1}: a d-sphere on m+d vertices, m >= 3, d >= 3.
SimplicialComplex cycle_join_sphere(int m, int d);

/// Glue along chosen facets; `matching[t]` is the position in facet2 paired
/// with the t-th smallest vertex of facet1.
SimplicialComplex connected_sum(const SimplicialComplex& m1, const SimplicialComplex& m2,
                                VertexSet facet1, VertexSet facet2,
                                const std::vector<int>& matching);
/// Defaults: lexicographically smallest facets, vertices paired in order.
SimplicialComplex connected_sum(const SimplicialComplex& m1, const SimplicialComplex& m2);

/// All legal flips of a closed pseudomanifold, including the fresh-vertex
/// stackings (one per facet, F1 = the first ground position past the end).
std::vector<FlipDescriptor> enumerate_flips(const SimplicialComplex& m);

bool flip_is_legal(const SimplicialComplex& m, const FlipDescriptor& f);

SimplicialComplex apply_flip(const SimplicialComplex& m, const FlipDescriptor& f);

struct FlipExploreResult {
    std::vector<CanonicalForm> forms;  // discovery order
    bool complete = false;             // frontier exhausted within budget
};

/// BFS closure under vertex-count-preserving flips (i,j >= 2) with
/// canonical-form dedup. Best effort: no flip-connectivity assumption, so
/// `complete` only means the search itself finished.
FlipExploreResult flip_explore(const SimplicialComplex& m, long long budget);

}  // namespace tauv

#endif
