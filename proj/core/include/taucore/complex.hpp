#ifndef TAUCORE_COMPLEX_HPP
#define TAUCORE_COMPLEX_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "taucore/vertex_set.hpp"

namespace tauv {

/// Immutable abstract simplicial complex on a fixed ground set of size n <= 63,
/// stored by its inclusion-maximal faces. Downward closure is implicit.
///
/// Zero facets represent the empty complex {∅} (the complex whose only face is
/// the empty set). The void complex (no faces at all) is not representable.
/// Ground-set elements need not all be used as vertices.
class SimplicialComplex {
  public:
    static constexpr int kMaxGroundSet = 63;

    SimplicialComplex() : n_(0), dim_(-1) {}

    /// Facet masks are maximalized and deduplicated; dim is derived.
    SimplicialComplex(int ground_set_size, std::vector<VertexSet> facets);

    int ground_set_size() const { return n_; }
    int dim() const { return dim_; }
    const std::vector<VertexSet>& facets() const { return facets_; }
    bool is_empty_complex() const { return facets_.empty(); }

    /// Mask of ground-set elements that actually appear in some facet.
    VertexSet used_vertices() const;
    int vertex_count() const { return used_vertices().size(); }

    bool has_face(VertexSet f) const;

    bool operator==(const SimplicialComplex&) const = default;

  private:
    int n_;
    std::vector<VertexSet> facets_;  // sorted ascending by mask
    int dim_;
};

/// Build from 1-based vertex label lists. Throws std::invalid_argument on
/// labels outside 1..n or n > 63.
SimplicialComplex build_complex(const std::vector<std::vector<int>>& facets,
                                int ground_set_size);

/// All faces grouped by dimension: result[k] holds the masks of the k-faces,
/// k = 0..dim, each list sorted ascending. The empty face is implicit.
std::vector<std::vector<std::uint64_t>> faces_by_dim(const SimplicialComplex& c);

struct FVector {
    /// entries[i+1] = f_i, i = -1..d
    std::vector<long long> entries;
    long long f(int i) const { return entries[i + 1]; }
    int dim() const { return static_cast<int>(entries.size()) - 2; }
};

struct FaceVectors {
    FVector f;
    bool h_defined = false;         // h/g only defined for pure complexes
    std::vector<long long> h;       // h_0..h_{d+1}
    std::vector<long long> g;       // g_0..g_{d+1}
};

FVector f_vector(const SimplicialComplex& c);
FaceVectors face_vectors(const SimplicialComplex& c);

/// h from f via the alternating-sum formula (pure d-complex).
std::vector<long long> h_from_f(const FVector& f);
/// f from h, the inverse relation f_j = sum_k C(d+1-k, d-j) h_k.
FVector f_from_h(const std::vector<long long>& h, int d);

/// C[W]; the result lives on W re-indexed to positions 0..|W|-1.
SimplicialComplex induced_subcomplex(const SimplicialComplex& c, VertexSet w);

/// Same restriction but keeping the original ground set/coordinates.
SimplicialComplex restrict_to(const SimplicialComplex& c, VertexSet w);

/// Link of vertex at ground position v, on its own vertex set (the neighbors
/// of v), re-indexed. Throws if v is unused.
SimplicialComplex link(const SimplicialComplex& c, int v);

/// Join; the second factor is relabeled onto fresh ground elements.
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);

struct Classification {
    bool is_pure = false;
    bool is_strongly_connected = false;
    bool is_closed_pseudomanifold = false;
    int neighborliness = 0;  // max k with complete (k-1)-skeleton
};

Classification classify(const SimplicialComplex& c);

/// Inclusion-minimal subsets of the ground set that are not faces.
std::vector<VertexSet> minimal_nonfaces(const SimplicialComplex& c);

/// Drop unused ground elements, re-indexing onto 0..f0-1.
SimplicialComplex on_vertex_set(const SimplicialComplex& c);

/// Same complex on a ground set enlarged by `extra` unused elements.
SimplicialComplex with_ghost_vertices(const SimplicialComplex& c, int extra);

}  // namespace tauv

#endif
