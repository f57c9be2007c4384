#ifndef TAUCORE_CANONICAL_HPP
#define TAUCORE_CANONICAL_HPP

#include <vector>

#include "taucore/complex.hpp"

namespace tauv {

/// Canonical labeling of a complex: isomorphic complexes (as facet
/// hypergraphs on their ground sets) produce identical facet lists.
struct CanonicalForm {
    int ground_set_size = 0;
    std::vector<VertexSet> facets;   // relabeled, sorted ascending
    std::vector<int> relabeling;     // old position -> new position

    bool operator==(const CanonicalForm& o) const {
        return ground_set_size == o.ground_set_size && facets == o.facets;
    }
    auto key() const { return std::pair(ground_set_size, facets); }
    bool operator<(const CanonicalForm& o) const { return key() < o.key(); }
};

/// Exact partition-refinement search with individualization backtracking;
/// the result is the minimum relabeled facet list over all leaves, so no
/// hashing and no collisions.
CanonicalForm canonical_form(const SimplicialComplex& c);

}  // namespace tauv

#endif
