#ifndef TAUCORE_HOMOLOGY_HPP
#define TAUCORE_HOMOLOGY_HPP

#include <cstdint>
#include <vector>

#include "taucore/complex.hpp"
#include "taucore/field.hpp"
#include "taucore/vertex_set.hpp"

namespace tauv {

struct BettiVector {
    /// entries[i+1] = reduced Betti number in dimension i, i = -1..d
    std::vector<long long> entries;
    long long beta(int i) const {
        int idx = i + 1;
        if (idx < 0 || idx >= static_cast<int>(entries.size())) return 0;
        return entries[static_cast<size_t>(idx)];
    }
    int dim() const { return static_cast<int>(entries.size()) - 2; }
    bool operator==(const BettiVector&) const = default;
};

/// Precomputed face lists and signed boundary incidence for one complex.
/// Read-only after construction; per-subset Betti queries allocate their own
/// scratch, so concurrent use is safe.
class FaceCache {
  public:
    explicit FaceCache(const SimplicialComplex& c);

    const SimplicialComplex& complex() const { return c_; }
    int dim() const { return c_.dim(); }
    /// Masks of the k-faces, sorted ascending; k = 0..dim.
    const std::vector<std::uint64_t>& faces(int k) const {
        return levels_[static_cast<size_t>(k)];
    }
    /// boundary(k)[i] lists (index at level k-1, sign) for face i at level k;
    /// empty for k = 0 (the augmentation row is implicit).
    const std::vector<std::vector<std::pair<int, int>>>& boundary(int k) const {
        return boundaries_[static_cast<size_t>(k)];
    }

    /// Reduced Betti numbers of the induced subcomplex on w.
    BettiVector betti_of_subset(VertexSet w, const FieldSpec& field) const;

  private:
    SimplicialComplex c_;
    std::vector<std::vector<std::uint64_t>> levels_;
    std::vector<std::vector<std::vector<std::pair<int, int>>>> boundaries_;
};

BettiVector reduced_betti(const SimplicialComplex& c, const FieldSpec& field);

/// Whether H_i(C[W]) -> H_i(C) induced by inclusion is injective
/// (reduced homology over the given field).
bool inclusion_injective(const SimplicialComplex& c, VertexSet w, int i,
                         const FieldSpec& field);
/// Same, reusing a prebuilt cache (cheaper inside exhaustive sweeps).
bool inclusion_injective(const FaceCache& fc, VertexSet w, int i,
                         const FieldSpec& field);

}  // namespace tauv

#endif
