#include "taucore/homology.hpp"

#include <algorithm>
#include <bit>

#include "taucore/linalg.hpp"

namespace tauv {

FaceCache::FaceCache(const SimplicialComplex& c) : c_(c), levels_(faces_by_dim(c)) {
    boundaries_.resize(levels_.size());
    for (int k = 1; k < static_cast<int>(levels_.size()); ++k) {
        const auto& below = levels_[static_cast<size_t>(k) - 1];
        auto& rows = boundaries_[static_cast<size_t>(k)];
        rows.resize(levels_[static_cast<size_t>(k)].size());
        for (size_t i = 0; i < levels_[static_cast<size_t>(k)].size(); ++i) {
            std::uint64_t m = levels_[static_cast<size_t>(k)][i];
            int t = 0;
            for (std::uint64_t b = m; b; b &= b - 1, ++t) {
                std::uint64_t sub = m ^ (b & -b);
                auto it = std::lower_bound(below.begin(), below.end(), sub);
                rows[i].emplace_back(static_cast<int>(it - below.begin()),
                                     (t % 2 == 0) ? 1 : -1);
            }
        }
    }
}

namespace {

/// Local face selection for one subset: per level, the indices of faces
/// contained in w plus the global-to-local index map.
struct SubsetFaces {
    std::vector<std::vector<int>> local;          // level -> global indices
    std::vector<std::vector<int>> global_to_local;  // level -> global idx -> local or -1
};

SubsetFaces select_faces(const FaceCache& fc, VertexSet w) {
    SubsetFaces sf;
    int levels = fc.dim() + 1;
    sf.local.resize(static_cast<size_t>(std::max(0, levels)));
    sf.global_to_local.resize(sf.local.size());
    std::uint64_t wb = w.bits();
    for (int k = 0; k < levels; ++k) {
        const auto& faces = fc.faces(k);
        auto& g2l = sf.global_to_local[static_cast<size_t>(k)];
        g2l.assign(faces.size(), -1);
        for (size_t i = 0; i < faces.size(); ++i)
            if ((faces[i] & ~wb) == 0) {
                g2l[i] = static_cast<int>(sf.local[static_cast<size_t>(k)].size());
                sf.local[static_cast<size_t>(k)].push_back(static_cast<int>(i));
            }
    }
    return sf;
}

/// Rank of the level-k boundary restricted to faces in w (k >= 1).
int boundary_rank(const FaceCache& fc, const SubsetFaces& sf, int k,
                  const FieldSpec& field) {
    if (k > fc.dim()) return 0;
    const auto& cols = sf.local[static_cast<size_t>(k)];
    const auto& g2l = sf.global_to_local[static_cast<size_t>(k) - 1];
    int nrows = static_cast<int>(sf.local[static_cast<size_t>(k) - 1].size());
    int ncols = static_cast<int>(cols.size());
    if (nrows == 0 || ncols == 0) return 0;
    const auto& bnd = fc.boundary(k);
    if (!field.is_rational() && field.p == 2) {
        GF2Matrix m(nrows, ncols);
        for (int j = 0; j < ncols; ++j)
            for (auto [gi, sign] : bnd[static_cast<size_t>(cols[static_cast<size_t>(j)])])
                m.set(g2l[static_cast<size_t>(gi)], j);
        return m.rank();
    }
    if (!field.is_rational()) {
        FpMatrix m(nrows, ncols, field.p);
        for (int j = 0; j < ncols; ++j)
            for (auto [gi, sign] : bnd[static_cast<size_t>(cols[static_cast<size_t>(j)])])
                m.add(g2l[static_cast<size_t>(gi)], j, sign);
        return m.rank();
    }
    IntMatrix m(nrows, ncols);
    for (int j = 0; j < ncols; ++j)
        for (auto [gi, sign] : bnd[static_cast<size_t>(cols[static_cast<size_t>(j)])])
            m.set(g2l[static_cast<size_t>(gi)], j, sign);
    return m.rank_over_q();
}

}  // namespace

BettiVector FaceCache::betti_of_subset(VertexSet w, const FieldSpec& field) const {
    BettiVector out;
    out.entries.assign(static_cast<size_t>(std::max(0, c_.dim() + 2)), 0);
    if (out.entries.empty()) out.entries.push_back(0);
    SubsetFaces sf = select_faces(*this, w);
    int levels = c_.dim() + 1;
    std::vector<long long> fcount(static_cast<size_t>(std::max(1, levels + 1)), 0);
    for (int k = 0; k < levels; ++k)
        fcount[static_cast<size_t>(k)] =
            static_cast<long long>(sf.local[static_cast<size_t>(k)].size());
    // rank of the augmentation map; then the simplicial boundary ranks.
    std::vector<int> rk(static_cast<size_t>(std::max(1, levels + 1)), 0);
    if (levels > 0) rk[0] = fcount[0] > 0 ? 1 : 0;
    for (int k = 1; k <= c_.dim(); ++k)
        rk[static_cast<size_t>(k)] = boundary_rank(*this, sf, k, field);
    // beta_{-1} = 1 - rank d_0
    out.entries[0] = 1 - (levels > 0 ? rk[0] : 0);
    for (int i = 0; i <= c_.dim(); ++i)
        out.entries[static_cast<size_t>(i) + 1] =
            fcount[static_cast<size_t>(i)] - rk[static_cast<size_t>(i)] -
            (i + 1 <= c_.dim() ? rk[static_cast<size_t>(i) + 1] : 0);
    return out;
}

BettiVector reduced_betti(const SimplicialComplex& c, const FieldSpec& field) {
    return FaceCache(c).betti_of_subset(VertexSet::full(c.ground_set_size()), field);
}

namespace {

void set_entry(FpMatrix& m, int r, int c, int sign) { m.add(r, c, sign); }
void set_entry(RationalMatrix& m, int r, int c, int sign) { m.set(r, c, sign); }
void set_value(FpMatrix& m, int r, int c, std::uint64_t v) { m.set(r, c, v); }
void set_value(RationalMatrix& m, int r, int c, const Rational& v) { m.set(r, c, v); }

template <class Matrix, class Make>
bool injective_impl(const FaceCache& fc, VertexSet w, int i, Make make) {
    SubsetFaces sf = select_faces(fc, w);
    int d = fc.dim();
    if (i > d || i < 0) return true;
    const auto& wi = sf.local[static_cast<size_t>(i)];  // W-supported i-faces
    int nw = static_cast<int>(wi.size());
    int nglobal = static_cast<int>(fc.faces(i).size());

    // Kernel of the reduced boundary on C[W] in local i-face coordinates.
    std::vector<std::vector<int>> local_bnd;  // per local col: (local row, sign)
    int nrows;
    if (i == 0) {
        nrows = 1;
    } else {
        nrows = static_cast<int>(sf.local[static_cast<size_t>(i) - 1].size());
    }
    Matrix zb = make(std::max(1, nrows), std::max(1, nw));
    for (int j = 0; j < nw; ++j) {
        if (i == 0) {
            set_entry(zb, 0, j, 1);
        } else {
            const auto& g2l = sf.global_to_local[static_cast<size_t>(i) - 1];
            for (auto [gi, sign] : fc.boundary(i)[static_cast<size_t>(wi[static_cast<size_t>(j)])])
                set_entry(zb, g2l[static_cast<size_t>(gi)], j, sign);
        }
    }
    auto zker = nw > 0 ? zb.kernel() : decltype(zb.kernel()){};
    int dim_z = static_cast<int>(zker.size());

    // Boundary generators of C at level i+1, and of C[W].
    int nb_global = (i + 1 <= d) ? static_cast<int>(fc.faces(i + 1).size()) : 0;
    int nb_w = (i + 1 <= d) ? static_cast<int>(sf.local[static_cast<size_t>(i) + 1].size()) : 0;

    int dim_bw = 0;
    if (nb_w > 0) {
        const auto& g2l = sf.global_to_local[static_cast<size_t>(i)];
        Matrix bw = make(std::max(1, nw), nb_w);
        for (int j = 0; j < nb_w; ++j) {
            int gface = sf.local[static_cast<size_t>(i) + 1][static_cast<size_t>(j)];
            for (auto [gi, sign] : fc.boundary(i + 1)[static_cast<size_t>(gface)])
                set_entry(bw, g2l[static_cast<size_t>(gi)], j, sign);
        }
        dim_bw = bw.rank();
    }
    if (dim_z == 0) return dim_bw == 0;

    int dim_b = 0;
    if (nb_global > 0) {
        Matrix bg = make(std::max(1, nglobal), nb_global);
        for (int j = 0; j < nb_global; ++j)
            for (auto [gi, sign] : fc.boundary(i + 1)[static_cast<size_t>(j)])
                set_entry(bg, gi, j, sign);
        dim_b = bg.rank();
    }

    // dim(Z + B): rank of kernel vectors stacked over boundary generators,
    // everything written in global i-face coordinates.
    Matrix span = make(dim_z + std::max(1, nb_global), std::max(1, nglobal));
    for (int r = 0; r < dim_z; ++r)
        for (int j = 0; j < nw; ++j)
            set_value(span, r, wi[static_cast<size_t>(j)],
                      zker[static_cast<size_t>(r)][static_cast<size_t>(j)]);
    for (int j = 0; j < nb_global; ++j)
        for (auto [gi, sign] : fc.boundary(i + 1)[static_cast<size_t>(j)])
            set_entry(span, dim_z + j, gi, sign);
    int dim_sum = span.rank();

    // dim(Z ∩ B) must match dim B_i(C[W]) for the induced map to be injective.
    return dim_z + dim_b - dim_sum == dim_bw;
}

}  // namespace

bool inclusion_injective(const SimplicialComplex& c, VertexSet w, int i,
                         const FieldSpec& field) {
    return inclusion_injective(FaceCache(c), w, i, field);
}

bool inclusion_injective(const FaceCache& fc, VertexSet w, int i,
                         const FieldSpec& field) {
    if (field.is_rational())
        return injective_impl<RationalMatrix>(
            fc, w, i, [](int r, int cc) { return RationalMatrix(r, cc); });
    std::uint64_t p = field.p;
    return injective_impl<FpMatrix>(
        fc, w, i, [p](int r, int cc) { return FpMatrix(r, cc, p); });
}

}  // namespace tauv
