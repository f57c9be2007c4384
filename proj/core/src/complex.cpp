#include "taucore/complex.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "taucore/rational.hpp"

namespace tauv {

namespace {

/// Re-index a subset of W onto positions 0..|W|-1 (order-preserving).
std::uint64_t compress_into(std::uint64_t m, std::uint64_t w) {
    std::uint64_t out = 0;
    int pos = 0;
    for (std::uint64_t b = w; b; b &= b - 1) {
        if (m & (b & -b)) out |= std::uint64_t(1) << pos;
        ++pos;
    }
    return out;
}

std::vector<VertexSet> maximalize(std::vector<VertexSet> fs) {
    std::sort(fs.begin(), fs.end());
    fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
    std::vector<VertexSet> out;
    for (size_t i = 0; i < fs.size(); ++i) {
        bool dominated = false;
        for (size_t j = 0; j < fs.size() && !dominated; ++j)
            if (i != j && fs[i].subset_of(fs[j]) && fs[i] != fs[j]) dominated = true;
        if (!dominated && !fs[i].empty()) out.push_back(fs[i]);
    }
    return out;
}

}  // namespace

SimplicialComplex::SimplicialComplex(int ground_set_size, std::vector<VertexSet> facets)
    : n_(ground_set_size) {
    if (n_ < 0 || n_ > kMaxGroundSet)
        throw std::invalid_argument("ground set size must be in 0..63, got " +
                                    std::to_string(n_));
    VertexSet full = VertexSet::full(n_);
    for (VertexSet f : facets)
        if (!f.subset_of(full))
            throw std::invalid_argument("facet " + f.to_string() +
                                        " outside ground set of size " + std::to_string(n_));
    facets_ = maximalize(std::move(facets));
    dim_ = -1;
    for (VertexSet f : facets_) dim_ = std::max(dim_, f.size() - 1);
}

VertexSet SimplicialComplex::used_vertices() const {
    std::uint64_t u = 0;
    for (VertexSet f : facets_) u |= f.bits();
    return VertexSet(u);
}

bool SimplicialComplex::has_face(VertexSet f) const {
    if (f.empty()) return true;
    for (VertexSet g : facets_)
        if (f.subset_of(g)) return true;
    return false;
}

SimplicialComplex build_complex(const std::vector<std::vector<int>>& facets,
                                int ground_set_size) {
    std::vector<VertexSet> fs;
    fs.reserve(facets.size());
    for (const auto& lst : facets) {
        for (int v : lst)
            if (v < 1 || v > ground_set_size)
                throw std::invalid_argument("vertex label " + std::to_string(v) +
                                            " outside 1.." + std::to_string(ground_set_size));
        fs.push_back(VertexSet::from_labels(lst));
    }
    return SimplicialComplex(ground_set_size, std::move(fs));
}

std::vector<std::vector<std::uint64_t>> faces_by_dim(const SimplicialComplex& c) {
    std::vector<std::vector<std::uint64_t>> out(std::max(0, c.dim() + 1));
    if (c.dim() < 0) return out;
    // Walk down from facets: level sets of the downward closure.
    std::set<std::uint64_t> cur;
    for (VertexSet f : c.facets()) cur.insert(f.bits());
    for (int k = c.dim(); k >= 0; --k) {
        std::set<std::uint64_t> next;
        for (std::uint64_t m : cur) {
            if (std::popcount(m) == k + 1) {
                out[k].push_back(m);
                for (std::uint64_t b = m; b; b &= b - 1) next.insert(m ^ (b & -b));
            } else {
                next.insert(m);  // facet of lower dimension, not yet at its level
            }
        }
        cur = std::move(next);
    }
    return out;
}

FVector f_vector(const SimplicialComplex& c) {
    FVector f;
    f.entries.assign(static_cast<size_t>(c.dim()) + 2, 0);
    f.entries[0] = 1;
    auto faces = faces_by_dim(c);
    for (int k = 0; k <= c.dim(); ++k)
        f.entries[static_cast<size_t>(k) + 1] = static_cast<long long>(faces[k].size());
    return f;
}

std::vector<long long> h_from_f(const FVector& f) {
    int d = f.dim();
    std::vector<long long> h(static_cast<size_t>(d) + 2, 0);
    for (int k = 0; k <= d + 1; ++k) {
        Integer acc = 0;
        for (int i = 0; i <= k; ++i) {
            Integer t = binomial(d + 1 - i, k - i) * f.f(i - 1);
            acc += ((k - i) % 2 == 0) ? t : -t;
        }
        h[static_cast<size_t>(k)] = static_cast<long long>(acc);
    }
    return h;
}

FVector f_from_h(const std::vector<long long>& h, int d) {
    FVector f;
    f.entries.assign(static_cast<size_t>(d) + 2, 0);
    for (int j = -1; j <= d; ++j) {
        Integer acc = 0;
        for (int k = 0; k <= j + 1 && k < static_cast<int>(h.size()); ++k)
            acc += binomial(d + 1 - k, d - j) * h[static_cast<size_t>(k)];
        f.entries[static_cast<size_t>(j) + 1] = static_cast<long long>(acc);
    }
    return f;
}

FaceVectors face_vectors(const SimplicialComplex& c) {
    FaceVectors out;
    out.f = f_vector(c);
    bool pure = true;
    for (VertexSet f : c.facets())
        if (f.size() - 1 != c.dim()) pure = false;
    if (!pure || c.dim() < 0) return out;
    out.h_defined = true;
    out.h = h_from_f(out.f);
    out.g.assign(out.h.size(), 0);
    out.g[0] = out.h[0];
    for (size_t i = 1; i < out.h.size(); ++i) out.g[i] = out.h[i] - out.h[i - 1];
    return out;
}

SimplicialComplex restrict_to(const SimplicialComplex& c, VertexSet w) {
    std::vector<VertexSet> fs;
    for (VertexSet f : c.facets()) fs.push_back(f & w);
    return SimplicialComplex(c.ground_set_size(), std::move(fs));
}

SimplicialComplex induced_subcomplex(const SimplicialComplex& c, VertexSet w) {
    std::vector<VertexSet> fs;
    for (VertexSet f : c.facets()) fs.push_back(VertexSet(compress_into((f & w).bits(), w.bits())));
    return SimplicialComplex(w.size(), std::move(fs));
}

SimplicialComplex link(const SimplicialComplex& c, int v) {
    if (!c.used_vertices().contains(v))
        throw std::invalid_argument("link: position " + std::to_string(v) +
                                    " is not a vertex");
    std::uint64_t nbrs = 0;
    for (VertexSet f : c.facets())
        if (f.contains(v)) nbrs |= f.without(v).bits();
    std::vector<VertexSet> fs;
    for (VertexSet f : c.facets())
        if (f.contains(v))
            fs.push_back(VertexSet(compress_into(f.without(v).bits(), nbrs)));
    return SimplicialComplex(std::popcount(nbrs), std::move(fs));
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
    int n = a.ground_set_size() + b.ground_set_size();
    // The empty complex contributes its single face, the empty set.
    std::vector<VertexSet> fa(a.facets());
    if (fa.empty()) fa.push_back(VertexSet());
    std::vector<VertexSet> fb(b.facets());
    if (fb.empty()) fb.push_back(VertexSet());
    std::vector<VertexSet> fs;
    for (VertexSet x : fa)
        for (VertexSet y : fb)
            fs.push_back(VertexSet(x.bits() | (y.bits() << a.ground_set_size())));
    return SimplicialComplex(n, std::move(fs));
}

Classification classify(const SimplicialComplex& c) {
    Classification out;
    const auto& fs = c.facets();
    int d = c.dim();
    out.is_pure = true;
    for (VertexSet f : fs)
        if (f.size() - 1 != d) out.is_pure = false;

    if (out.is_pure && !fs.empty()) {
        // Facet adjacency: sharing a (d-1)-face.
        size_t m = fs.size();
        std::vector<int> comp(m, -1);
        std::vector<size_t> stack{0};
        comp[0] = 0;
        while (!stack.empty()) {
            size_t i = stack.back();
            stack.pop_back();
            for (size_t j = 0; j < m; ++j)
                if (comp[j] < 0 && (fs[i] & fs[j]).size() == d) {
                    comp[j] = 0;
                    stack.push_back(j);
                }
        }
        out.is_strongly_connected =
            std::all_of(comp.begin(), comp.end(), [](int x) { return x == 0; });

        if (out.is_strongly_connected) {
            // Closed pseudomanifold: every ridge lies in exactly two facets.
            bool ok = true;
            for (size_t i = 0; i < m && ok; ++i)
                for (std::uint64_t b = fs[i].bits(); b && ok; b &= b - 1) {
                    VertexSet ridge = fs[i] - VertexSet(b & -b);
                    int count = 0;
                    for (size_t j = 0; j < m; ++j)
                        if (ridge.subset_of(fs[j])) ++count;
                    if (count != 2) ok = false;
                }
            out.is_closed_pseudomanifold = ok && d >= 0;
        }
    }

    // Neighborliness over the used vertex set.
    VertexSet used = c.used_vertices();
    auto verts = used.positions();
    int f0 = static_cast<int>(verts.size());
    int k = 0;
    for (int cand = 1; cand <= f0; ++cand) {
        // All cand-subsets of used vertices must be faces.
        bool all = true;
        std::vector<int> idx(cand);
        for (int i = 0; i < cand; ++i) idx[i] = i;
        while (all) {
            VertexSet s;
            for (int i : idx) s = s.with(verts[static_cast<size_t>(i)]);
            if (!c.has_face(s)) { all = false; break; }
            int i = cand - 1;
            while (i >= 0 && idx[static_cast<size_t>(i)] == f0 - cand + i) --i;
            if (i < 0) break;
            ++idx[static_cast<size_t>(i)];
            for (int j = i + 1; j < cand; ++j)
                idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
        }
        if (all) k = cand; else break;
    }
    out.neighborliness = k;
    return out;
}

std::vector<VertexSet> minimal_nonfaces(const SimplicialComplex& c) {
    std::vector<VertexSet> out;
    // Size 1: ground elements that are not vertices.
    VertexSet used = c.used_vertices();
    for (int v = 0; v < c.ground_set_size(); ++v)
        if (!used.contains(v)) out.push_back(VertexSet::single(v));
    // Size k >= 2: S is a minimal non-face iff S is not a face and every
    // (k-1)-subset is. Candidates are face+vertex unions, so enumerate those.
    auto faces = faces_by_dim(c);
    for (int k = 2; k <= c.dim() + 2; ++k) {
        std::set<std::uint64_t> cands;
        if (k == 2) {
            auto verts = used.positions();
            for (size_t i = 0; i < verts.size(); ++i)
                for (size_t j = i + 1; j < verts.size(); ++j)
                    cands.insert((std::uint64_t(1) << verts[i]) |
                                 (std::uint64_t(1) << verts[j]));
        } else {
            for (std::uint64_t m : faces[static_cast<size_t>(k) - 2])
                for (int v : used.positions())
                    if (!(m >> v & 1)) cands.insert(m | (std::uint64_t(1) << v));
        }
        for (std::uint64_t m : cands) {
            VertexSet s(m);
            if (c.has_face(s)) continue;
            bool minimal = true;
            for (std::uint64_t b = m; b && minimal; b &= b - 1)
                if (!c.has_face(VertexSet(m ^ (b & -b)))) minimal = false;
            if (minimal) out.push_back(s);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

SimplicialComplex on_vertex_set(const SimplicialComplex& c) {
    VertexSet used = c.used_vertices();
    std::vector<VertexSet> fs;
    for (VertexSet f : c.facets())
        fs.push_back(VertexSet(compress_into(f.bits(), used.bits())));
    return SimplicialComplex(used.size(), std::move(fs));
}

SimplicialComplex with_ghost_vertices(const SimplicialComplex& c, int extra) {
    return SimplicialComplex(c.ground_set_size() + extra, c.facets());
}

}  // namespace tauv
