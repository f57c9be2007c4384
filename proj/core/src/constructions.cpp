#include "taucore/constructions.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "taucore/rational.hpp"

namespace tauv {

SimplicialComplex boundary_simplex(int d) {
    if (d < 0) throw std::invalid_argument("dimension must be >= 0");
    int n = d + 2;
    std::vector<VertexSet> facets;
    VertexSet full = VertexSet::full(n);
    for (int x = 0; x < n; ++x) facets.push_back(full.without(x));
    return SimplicialComplex(n, std::move(facets));
}

SimplicialComplex lower_cyclic_facets(int d, int n) {
    if (n < d + 2) throw std::invalid_argument("need n >= d+2");
    int dim1 = d + 1;           // dimension of the cyclic polytope
    int pairs = dim1 / 2;       // adjacent index pairs per facet
    bool leading_one = dim1 % 2 == 1;
    std::vector<VertexSet> facets;
    // choose `pairs` disjoint pairs {i, i+1} from the allowed range
    int lo = leading_one ? 1 : 0;  // 0-based first allowed pair start
    std::vector<int> starts(static_cast<size_t>(pairs));
    auto emit = [&]() {
        std::uint64_t m = leading_one ? 1 : 0;
        for (int s : starts) m |= std::uint64_t(3) << s;
        facets.push_back(VertexSet(m));
    };
    // iterate all placements: starts strictly increasing with gaps >= 2
    std::vector<int> cur(static_cast<size_t>(pairs));
    auto rec = [&](auto&& self, int idx, int from) -> void {
        if (idx == pairs) {
            starts = cur;
            emit();
            return;
        }
        for (int s = from; s + 1 < n; ++s) {
            cur[static_cast<size_t>(idx)] = s;
            self(self, idx + 1, s + 2);
        }
    };
    if (pairs == 0) {
        emit();
    } else {
        rec(rec, 0, lo);
    }
    return SimplicialComplex(n, std::move(facets));
}

bool m_sequence_check(const std::vector<long long>& g) {
    if (g.empty() || g[0] != 1) return false;
    for (long long v : g)
        if (v < 0) return false;
    // Macaulay pseudopower bound k_{i+1} <= k_i^{<i>}
    auto pseudopower = [](long long a, int i) -> Integer {
        if (a == 0) return 0;
        Integer out = 0;
        long long rem = a;
        int level = i;
        long long top = level;
        while (rem > 0 && level >= 1) {
            while (binomial(top + 1, level) <= rem) ++top;
            rem -= static_cast<long long>(binomial(top, level));
            out += binomial(top + 1, level + 1);
            --top;
            --level;
        }
        return out;
    };
    for (size_t i = 1; i + 1 < g.size(); ++i)
        if (Integer(g[i + 1]) > pseudopower(g[i], static_cast<int>(i))) return false;
    return true;
}

BilleraLeeResult billera_lee(int d, const std::vector<long long>& k, int n) {
    if (!m_sequence_check(k))
        throw std::invalid_argument("selection vector is not an M-sequence");
    if (static_cast<int>(k.size()) > d / 2 + 1)
        throw std::invalid_argument("selection vector longer than floor(d/2)+1");
    for (size_t i = 0; i < k.size(); ++i)
        if (Integer(k[i]) > binomial(n - d - 2 + static_cast<long long>(i),
                                     static_cast<long long>(i)))
            throw std::invalid_argument(
                "k_" + std::to_string(i) + " exceeds the available facets of in-degree " +
                std::to_string(i) + " (n too small)");

    SimplicialComplex full = lower_cyclic_facets(d, n);
    const auto& facets = full.facets();  // ascending mask = colex order
    size_t m = facets.size();
    std::vector<int> indeg(m, 0);
    for (size_t a = 0; a < m; ++a)
        for (size_t b = a + 1; b < m; ++b)
            if ((facets[a] & facets[b]).size() == d) ++indeg[b];

    std::vector<long long> taken(k.size(), 0);
    std::vector<char> selected(m, 0);
    for (size_t idx = 0; idx < m; ++idx) {
        int i = indeg[idx];
        if (i < static_cast<int>(k.size()) && taken[static_cast<size_t>(i)] < k[static_cast<size_t>(i)]) {
            selected[idx] = 1;
            ++taken[static_cast<size_t>(i)];
        }
    }
    for (size_t i = 0; i < k.size(); ++i)
        if (taken[i] != k[i])
            throw std::invalid_argument("not enough facets of in-degree " + std::to_string(i));

    // ideal property: every dual-graph predecessor of a chosen facet is chosen
    for (size_t b = 0; b < m; ++b)
        if (selected[b])
            for (size_t a = 0; a < b; ++a)
                if ((facets[a] & facets[b]).size() == d && !selected[a])
                    throw std::logic_error("selected facets do not form an ideal");

    std::vector<VertexSet> chosen;
    for (size_t idx = 0; idx < m; ++idx)
        if (selected[idx]) chosen.push_back(facets[idx]);

    BilleraLeeResult out;
    out.ball = SimplicialComplex(n, chosen);
    out.ball_h = h_from_f(f_vector(out.ball));

    // boundary: ridges lying in exactly one chosen facet
    std::map<std::uint64_t, int> ridge_count;
    for (VertexSet f : chosen)
        for (int x : f.positions()) ++ridge_count[f.without(x).bits()];
    std::vector<VertexSet> sphere_facets;
    for (auto [ridge, count] : ridge_count)
        if (count == 1) sphere_facets.push_back(VertexSet(ridge));
    out.sphere = SimplicialComplex(n, std::move(sphere_facets));
    return out;
}

SimplicialComplex stacked_sphere(int d, int n, std::uint64_t seed) {
    if (n < d + 2) throw std::invalid_argument("need n >= d+2");
    SimplicialComplex s = boundary_simplex(d);
    std::mt19937_64 rng(seed);
    for (int v = d + 2; v < n; ++v) {
        const auto& facets = s.facets();
        std::uniform_int_distribution<size_t> pick(0, facets.size() - 1);
        VertexSet f = facets[pick(rng)];
        std::vector<VertexSet> next;
        for (VertexSet g : facets)
            if (g != f) next.push_back(g);
        for (int x : f.positions()) next.push_back(f.without(x).with(v));
        s = SimplicialComplex(v + 1, std::move(next));
    }
    return s;
}

SimplicialComplex cycle_complex(int m) {
    if (m < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<std::vector<int>> facets;
    for (int i = 1; i <= m; ++i) facets.push_back({i, i % m + 1});
    return build_complex(facets, m);
}

SimplicialComplex simplex_join_sphere(int i, int j) {
    if (i < 2 || j < 2) throw std::invalid_argument("need i, j >= 2");
    return join(boundary_simplex(i - 1), boundary_simplex(j - 1));
}

SimplicialComplex cycle_join_sphere(int m, int d) {
    if (m < 3 || d < 3) throw std::invalid_argument("need m >= 3 and d >= 3");
    return join(cycle_complex(m), boundary_simplex(d - 2));
}

SimplicialComplex connected_sum(const SimplicialComplex& m1_in, const SimplicialComplex& m2_in,
                                VertexSet facet1, VertexSet facet2,
                                const std::vector<int>& matching) {
    const SimplicialComplex m1 = on_vertex_set(m1_in);
    const SimplicialComplex m2 = on_vertex_set(m2_in);
    if (m1.dim() != m2.dim())
        throw std::invalid_argument("connected sum needs equal dimensions");
    auto find = [](const SimplicialComplex& m, VertexSet f) {
        for (VertexSet g : m.facets())
            if (g == f) return true;
        return false;
    };
    if (!find(m1, facet1) || !find(m2, facet2))
        throw std::invalid_argument("chosen facet missing from its summand");
    int d = m1.dim();
    auto v1 = facet1.positions();
    auto v2 = facet2.positions();
    if (static_cast<int>(matching.size()) != d + 1)
        throw std::invalid_argument("matching must pair all facet vertices");

    // relabel m2: glued vertices onto facet1, the rest onto fresh positions
    std::vector<int> map2(static_cast<size_t>(m2.ground_set_size()), -1);
    for (size_t t = 0; t < v1.size(); ++t)
        map2[static_cast<size_t>(v2[static_cast<size_t>(matching[t])])] = v1[t];
    int next = m1.ground_set_size();
    for (int v = 0; v < m2.ground_set_size(); ++v)
        if (map2[static_cast<size_t>(v)] < 0) map2[static_cast<size_t>(v)] = next++;

    std::vector<VertexSet> facets;
    for (VertexSet f : m1.facets())
        if (f != facet1) facets.push_back(f);
    for (VertexSet f : m2.facets()) {
        if (f == facet2) continue;
        std::uint64_t mask = 0;
        for (int v : f.positions())
            mask |= std::uint64_t(1) << map2[static_cast<size_t>(v)];
        facets.push_back(VertexSet(mask));
    }
    return SimplicialComplex(next, std::move(facets));
}

SimplicialComplex connected_sum(const SimplicialComplex& m1, const SimplicialComplex& m2) {
    const SimplicialComplex a = on_vertex_set(m1);
    const SimplicialComplex b = on_vertex_set(m2);
    std::vector<int> identity(static_cast<size_t>(a.dim()) + 1);
    for (size_t t = 0; t < identity.size(); ++t) identity[t] = static_cast<int>(t);
    return connected_sum(a, b, a.facets().front(), b.facets().front(), identity);
}

bool flip_is_legal(const SimplicialComplex& m, const FlipDescriptor& f) {
    int d = m.dim();
    if (!(f.f1 & f.f2).empty()) return false;
    if (f.f1.empty() || f.f2.empty()) return false;
    if (f.whole().size() != d + 2) return false;
    VertexSet used = m.used_vertices();
    VertexSet ground = VertexSet::full(m.ground_set_size());

    if (f.i() == 1 && (f.f1 & used).empty()) {
        // stacking with a fresh or ghost element: f2 must be a facet
        for (VertexSet g : m.facets())
            if (g == f.f2) return true;
        return false;
    }
    if (!f.whole().subset_of(ground) || !f.whole().subset_of(used)) return false;

    // facets of M containing f2 must be exactly {F \ x : x in f1}
    std::vector<VertexSet> expected;
    for (int x : f.f1.positions()) expected.push_back(f.whole().without(x));
    std::sort(expected.begin(), expected.end());
    std::vector<VertexSet> actual;
    for (VertexSet g : m.facets())
        if (f.f2.subset_of(g)) actual.push_back(g);
    std::sort(actual.begin(), actual.end());
    if (actual != expected) return false;
    // and M[F] must have no further facets
    return restrict_to(m, f.whole()).facets() == expected;
}

SimplicialComplex apply_flip(const SimplicialComplex& m, const FlipDescriptor& f) {
    if (!flip_is_legal(m, f)) throw std::invalid_argument("illegal flip");
    int ng = m.ground_set_size();
    for (int v : f.whole().positions()) ng = std::max(ng, v + 1);
    std::vector<VertexSet> facets;
    for (VertexSet g : m.facets())
        if (!f.f2.subset_of(g)) facets.push_back(g);
    for (int x : f.f2.positions()) facets.push_back(f.whole().without(x));
    return SimplicialComplex(ng, std::move(facets));
}

std::vector<FlipDescriptor> enumerate_flips(const SimplicialComplex& m) {
    std::vector<FlipDescriptor> out;
    int d = m.dim();
    int fresh = m.ground_set_size();
    for (VertexSet f : m.facets())
        out.push_back({VertexSet::single(fresh), f});

    auto verts = m.used_vertices().positions();
    int nv = static_cast<int>(verts.size());
    int sz = d + 2;
    if (nv >= sz) {
        std::vector<int> idx(static_cast<size_t>(sz));
        for (int i = 0; i < sz; ++i) idx[static_cast<size_t>(i)] = i;
        std::vector<FlipDescriptor> general;
        for (;;) {
            VertexSet F;
            for (int i : idx) F = F.with(verts[static_cast<size_t>(i)]);
            // candidate f1: the x for which F \ x is a facet
            VertexSet f1;
            for (int x : F.positions())
                if (m.has_face(F.without(x)) &&
                    F.without(x).size() == d + 1) {
                    bool is_facet = false;
                    for (VertexSet g : m.facets())
                        if (g == F.without(x)) is_facet = true;
                    if (is_facet) f1 = f1.with(x);
                }
            if (f1.size() >= 2 && f1.size() <= d + 1) {
                FlipDescriptor fd{f1, F - f1};
                if (flip_is_legal(m, fd)) general.push_back(fd);
            }
            int i = sz - 1;
            while (i >= 0 && idx[static_cast<size_t>(i)] == nv - sz + i) --i;
            if (i < 0) break;
            ++idx[static_cast<size_t>(i)];
            for (int t = i + 1; t < sz; ++t)
                idx[static_cast<size_t>(t)] = idx[static_cast<size_t>(t - 1)] + 1;
        }
        std::sort(general.begin(), general.end());
        out.insert(out.end(), general.begin(), general.end());
    }
    return out;
}

FlipExploreResult flip_explore(const SimplicialComplex& m, long long budget) {
    FlipExploreResult out;
    std::set<CanonicalForm> seen;
    std::deque<SimplicialComplex> queue;
    CanonicalForm start = canonical_form(m);
    seen.insert(start);
    out.forms.push_back(start);
    queue.push_back(SimplicialComplex(start.ground_set_size, start.facets));
    long long expanded = 0;
    while (!queue.empty()) {
        if (expanded >= budget) break;
        SimplicialComplex cur = queue.front();
        queue.pop_front();
        ++expanded;
        for (const FlipDescriptor& fd : enumerate_flips(cur)) {
            if (fd.i() < 2 || fd.j() < 2) continue;  // keep the vertex count fixed
            SimplicialComplex child = apply_flip(cur, fd);
            CanonicalForm cf = canonical_form(child);
            if (seen.insert(cf).second) {
                out.forms.push_back(cf);
                queue.push_back(SimplicialComplex(cf.ground_set_size, cf.facets));
            }
        }
    }
    out.complete = queue.empty();
    return out;
}

}  // namespace tauv
