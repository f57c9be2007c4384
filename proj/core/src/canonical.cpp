#include "taucore/canonical.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace tauv {

namespace {

struct Search {
    int n;
    const std::vector<VertexSet>& facets;
    std::optional<std::pair<std::vector<VertexSet>, std::vector<int>>> best;

    /// Stable WL-style refinement of a vertex coloring. Colors are dense
    /// 0-based and ordered; equal signatures keep equal colors.
    std::vector<int> refine(std::vector<int> color) const {
        while (true) {
            // signature: own color + per-facet (size, sorted member colors)
            std::vector<std::pair<int, std::vector<std::vector<int>>>> sig(
                static_cast<size_t>(n));
            for (int v = 0; v < n; ++v) sig[static_cast<size_t>(v)].first = color[static_cast<size_t>(v)];
            for (const VertexSet& f : facets) {
                std::vector<int> fcolors;
                for (int v : f.positions()) fcolors.push_back(color[static_cast<size_t>(v)]);
                std::sort(fcolors.begin(), fcolors.end());
                for (int v : f.positions())
                    sig[static_cast<size_t>(v)].second.push_back(fcolors);
            }
            for (int v = 0; v < n; ++v)
                std::sort(sig[static_cast<size_t>(v)].second.begin(),
                          sig[static_cast<size_t>(v)].second.end());
            std::map<std::pair<int, std::vector<std::vector<int>>>, int> order;
            for (int v = 0; v < n; ++v) order[sig[static_cast<size_t>(v)]] = 0;
            int next = 0;
            for (auto& [k, idx] : order) idx = next++;
            std::vector<int> fresh(static_cast<size_t>(n));
            for (int v = 0; v < n; ++v)
                fresh[static_cast<size_t>(v)] = order[sig[static_cast<size_t>(v)]];
            if (fresh == color) return color;
            color = std::move(fresh);
        }
    }

    void descend(std::vector<int> color) {
        color = refine(std::move(color));
        // first non-singleton color class
        std::vector<int> count(static_cast<size_t>(n), 0);
        for (int c : color) ++count[static_cast<size_t>(c)];
        int target = -1;
        for (int v = 0; v < n; ++v)
            if (count[static_cast<size_t>(color[static_cast<size_t>(v)])] > 1) {
                if (target < 0 || color[static_cast<size_t>(v)] < color[static_cast<size_t>(target)])
                    target = v;
            }
        if (target < 0) {
            // discrete: colors are a permutation old -> new
            std::vector<VertexSet> relabeled;
            relabeled.reserve(facets.size());
            for (const VertexSet& f : facets) {
                std::uint64_t m = 0;
                for (int v : f.positions())
                    m |= std::uint64_t(1) << color[static_cast<size_t>(v)];
                relabeled.push_back(VertexSet(m));
            }
            std::sort(relabeled.begin(), relabeled.end());
            if (!best || relabeled < best->first) best = {relabeled, color};
            return;
        }
        int tcolor = color[static_cast<size_t>(target)];
        for (int v = 0; v < n; ++v) {
            if (color[static_cast<size_t>(v)] != tcolor) continue;
            std::vector<int> child = color;
            // individualize v: split it off just below its class
            for (int u = 0; u < n; ++u)
                if (child[static_cast<size_t>(u)] >= tcolor) ++child[static_cast<size_t>(u)];
            child[static_cast<size_t>(v)] = tcolor;
            descend(std::move(child));
        }
    }
};

}  // namespace

CanonicalForm canonical_form(const SimplicialComplex& c) {
    Search s{c.ground_set_size(), c.facets(), std::nullopt};
    if (c.ground_set_size() == 0) return {0, {}, {}};
    s.descend(std::vector<int>(static_cast<size_t>(c.ground_set_size()), 0));
    CanonicalForm out;
    out.ground_set_size = c.ground_set_size();
    out.facets = s.best->first;
    out.relabeling = s.best->second;
    return out;
}

}  // namespace tauv
