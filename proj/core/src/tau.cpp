#include "taucore/tau.hpp"

#include <atomic>
#include <bit>
#include <thread>

namespace tauv {

SubsetBettiSums subset_betti_sums(const SimplicialComplex& c, const FieldSpec& field,
                                  const TauOptions& opt) {
    int n = c.ground_set_size();
    if (n > opt.cap) throw EnumerationCapExceeded(n, opt.cap);
    FaceCache fc(c);
    int width = c.dim() + 2;  // slots for beta_{-1}..beta_d
    if (width < 1) width = 1;

    SubsetBettiSums out;
    out.n = n;
    out.dim = c.dim();
    out.s.assign(static_cast<size_t>(n) + 1,
                 std::vector<long long>(static_cast<size_t>(width), 0));

    const std::uint64_t total = std::uint64_t(1) << n;
    const std::uint64_t chunk = 1024;
    std::atomic<std::uint64_t> next{0};
    int workers = std::max(1, opt.workers);

    std::vector<std::vector<std::vector<long long>>> partial(
        static_cast<size_t>(workers), out.s);

    auto run = [&](int wi) {
        auto& s = partial[static_cast<size_t>(wi)];
        for (;;) {
            std::uint64_t start = next.fetch_add(chunk);
            if (start >= total) break;
            std::uint64_t stop = std::min(total, start + chunk);
            for (std::uint64_t mask = start; mask < stop; ++mask) {
                BettiVector b = fc.betti_of_subset(VertexSet(mask), field);
                auto& row = s[static_cast<size_t>(std::popcount(mask))];
                for (size_t i = 0; i < b.entries.size() && i < row.size(); ++i)
                    row[i] += b.entries[i];
            }
        }
    };

    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (int wi = 0; wi < workers; ++wi) pool.emplace_back(run, wi);
        for (auto& t : pool) t.join();
    }
    // Integer merge is associative and commutative, so the result does not
    // depend on how chunks were distributed.
    for (const auto& s : partial)
        for (size_t k = 0; k < s.size(); ++k)
            for (size_t i = 0; i < s[k].size(); ++i) out.s[k][i] += s[k][i];
    return out;
}

namespace {

TauVector tau_from_sums(const SubsetBettiSums& sums, const FieldSpec& field) {
    TauVector out;
    out.ground_set_size = sums.n;
    out.field = field;
    int width = std::max<int>(1, sums.dim + 2);
    out.entries.assign(static_cast<size_t>(width), Rational(0));
    for (int i = 0; i < width; ++i) {
        Rational acc = 0;
        for (int k = 0; k <= sums.n; ++k) {
            long long v = sums.s[static_cast<size_t>(k)][static_cast<size_t>(i)];
            if (v != 0) acc += Rational(v) / Rational(binomial(sums.n, k));
        }
        out.entries[static_cast<size_t>(i)] = acc / (sums.n + 1);
    }
    return out;
}

}  // namespace

TauVector tau_vector(const SimplicialComplex& c, const FieldSpec& field,
                     const TauOptions& opt) {
    return tau_from_sums(subset_betti_sums(c, field, opt), field);
}

std::vector<Rational> sigma_vector(const SimplicialComplex& c, const FieldSpec& field,
                                   const TauOptions& opt) {
    SimplicialComplex c0 = on_vertex_set(c);
    TauVector t = tau_vector(c0, field, opt);
    int f0 = c0.ground_set_size();
    std::vector<Rational> sigma(t.entries);
    for (auto& x : sigma) x *= (f0 + 1);
    // The original convention counts the empty subset with beta~0 = -1.
    if (c0.dim() >= 0) sigma[1] -= 1;
    return sigma;
}

GradedBettiTable hochster_table(const SimplicialComplex& c, const FieldSpec& field,
                                const TauOptions& opt) {
    SubsetBettiSums sums = subset_betti_sums(c, field, opt);
    GradedBettiTable t;
    t.n = sums.n;
    t.dim = sums.dim;
    t.rows.assign(static_cast<size_t>(t.n) + 1,
                  std::vector<long long>(static_cast<size_t>(t.n) + 1, 0));
    // r_{i,j} = sum over |W| = j of beta~_{j-i-2}(C[W])
    for (int j = 0; j <= t.n; ++j)
        for (int i = -1; i < j; ++i) {
            int b = j - i - 2;
            if (b < -1 || b > sums.dim) continue;
            t.rows[static_cast<size_t>(i) + 1][static_cast<size_t>(j)] =
                sums.s[static_cast<size_t>(j)][static_cast<size_t>(b) + 1];
        }
    return t;
}

TauVector tau_from_table(const GradedBettiTable& t) {
    TauVector out;
    out.ground_set_size = t.n;
    int width = std::max(1, t.dim + 2);
    out.entries.assign(static_cast<size_t>(width), Rational(0));
    for (int idx = 0; idx < width; ++idx) {
        int i = idx - 1;
        Rational acc = 0;
        for (int j = i + 1; j <= t.n; ++j) {
            long long v = t.r(j - i - 2, j);
            if (v != 0) acc += Rational(v) / Rational(binomial(t.n, j));
        }
        out.entries[static_cast<size_t>(idx)] = acc / (t.n + 1);
    }
    return out;
}

MuVector mu_vector(const SimplicialComplex& m, const FieldSpec& field,
                   const TauOptions& opt) {
    Classification cls = classify(m);
    if (!cls.is_closed_pseudomanifold)
        throw std::invalid_argument("mu-vector requires a closed pseudomanifold");
    int d = m.dim();
    MuVector mu;
    mu.entries.assign(static_cast<size_t>(d) + 1, Rational(0));
    for (int v : m.used_vertices().positions()) {
        TauVector t = tau_vector(link(m, v), field, opt);
        for (int i = 0; i <= d; ++i)
            mu.entries[static_cast<size_t>(i)] += t.tau(i - 1);
    }
    return mu;
}

TightnessReport tightness_report(const SimplicialComplex& m, const FieldSpec& field,
                                 const TauOptions& opt, bool check_injectivity) {
    BettiVector b = reduced_betti(m, field);
    MuVector mu = mu_vector(m, field, opt);
    TightnessReport rep;
    rep.mu_matches_beta = true;
    for (int i = 0; i <= m.dim(); ++i) {
        TightnessEntry e;
        e.i = i;
        // beta_0 is the unreduced count of components; see the report docs.
        e.beta = (i == 0) ? b.beta(0) + 1 : b.beta(i);
        e.mu = mu.mu(i);
        e.equal = (Rational(e.beta) == e.mu);
        if (!e.equal) rep.mu_matches_beta = false;
        rep.rows.push_back(e);
    }
    if (check_injectivity) {
        rep.injectivity_checked = true;
        rep.injectivity_ok = true;
        FaceCache fc(m);
        std::uint64_t total = std::uint64_t(1) << m.ground_set_size();
        for (std::uint64_t mask = 0; mask < total && rep.injectivity_ok; ++mask)
            for (int i = 0; i <= m.dim(); ++i)
                if (!inclusion_injective(fc, VertexSet(mask), i, field)) {
                    rep.injectivity_ok = false;
                    rep.failure_witness = VertexSet(mask);
                    rep.failure_dim = i;
                    break;
                }
    }
    return rep;
}

}  // namespace tauv
