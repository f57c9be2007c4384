#include "taucore/bounds.hpp"

#include <sstream>
#include <stdexcept>

#include "taucore/graph.hpp"

namespace tauv {

namespace {

Integer floor_rational(const Rational& r) {
    Integer num = numerator(r), den = denominator(r);
    Integer q = num / den;
    if (num < 0 && q * den != num) --q;
    return q;
}

long long to_ll(const Integer& v) { return static_cast<long long>(v); }

}  // namespace

std::pair<Rational, Rational> mu_bound_pair(long long n, long long e, BoundMode mode) {
    int d = mode == BoundMode::proven ? 3 : 4;
    Rational t0 = bl_tau0(n, e, d);
    Rational b1 = rat(n + 1) * t0;
    Rational b2 = rat(n + 1) *
                  (2 * t0 - rat(n * n - 4 * n + 5, 5 * (n + 1)) + rat(e, 30));
    return {b1, b2};
}

BoundRow bound_row(long long n, long long e) {
    // Vertex links are 3-spheres with f = (n, e, 2(e-n), e-n); the manifold
    // satisfies (i+1) f_i = f_0 f_{i-1}(link).
    BoundRow row;
    row.link_n = n;
    row.link_e = e;
    long long f0 = n + 1;
    row.manifold_f = {f0, f0 * n / 2, f0 * e / 3, f0 * (e - n) / 2,
                      f0 * (e - n) / 5};
    row.chi = row.manifold_f[0] - row.manifold_f[1] + row.manifold_f[2] -
              row.manifold_f[3] + row.manifold_f[4];
    row.proven_exact = mu_bound_pair(n, e, BoundMode::proven);
    row.conjectured_exact = mu_bound_pair(n, e, BoundMode::conjectured);
    row.proven_pair = {to_ll(floor_rational(row.proven_exact.first)),
                       to_ll(floor_rational(row.proven_exact.second))};
    row.conjectured_pair = {to_ll(floor_rational(row.conjectured_exact.first)),
                            to_ll(floor_rational(row.conjectured_exact.second))};
    return row;
}

std::vector<BoundRow> figure_table() {
    // Feasible link parameters (n, e): every pair passing the integrality
    // conditions on f(M) together with the chi and neighborliness bounds.
    static const std::pair<long long, long long> params[] = {
        {5, 10},   {8, 28},   {9, 36},   {10, 30},  {11, 36},  {11, 41},
        {11, 46},  {11, 51},  {13, 48},  {13, 63},  {13, 78},  {14, 46},
        {14, 50},  {14, 52},  {14, 54},  {14, 56},  {14, 60},  {14, 62},
        {14, 64},  {14, 66},  {14, 68},  {14, 70},  {14, 72},  {14, 74},
        {14, 76},  {14, 78},  {14, 80},  {14, 82},  {14, 84},  {14, 86},
        {14, 88},  {14, 90},  {15, 60},  {15, 75},  {15, 105},
    };
    std::vector<BoundRow> rows;
    rows.reserve(std::size(params));
    for (auto [n, e] : params) rows.push_back(bound_row(n, e));
    return rows;
}

std::vector<std::string> figure_table_csv() {
    std::vector<std::string> lines;
    lines.push_back(
        "link_n,link_e,f0,f1,f2,f3,f4,chi,b1_proven,b2_proven,b1_conj,b2_conj");
    for (const auto& r : figure_table()) {
        std::ostringstream os;
        os << r.link_n << ',' << r.link_e;
        for (long long f : r.manifold_f) os << ',' << f;
        os << ',' << r.chi << ',' << r.proven_pair.first << ','
           << r.proven_pair.second << ',' << r.conjectured_pair.first << ','
           << r.conjectured_pair.second;
        lines.push_back(os.str());
    }
    return lines;
}

IdentityEntry TightnessInequalities::chi_bound(long long f0, long long chi, int k) {
    IdentityEntry e;
    e.name = "chi-neighborly-bound";
    long long sign = k % 2 == 0 ? 1 : -1;
    e.lhs = rat(sign) * Rational(binomial(2 * k + 1, k + 1)) * rat(chi - 2);
    e.rhs = Rational(binomial(f0 - k - 2, k + 1));
    e.slack = e.rhs - e.lhs;
    e.holds = e.slack >= 0;
    return e;
}

IdentityEntry TightnessInequalities::g2_bound(long long g2, int d, long long beta1) {
    IdentityEntry e;
    e.name = "g2-beta1-bound";
    e.lhs = Rational(binomial(d + 2, 2)) * rat(beta1);
    e.rhs = rat(g2);
    e.slack = e.rhs - e.lhs;
    e.holds = e.slack >= 0;
    return e;
}

IdentityEntry TightnessInequalities::tight_neighborly(long long n, int d, long long beta1) {
    IdentityEntry e;
    e.name = "tight-neighborly";
    e.lhs = Rational(binomial(d + 2, 2)) * rat(beta1);
    e.rhs = Rational(binomial(n - d - 1, 2));
    e.slack = e.rhs - e.lhs;
    e.holds = e.slack >= 0;
    return e;
}

}  // namespace tauv
