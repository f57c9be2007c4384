#include "taucore/identities.hpp"

#include <stdexcept>

#include "taucore/graph.hpp"
#include "taucore/homology.hpp"

namespace tauv {

namespace {

bool is_homology_sphere(const SimplicialComplex& c, const FieldSpec& field,
                        const Classification& cls) {
    if (!cls.is_closed_pseudomanifold || c.dim() < 0) return false;
    BettiVector b = reduced_betti(c, field);
    for (int i = -1; i <= c.dim(); ++i)
        if (b.beta(i) != (i == c.dim() ? 1 : 0)) return false;
    return true;
}

IdentityEntry equality(std::string name, Rational lhs, Rational rhs) {
    IdentityEntry e;
    e.name = std::move(name);
    e.lhs = std::move(lhs);
    e.rhs = std::move(rhs);
    e.slack = e.rhs - e.lhs;
    e.holds = e.slack == 0;
    return e;
}

}  // namespace

IdentityReport verify_identities(const SimplicialComplex& c, const TauVector& tau) {
    IdentityReport rep;
    int d = c.dim();
    FaceVectors fv = face_vectors(c);
    Classification cls = classify(c);
    bool sphere = is_homology_sphere(c, tau.field, cls);

    Rational alt = 0;
    for (int i = -1; i <= d; ++i) {
        bool odd = ((i % 2) + 2) % 2 == 1;  // true for i = -1, 1, 3, ...
        alt += odd ? -tau.tau(i) : tau.tau(i);
    }

    {
        Rational rhs = 0;
        for (int k = -1; k <= d; ++k) {
            bool odd = ((k % 2) + 2) % 2 == 1;
            Rational term = Rational(fv.f.f(k), k + 2);
            rhs += odd ? -term : term;
        }
        rep.entries.push_back(equality("euler", alt, rhs));
    }

    if (fv.h_defined && d >= 0) {
        Rational rhs = 0;
        for (int k = 0; k <= d + 1; ++k) {
            Rational term = Rational(fv.h[static_cast<size_t>(k)]) /
                            (Rational(d + 2) * Rational(binomial(d + 1, k)));
            rhs += (k % 2 == 0) ? -term : term;  // sign (-1)^{k+1}
        }
        rep.entries.push_back(equality("euler-h", alt, rhs));
    } else {
        IdentityEntry e;
        e.name = "euler-h";
        e.applicable = false;
        rep.entries.push_back(e);
    }

    {
        IdentityEntry e;
        e.name = "sphere-duality";
        e.applicable = sphere;
        if (sphere) {
            e.holds = true;
            for (int i = -1; i <= d; ++i)
                if (tau.tau(i) != tau.tau(d - 1 - i)) {
                    e.holds = false;
                    e.lhs = tau.tau(i);
                    e.rhs = tau.tau(d - 1 - i);
                    e.slack = e.rhs - e.lhs;
                    break;
                }
        }
        rep.entries.push_back(e);
    }

    if (sphere && d >= 1 && d % 2 == 1) {
        Rational rhs = tau.tau((d - 1) / 2);
        if (((d - 1) / 2) % 2 == 1) rhs = -rhs;
        for (int i = -1; i <= (d - 3) / 2; ++i) {
            bool odd = ((i % 2) + 2) % 2 == 1;
            rhs += (odd ? -tau.tau(i) : tau.tau(i)) * 2;
        }
        rep.entries.push_back(equality("odd-sphere-tau", alt, rhs));

        Rational rhsh = 0;
        for (int k = 0; k <= (d - 1) / 2; ++k) {
            Rational term = Rational(fv.h[static_cast<size_t>(k)]) / Rational(binomial(d + 1, k));
            rhsh += (k % 2 == 0) ? -2 * term : 2 * term;  // sign (-1)^{k+1}
        }
        Rational mid = Rational(fv.h[static_cast<size_t>(d + 1) / 2]) /
                       Rational(binomial(d + 1, (d + 1) / 2));
        rhsh += (((d - 1) / 2) % 2 == 0) ? mid : -mid;
        rhsh /= (d + 2);
        rep.entries.push_back(equality("odd-sphere-h", alt, rhsh));
    } else {
        for (const char* n : {"odd-sphere-tau", "odd-sphere-h"}) {
            IdentityEntry e;
            e.name = n;
            e.applicable = false;
            rep.entries.push_back(e);
        }
    }

    if (sphere && d == 3) {
        rep.entries.push_back(equality("three-sphere-tau02", tau.tau(0), tau.tau(2)));
        Rational lhs = 2 * tau.tau(0) - tau.tau(1);
        long long h1 = fv.h[1], h2 = fv.h[2];
        rep.entries.push_back(equality(
            "three-sphere-h", lhs,
            Rational(h1 * (h1 + 1), 10 * (h1 + 5)) - Rational(h2, 30)));
        long long f0 = fv.f.f(0), f1 = fv.f.f(1);
        rep.entries.push_back(equality(
            "three-sphere-f", lhs,
            Rational(f0 * f0 - 4 * f0 + 5, 5 * (f0 + 1)) - Rational(f1, 30)));
        long long g1 = fv.g[1], g2 = fv.g[2];
        rep.entries.push_back(equality(
            "three-sphere-g", lhs,
            Rational(g1 * (g1 + 1), 15 * (g1 + 6)) - Rational(g2, 30)));
    } else {
        for (const char* n :
             {"three-sphere-tau02", "three-sphere-h", "three-sphere-f", "three-sphere-g"}) {
            IdentityEntry e;
            e.name = n;
            e.applicable = false;
            rep.entries.push_back(e);
        }
    }
    return rep;
}

TauVector closed_form_tau(TauFamily family, int a, int b) {
    TauVector out;
    switch (family) {
        case TauFamily::stacked: {
            int d = a, n = b;
            if (d < 2 || n < d + 2) throw std::invalid_argument("stacked: need d >= 2, n >= d+2");
            out.ground_set_size = n;
            out.entries.assign(static_cast<size_t>(d) + 2, Rational(0));
            out.entries[0] = Rational(1, n + 1);
            out.entries[static_cast<size_t>(d) + 1] = Rational(1, n + 1);
            Rational t0 = Rational(n - 2 * d - 4,
                                   static_cast<long long>(d + 2) * (d + 3)) +
                          Rational(1, n + 1);
            out.entries[1] = t0;
            out.entries[static_cast<size_t>(d)] = t0;
            return out;
        }
        case TauFamily::simplex_join: {
            int i = a, j = b, d = a + b - 1;
            if (i < 2 || j < 2) throw std::invalid_argument("simplex_join: need i, j >= 2");
            out.ground_set_size = d + 3;
            out.entries.assign(static_cast<size_t>(d) + 2, Rational(0));
            out.entries[0] = Rational(1, d + 4);
            out.entries[static_cast<size_t>(d) + 1] = Rational(1, d + 4);
            Rational v = Rational(1) / (Rational(d + 4) * Rational(binomial(d + 3, i + 1)));
            if (i == j) {
                out.entries[static_cast<size_t>(i)] = 2 * v;
            } else {
                out.entries[static_cast<size_t>(i)] = v;
                out.entries[static_cast<size_t>(j)] = v;
            }
            return out;
        }
        case TauFamily::cycle_join: {
            int m = a, d = b;
            if (m < 3 || d < 3) throw std::invalid_argument("cycle_join: need m >= 3, d >= 3");
            int n = m + d;
            out.ground_set_size = n;
            out.entries.assign(static_cast<size_t>(d) + 2, Rational(0));
            out.entries[0] = Rational(1, n + 1);
            out.entries[static_cast<size_t>(d) + 1] = Rational(1, n + 1);
            Rational t0 =
                Rational(m - 3, static_cast<long long>(d + 3) * (d + 2)) +
                Rational(1, n + 1) +
                Rational(1) / (Rational(d + 1) * Rational(binomial(n + 1, d + 1))) -
                Rational(1, d + 4) -
                Rational(1) / (Rational(d + 1) * Rational(binomial(d + 4, 3)));
            out.entries[1] = t0;
            out.entries[static_cast<size_t>(d)] = t0;
            Rational t1 = Rational(1) / (Rational(n + 1) * Rational(binomial(n, m)));
            if (d == 3) {
                out.entries[2] = 2 * t1;
            } else {
                out.entries[2] = t1;
                out.entries[static_cast<size_t>(d) - 1] = t1;
            }
            return out;
        }
        case TauFamily::cycle: {
            int m = a;
            if (m < 3) throw std::invalid_argument("cycle: need m >= 3");
            out.ground_set_size = m;
            out.entries.assign(3, Rational(0));
            out.entries[0] = Rational(1, m + 1);
            out.entries[2] = Rational(1, m + 1);
            out.entries[1] = Rational(static_cast<long long>(m - 2) * (m - 3),
                                      6LL * (m + 1));
            return out;
        }
    }
    throw std::logic_error("unreachable");
}

TauVector connected_sum_tau(const TauVector& t1, const TauVector& t2, int d,
                            int n1, int n2) {
    if (d < 2) throw std::invalid_argument("connected sum formula needs d >= 2");
    int n = n1 + n2 - d - 1;
    Rational c = Rational(1, d + 2) - Rational(1, n1 + 1) - Rational(1, n2 + 1) +
                 Rational(1, n1 + n2 - d);
    TauVector out;
    out.ground_set_size = n;
    out.field = t1.field;
    out.entries.assign(static_cast<size_t>(d) + 2, Rational(0));
    out.entries[0] = Rational(1, n + 1);
    out.entries[static_cast<size_t>(d) + 1] = Rational(1, n + 1);
    for (int i = 0; i <= d - 1; ++i) {
        Rational v = t1.tau(i) + t2.tau(i);
        if (i == 0 || i == d - 1) v += c;
        out.entries[static_cast<size_t>(i) + 1] = v;
    }
    return out;
}

TauVector stacking_delta_tau(const TauVector& t, int d, int n, int k) {
    if (d < 2) throw std::invalid_argument("stacking formula needs d >= 2");
    TauVector out = t;
    out.ground_set_size = n + k;
    out.entries.resize(static_cast<size_t>(d) + 2, Rational(0));
    Rational delta = Rational(k, static_cast<long long>(d + 2) * (d + 3)) -
                     Rational(1, n + 1) + Rational(1, n + k + 1);
    out.entries[1] += delta;
    out.entries[static_cast<size_t>(d)] += delta;
    out.entries[0] = Rational(1, n + k + 1);
    out.entries[static_cast<size_t>(d) + 1] = Rational(1, n + k + 1);
    return out;
}

G2OneBounds g2_one_bounds(int d, int n) {
    if (d < 3 || n < d + 3) throw std::invalid_argument("need d >= 3 and n >= d+3");
    G2OneBounds out;
    Rational cdn = Rational(n - d - 3, static_cast<long long>(d + 2) * (d + 3)) +
                   Rational(1, n + 1) - Rational(1, d + 4);
    out.tau0_hi = cdn;
    out.tau0_lo = cdn - (Rational(1) / Rational(binomial(d + 4, 3)) -
                         Rational(1) / Rational(binomial(n + 1, d + 1))) /
                            (d + 1);
    if (d == 3) {
        out.tau1_lo = Rational(1) / (2 * Rational(binomial(n + 1, 4)));
        out.tau1_hi = Rational(1, 70);
    } else if (d == 4) {
        out.tau1_lo = Rational(1) / (5 * Rational(binomial(n + 1, 5)));
        out.tau1_hi = Rational(1, 280);
    } else {
        out.tau1_lo = 0;
        out.tau1_hi = Rational(1) / (4 * Rational(binomial(d + 4, 4)));
    }
    out.extremal_lo = "cycle join C_{n-d} * bd(simplex_{d-1})";
    out.extremal_hi = "stackings over a boundary-simplex join";
    return out;
}

IdentityEntry nearly_neighborly_check(const SimplicialComplex& m, const Rational& tau0) {
    IdentityEntry e;
    e.name = "nearly-neighborly-tau0";
    Graph g = skeleton_graph(m);
    long long n = g.n;
    long long f1 = g.edge_count();
    int d = m.dim();
    if (f1 < n * (n - 1) / 2 - n + d + 2) {
        e.applicable = false;
        return e;
    }
    e.lhs = tau0;
    e.rhs = bl_tau0(n, f1, d);
    e.slack = e.rhs - e.lhs;
    e.holds = e.slack >= 0;
    return e;
}

}  // namespace tauv
