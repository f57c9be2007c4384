#ifndef TAUCORE_IDENTITIES_HPP
#define TAUCORE_IDENTITIES_HPP

#include <string>
#include <vector>

#include "taucore/complex.hpp"
#include "taucore/field.hpp"
#include "taucore/tau.hpp"

namespace tauv {

struct IdentityEntry {
    std::string name;
    bool applicable = true;
    bool holds = false;
    Rational lhs, rhs;
    /// rhs - lhs; zero at equality, nonnegative for satisfied inequalities.
    Rational slack;
};

struct IdentityReport {
    std::vector<IdentityEntry> entries;
    bool all_hold() const {
        for (const auto& e : entries)
            if (e.applicable && !e.holds) return false;
        return true;
    }
    const IdentityEntry* find(const std::string& name) const {
        for (const auto& e : entries)
            if (e.name == name) return &e;
        return nullptr;
    }
};

/// Checks, with exact arithmetic, every relation that applies to C given its
/// classification: the Euler alternating sum, its h-vector form, sphere
/// duality tau_i = tau_{d-1-i}, the odd-sphere special case, and the three
/// equivalent 3-sphere forms.
IdentityReport verify_identities(const SimplicialComplex& c, const TauVector& tau);

enum class TauFamily { stacked, simplex_join, cycle_join, cycle };

/// Closed-form tau-vectors of the named families.
/// stacked(d, n); simplex_join(i, j); cycle_join(m, d); cycle(m).
TauVector closed_form_tau(TauFamily family, int a, int b = 0);

/// Connected-sum formula: combine full tau-vectors of d-manifolds with n1
/// and n2 vertices (corrected constant, entries 0 and d-1 only).
TauVector connected_sum_tau(const TauVector& t1, const TauVector& t2, int d,
                            int n1, int n2);

/// k stackings on an n-vertex d-manifold: entries 0 and d-1 shift by
/// k/((d+2)(d+3)) - 1/(n+1) + 1/(n+k+1); the ends become 1/(n+k+1).
TauVector stacking_delta_tau(const TauVector& t, int d, int n, int k);

struct G2OneBounds {
    Rational tau0_lo, tau0_hi;
    Rational tau1_lo, tau1_hi;
    std::string extremal_lo, extremal_hi;
};

/// Exact tau_0/tau_1 ranges over all n-vertex d-spheres with g_2 = 1.
G2OneBounds g2_one_bounds(int d, int n);

/// For manifolds with at least C(n,2) - n + d + 2 edges: tau_0 is at most
/// the value of the matching Billera-Lee graph.
IdentityEntry nearly_neighborly_check(const SimplicialComplex& m, const Rational& tau0);

}  // namespace tauv

#endif
