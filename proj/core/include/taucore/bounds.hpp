#ifndef TAUCORE_BOUNDS_HPP
#define TAUCORE_BOUNDS_HPP

#include <string>
#include <vector>

#include "taucore/identities.hpp"
#include "taucore/rational.hpp"

namespace tauv {

enum class BoundMode { proven, conjectured };

/// Betti-number bounds for a 2-neighborly 4-manifold all of whose vertex
/// links are 3-spheres with f-vector (n, e, 2(e-n), e-n):
///   b1 <= (n+1) * t0,  b2 <= (n+1) * (2 t0 - (n^2-4n+5)/(5(n+1)) + e/30)
/// with t0 the tau_0 of the matching reference graph (parameter 3 proven,
/// 4 conjectured).
std::pair<Rational, Rational> mu_bound_pair(long long n, long long e, BoundMode mode);

struct BoundRow {
    long long link_n = 0, link_e = 0;
    std::vector<long long> manifold_f;  // f_0..f_4
    long long chi = 0;
    std::pair<long long, long long> proven_pair, conjectured_pair;  // floored
    std::pair<Rational, Rational> proven_exact, conjectured_exact;
};

BoundRow bound_row(long long n, long long e);

/// The fixed table of feasible constant-link f-vectors (35 rows).
std::vector<BoundRow> figure_table();

/// Header + rows in the documented CSV schema.
std::vector<std::string> figure_table_csv();

struct TightnessInequalities {
    /// C(f0-k-2, k+1) >= (-1)^k C(2k+1, k+1) (chi - 2), equality iff
    /// (k+1)-neighborly and tight.
    static IdentityEntry chi_bound(long long f0, long long chi, int k);
    /// g2 >= C(d+2, 2) beta1
    static IdentityEntry g2_bound(long long g2, int d, long long beta1);
    /// C(n-d-1, 2) >= C(d+2, 2) beta1 (tight-neighborly threshold)
    static IdentityEntry tight_neighborly(long long n, int d, long long beta1);
};

}  // namespace tauv

#endif
