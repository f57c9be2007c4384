#ifndef TAUCORE_TAU_HPP
#define TAUCORE_TAU_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "taucore/complex.hpp"
#include "taucore/field.hpp"
#include "taucore/homology.hpp"
#include "taucore/rational.hpp"

namespace tauv {

struct TauOptions {
    int workers = 1;
    int cap = 22;  // refuse ground sets larger than this
};

/// Thrown when the 2^n subset enumeration would exceed the configured cap.
struct EnumerationCapExceeded : std::runtime_error {
    EnumerationCapExceeded(int n, int cap)
        : std::runtime_error("ground set of size " + std::to_string(n) +
                             " exceeds enumeration cap " + std::to_string(cap) +
                             " (would visit 2^" + std::to_string(n) +
                             " induced subcomplexes)") {}
};

struct TauVector {
    /// entries[i+1] = tau_i, i = -1..d
    std::vector<Rational> entries;
    int ground_set_size = 0;
    FieldSpec field;

    Rational tau(int i) const {
        int idx = i + 1;
        if (idx < 0 || idx >= static_cast<int>(entries.size())) return 0;
        return entries[static_cast<size_t>(idx)];
    }
    int dim() const { return static_cast<int>(entries.size()) - 2; }
    bool operator==(const TauVector& o) const { return entries == o.entries; }
};

struct GradedBettiTable {
    int n = 0;    // ground set size
    int dim = -1; // complex dimension
    /// rows[i+1][j] = r_{i,j}, -1 <= i < j... stored for 0 <= j <= n
    std::vector<std::vector<long long>> rows;

    long long r(int i, int j) const {
        if (i + 1 < 0 || i + 1 >= static_cast<int>(rows.size())) return 0;
        if (j < 0 || j > n) return 0;
        return rows[static_cast<size_t>(i) + 1][static_cast<size_t>(j)];
    }
};

struct MuVector {
    std::vector<Rational> entries;  // mu_0..mu_d
    Rational mu(int i) const { return entries[static_cast<size_t>(i)]; }
    bool operator==(const MuVector&) const = default;
};

/// Per-cardinality integer Betti sums S[k][i+1] = sum_{|W|=k} beta~_i(C[W]);
/// one enumeration pass feeds tau, sigma and the graded Betti table.
struct SubsetBettiSums {
    int n = 0;
    int dim = -1;
    std::vector<std::vector<long long>> s;  // (n+1) x (dim+2)
};

SubsetBettiSums subset_betti_sums(const SimplicialComplex& c, const FieldSpec& field,
                                  const TauOptions& opt = {});

TauVector tau_vector(const SimplicialComplex& c, const FieldSpec& field,
                     const TauOptions& opt = {});

/// sigma over the complex's own vertex set (Betti convention with
/// the empty set counted into the degree-0 term).
std::vector<Rational> sigma_vector(const SimplicialComplex& c, const FieldSpec& field,
                                   const TauOptions& opt = {});

GradedBettiTable hochster_table(const SimplicialComplex& c, const FieldSpec& field,
                                const TauOptions& opt = {});

TauVector tau_from_table(const GradedBettiTable& t);

/// mu_i = sum over vertices of tau_{i-1}(link), each link on its own
/// vertex set. Requires a closed pseudomanifold.
MuVector mu_vector(const SimplicialComplex& m, const FieldSpec& field,
                   const TauOptions& opt = {});

struct TightnessEntry {
    int i = 0;
    long long beta = 0;  // unreduced Betti number at i = 0, reduced above
    Rational mu;
    bool equal = false;
};

struct TightnessReport {
    std::vector<TightnessEntry> rows;
    bool mu_matches_beta = false;
    bool injectivity_checked = false;
    bool injectivity_ok = false;
    std::optional<VertexSet> failure_witness;
    int failure_dim = -1;
};

/// Compares beta against mu per dimension; when check_injectivity is set
/// (and n is small enough for the caller's taste) also runs the exhaustive
/// induced-subcomplex injectivity test defining tightness.
TightnessReport tightness_report(const SimplicialComplex& m, const FieldSpec& field,
                                 const TauOptions& opt = {},
                                 bool check_injectivity = false);

}  // namespace tauv

#endif
