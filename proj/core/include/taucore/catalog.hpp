#ifndef TAUCORE_CATALOG_HPP
#define TAUCORE_CATALOG_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "taucore/complex.hpp"
#include "taucore/field.hpp"
#include "taucore/tau.hpp"

namespace tauv {

struct CatalogEntry {
    std::string name;
    SimplicialComplex complex;
};

struct CatalogParseError : std::runtime_error {
    int line;
    CatalogParseError(int line_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg),
          line(line_) {}
};

/// Two line formats, freely mixed: `name=[[v,...],...]` with 1-based labels,
/// or a JSON object {"name":.., "n":.., "facets":[[..]]} ("n" optional,
/// defaults to the largest label). `#` comments and blank lines ignored.
std::vector<CatalogEntry> parse_facet_list(const std::string& text);

/// Bracket format, one entry per line; parse(serialize(x)) == x.
std::string serialize_facet_list(const std::vector<CatalogEntry>& entries);

enum class BatchKind { tau0_only, full };

struct BatchOptions {
    FieldSpec field;
    BatchKind kind = BatchKind::full;
    TauOptions tau;
};

struct BatchResult {
    std::vector<std::string> csv;  // header, data rows, then summary rows
    std::vector<std::string> warnings;
};

/// One CSV row per entry: name, f-vector, g1, g2, tau entries as exact p/q
/// plus 12-place decimals. Summary rows give the per-g2 min and max of tau_0
/// and the matching Billera-Lee sphere's tau_0 per (f0, g2) bucket.
/// Entries beyond the enumeration cap are skipped with a warning.
BatchResult batch_tau(const std::vector<CatalogEntry>& entries, const BatchOptions& opt);

struct CensusBucket {
    long long total = 0;
    long long bl_matches = 0;  // entries whose whole tau-vector is the BL one
};

/// Counts, per (f0, g2), catalog 3-spheres attaining the Billera-Lee
/// tau-vector exactly.
std::map<std::pair<long long, long long>, CensusBucket> bl_match_census(
    const std::vector<CatalogEntry>& entries, const BatchOptions& opt);

/// The Billera-Lee 3-sphere with f0 vertices and given g2.
SimplicialComplex bl_reference_sphere(long long f0, long long g2);

}  // namespace tauv

#endif
