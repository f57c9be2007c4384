#include "taucore/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include <json.hpp>

#include "taucore/constructions.hpp"
#include "taucore/graph.hpp"

namespace tauv {

namespace {

std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

SimplicialComplex complex_from_lists(const std::vector<std::vector<int>>& facets,
                                     int declared_n, int line) {
    int max_label = 0;
    for (const auto& f : facets)
        for (int v : f) {
            if (v <= 0) throw CatalogParseError(line, "vertex label must be positive");
            max_label = std::max(max_label, v);
        }
    int n = declared_n > 0 ? declared_n : max_label;
    if (n > SimplicialComplex::kMaxGroundSet)
        throw CatalogParseError(line, "more than 63 vertex labels");
    if (declared_n > 0 && max_label > declared_n)
        throw CatalogParseError(line, "label exceeds declared ground set size");
    return build_complex(facets, n);
}

/// `[[v,...],[v,...],...]` with 1-based integer labels.
std::vector<std::vector<int>> parse_bracket_lists(const std::string& text, int line) {
    std::vector<std::vector<int>> facets;
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto expect = [&](char c) {
        skip_ws();
        if (i >= text.size() || text[i] != c)
            throw CatalogParseError(line, std::string("expected '") + c + "'");
        ++i;
    };
    expect('[');
    skip_ws();
    while (i < text.size() && text[i] != ']') {
        expect('[');
        std::vector<int> facet;
        skip_ws();
        while (i < text.size() && text[i] != ']') {
            size_t start = i;
            if (text[i] == '-') ++i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i == start) throw CatalogParseError(line, "expected integer label");
            facet.push_back(std::stoi(text.substr(start, i - start)));
            skip_ws();
            if (i < text.size() && text[i] == ',') {
                ++i;
                skip_ws();
            }
        }
        expect(']');
        facets.push_back(std::move(facet));
        skip_ws();
        if (i < text.size() && text[i] == ',') {
            ++i;
            skip_ws();
        }
    }
    expect(']');
    skip_ws();
    if (i != text.size()) throw CatalogParseError(line, "trailing characters");
    return facets;
}

CatalogEntry parse_json_line(const std::string& text, int line) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw CatalogParseError(line, e.what());
    }
    if (!j.is_object() || !j.contains("name") || !j.contains("facets"))
        throw CatalogParseError(line, "object must carry \"name\" and \"facets\"");
    CatalogEntry entry;
    entry.name = j["name"].get<std::string>();
    int declared_n = j.value("n", 0);
    std::vector<std::vector<int>> facets;
    try {
        facets = j["facets"].get<std::vector<std::vector<int>>>();
    } catch (const nlohmann::json::exception&) {
        throw CatalogParseError(line, "\"facets\" must be a list of label lists");
    }
    entry.complex = complex_from_lists(facets, declared_n, line);
    return entry;
}

struct EntryStats {
    FaceVectors fv;
    long long g1 = 0, g2 = 0;
};

EntryStats stats_of(const SimplicialComplex& c) {
    EntryStats st;
    st.fv = face_vectors(c);
    if (st.fv.h_defined) {
        if (st.fv.g.size() > 1) st.g1 = st.fv.g[1];
        if (st.fv.g.size() > 2) st.g2 = st.fv.g[2];
    }
    return st;
}

}  // namespace

std::vector<CatalogEntry> parse_facet_list(const std::string& text) {
    std::vector<CatalogEntry> entries;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string s = strip(raw);
        if (s.empty() || s[0] == '#') continue;
        if (s[0] == '{') {
            entries.push_back(parse_json_line(s, line));
            continue;
        }
        size_t eq = s.find('=');
        if (eq == std::string::npos)
            throw CatalogParseError(line, "expected name=[[...]] or a JSON object");
        CatalogEntry entry;
        entry.name = strip(s.substr(0, eq));
        if (entry.name.empty()) throw CatalogParseError(line, "empty name");
        try {
            auto facets = parse_bracket_lists(strip(s.substr(eq + 1)), line);
            entry.complex = complex_from_lists(facets, 0, line);
        } catch (const std::invalid_argument& e) {
            throw CatalogParseError(line, e.what());
        }
        entries.push_back(std::move(entry));
    }
    return entries;
}

std::string serialize_facet_list(const std::vector<CatalogEntry>& entries) {
    std::ostringstream os;
    for (const auto& e : entries) {
        os << e.name << "=[";
        bool first_facet = true;
        for (VertexSet f : e.complex.facets()) {
            if (!first_facet) os << ',';
            first_facet = false;
            os << '[';
            bool first = true;
            for (int v : f.labels_1based()) {
                if (!first) os << ',';
                first = false;
                os << v;
            }
            os << ']';
        }
        os << "]\n";
    }
    return os.str();
}

SimplicialComplex bl_reference_sphere(long long f0, long long g2) {
    // 3-spheres arise as boundaries of 4-balls; g1 = f0 - 5 for the
    // corresponding M-sequence (1, g1, g2).
    if (f0 == 5) {
        if (g2 != 0) throw std::invalid_argument("f0 = 5 forces g2 = 0");
        return boundary_simplex(3);
    }
    return billera_lee(4, {1, f0 - 5, g2}, static_cast<int>(f0)).sphere;
}

BatchResult batch_tau(const std::vector<CatalogEntry>& entries, const BatchOptions& opt) {
    BatchResult out;
    struct Row {
        const CatalogEntry* entry;
        EntryStats st;
        std::vector<Rational> tau;  // tau_{-1}..tau_d
    };
    std::vector<Row> rows;
    int dmax = -1;
    for (const auto& e : entries) {
        Row row{&e, stats_of(e.complex), {}};
        try {
            if (opt.kind == BatchKind::tau0_only) {
                row.tau.push_back(tau0_graph(skeleton_graph(e.complex), opt.tau));
            } else {
                row.tau = tau_vector(e.complex, opt.field, opt.tau).entries;
            }
        } catch (const EnumerationCapExceeded& ex) {
            out.warnings.push_back("skipped " + e.name + ": " + ex.what());
            continue;
        }
        dmax = std::max(dmax, e.complex.dim());
        rows.push_back(std::move(row));
    }

    std::ostringstream header;
    header << "name";
    for (int i = 0; i <= dmax; ++i) header << ",f" << i;
    header << ",g1,g2";
    if (opt.kind == BatchKind::tau0_only) {
        header << ",tau0,tau0_dec";
    } else {
        for (int i = -1; i <= dmax; ++i) header << ",tau(" << i << "),tau(" << i << ")_dec";
    }
    out.csv.push_back(header.str());

    // Per-g2 extremes of tau_0 and the BL reference per (f0, g2), for the
    // plot overlays. tau_0 sits at entries[1] in full mode, [0] otherwise.
    size_t t0 = opt.kind == BatchKind::tau0_only ? 0 : 1;
    std::map<long long, std::pair<Rational, Rational>> extremes;
    std::map<std::pair<long long, long long>, bool> buckets;
    for (const auto& row : rows) {
        std::ostringstream os;
        os << row.entry->name;
        int d = row.entry->complex.dim();
        for (int i = 0; i <= dmax; ++i)
            if (i <= d)
                os << ',' << row.st.fv.f.f(i);
            else
                os << ',';
        os << ',' << row.st.g1 << ',' << row.st.g2;
        size_t cols = opt.kind == BatchKind::tau0_only ? 1 : static_cast<size_t>(dmax) + 2;
        for (size_t i = 0; i < cols; ++i) {
            if (i < row.tau.size())
                os << ',' << rational_to_string(row.tau[i]) << ','
                   << rational_to_decimal(row.tau[i]);
            else
                os << ",,";
        }
        out.csv.push_back(os.str());

        if (t0 < row.tau.size()) {
            const Rational& v = row.tau[t0];
            auto [it, fresh] = extremes.try_emplace(row.st.g2, std::pair{v, v});
            if (!fresh) {
                it->second.first = std::min(it->second.first, v);
                it->second.second = std::max(it->second.second, v);
            }
            if (row.entry->complex.dim() == 3)
                buckets[{row.st.fv.f.f(0), row.st.g2}] = true;
        }
    }
    for (const auto& [g2, mm] : extremes) {
        out.csv.push_back("min_tau0[g2=" + std::to_string(g2) + "],,," +
                          rational_to_string(mm.first) + "," +
                          rational_to_decimal(mm.first));
        out.csv.push_back("max_tau0[g2=" + std::to_string(g2) + "],,," +
                          rational_to_string(mm.second) + "," +
                          rational_to_decimal(mm.second));
    }
    for (const auto& [key, unused] : buckets) {
        auto [f0, g2] = key;
        (void)unused;
        try {
            SimplicialComplex bl = bl_reference_sphere(f0, g2);
            Rational v = tau0_graph(skeleton_graph(bl), opt.tau);
            out.csv.push_back("bl_ref[f0=" + std::to_string(f0) +
                              ",g2=" + std::to_string(g2) + "],,," +
                              rational_to_string(v) + "," + rational_to_decimal(v));
        } catch (const std::exception& ex) {
            out.warnings.push_back("no reference sphere for f0=" + std::to_string(f0) +
                                   ", g2=" + std::to_string(g2) + ": " + ex.what());
        }
    }
    return out;
}

std::map<std::pair<long long, long long>, CensusBucket> bl_match_census(
    const std::vector<CatalogEntry>& entries, const BatchOptions& opt) {
    std::map<std::pair<long long, long long>, CensusBucket> out;
    std::map<std::pair<long long, long long>, TauVector> reference;
    for (const auto& e : entries) {
        if (e.complex.dim() != 3) continue;
        EntryStats st = stats_of(e.complex);
        std::pair<long long, long long> key{st.fv.f.f(0), st.g2};
        auto& bucket = out[key];
        ++bucket.total;
        auto it = reference.find(key);
        if (it == reference.end()) {
            SimplicialComplex bl = bl_reference_sphere(key.first, key.second);
            it = reference.emplace(key, tau_vector(bl, opt.field, opt.tau)).first;
        }
        if (tau_vector(e.complex, opt.field, opt.tau) == it->second) ++bucket.bl_matches;
    }
    return out;
}

}  // namespace tauv
