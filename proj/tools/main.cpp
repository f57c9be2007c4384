#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "taucore/bounds.hpp"
#include "taucore/catalog.hpp"
#include "taucore/constructions.hpp"
#include "taucore/graph.hpp"
#include "taucore/identities.hpp"
#include "taucore/tau.hpp"

using namespace tauv;
using nlohmann::json;

namespace {

constexpr int kExitParse = 1;
constexpr int kExitVerify = 2;

struct Globals {
    std::string field = "fp:2";
    int workers = 1;
    int cap = 22;
    std::string format = "text";

    FieldSpec field_spec() const { return FieldSpec::parse(field); }
    TauOptions tau_options() const { return {workers, cap}; }
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw CatalogParseError(0, "cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::vector<CatalogEntry> load(const std::string& path) {
    return parse_facet_list(read_input(path));
}

std::vector<int> parse_label_list(const std::string& s) {
    std::vector<int> out;
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) out.push_back(std::stoi(tok));
    return out;
}

VertexSet labels_to_set(const std::vector<int>& labels) {
    VertexSet v;
    for (int l : labels) {
        if (l < 1 || l > SimplicialComplex::kMaxGroundSet)
            throw CatalogParseError(0, "label out of range: " + std::to_string(l));
        v = v.with(l - 1);
    }
    return v;
}

json rational_json(const Rational& r) {
    return {{"exact", rational_to_string(r)}, {"decimal", rational_to_decimal(r)}};
}

void print_rational_row(const std::string& label, const std::vector<Rational>& v,
                        int first_index) {
    std::cout << label << ":";
    for (size_t i = 0; i < v.size(); ++i)
        std::cout << " " << label << "_" << (static_cast<int>(i) + first_index) << "="
                  << rational_to_string(v[i]);
    std::cout << "\n";
}

int cmd_tau(const Globals& g, const std::string& path, bool with_sigma, bool with_mu) {
    for (const auto& e : load(path)) {
        TauVector t = tau_vector(e.complex, g.field_spec(), g.tau_options());
        if (g.format == "json") {
            json j = {{"name", e.name}, {"n", t.ground_set_size}, {"tau", json::array()}};
            for (const auto& x : t.entries) j["tau"].push_back(rational_json(x));
            if (with_sigma) {
                j["sigma"] = json::array();
                for (const auto& x : sigma_vector(e.complex, g.field_spec(), g.tau_options()))
                    j["sigma"].push_back(rational_json(x));
            }
            if (with_mu) {
                j["mu"] = json::array();
                for (const auto& x :
                     mu_vector(e.complex, g.field_spec(), g.tau_options()).entries)
                    j["mu"].push_back(rational_json(x));
            }
            std::cout << j.dump() << "\n";
        } else {
            std::cout << e.name << "\n";
            print_rational_row("tau", t.entries, -1);
            if (with_sigma)
                print_rational_row("sigma",
                                   sigma_vector(e.complex, g.field_spec(), g.tau_options()), -1);
            if (with_mu)
                print_rational_row(
                    "mu", mu_vector(e.complex, g.field_spec(), g.tau_options()).entries, 0);
        }
    }
    return 0;
}

int cmd_betti(const Globals& g, const std::string& path) {
    for (const auto& e : load(path)) {
        BettiVector b = reduced_betti(e.complex, g.field_spec());
        std::cout << e.name << ":";
        for (size_t i = 0; i < b.entries.size(); ++i)
            std::cout << " b" << (static_cast<int>(i) - 1) << "=" << b.entries[i];
        std::cout << "\n";
    }
    return 0;
}

int cmd_hochster(const Globals& g, const std::string& path) {
    for (const auto& e : load(path)) {
        GradedBettiTable t = hochster_table(e.complex, g.field_spec(), g.tau_options());
        if (g.format == "csv") {
            std::cout << "name,i,j,r\n";
            for (int i = -1; i <= t.dim; ++i)
                for (int j = 0; j <= t.n; ++j)
                    if (t.r(i, j) != 0)
                        std::cout << e.name << ',' << i << ',' << j << ',' << t.r(i, j) << "\n";
        } else {
            std::cout << e.name << " (rows i = -1.." << t.dim << ", columns j = 0.." << t.n
                      << ")\n";
            for (int i = -1; i <= t.dim; ++i) {
                std::cout << "r[" << i << "]:";
                for (int j = 0; j <= t.n; ++j) std::cout << ' ' << t.r(i, j);
                std::cout << "\n";
            }
        }
    }
    return 0;
}

int cmd_graph_tau0(const Globals& g, const std::string& path) {
    for (const auto& e : load(path)) {
        Rational t0 = tau0_graph(skeleton_graph(e.complex), g.tau_options());
        std::cout << e.name << ": tau_0 = " << rational_to_string(t0) << " = "
                  << rational_to_decimal(t0) << "\n";
    }
    return 0;
}

void emit(const SimplicialComplex& c, const std::string& name) {
    std::cout << serialize_facet_list({{name, c}});
}

int cmd_verify(const Globals& g, const std::string& path) {
    bool all_ok = true;
    for (const auto& e : load(path)) {
        TauVector t = tau_vector(e.complex, g.field_spec(), g.tau_options());
        IdentityReport rep = verify_identities(e.complex, t);
        Classification cls = classify(e.complex);
        std::cout << e.name << ": pure=" << cls.is_pure
                  << " strongly_connected=" << cls.is_strongly_connected
                  << " closed_pseudomanifold=" << cls.is_closed_pseudomanifold
                  << " neighborliness=" << cls.neighborliness << "\n";
        for (const auto& id : rep.entries) {
            if (!id.applicable) {
                std::cout << "  " << id.name << ": not applicable\n";
                continue;
            }
            std::cout << "  " << id.name << ": " << (id.holds ? "ok" : "FAIL")
                      << " lhs=" << rational_to_string(id.lhs)
                      << " rhs=" << rational_to_string(id.rhs) << "\n";
        }
        if (!rep.all_hold()) all_ok = false;
    }
    return all_ok ? 0 : kExitVerify;
}

int cmd_bounds_pair(long long n, long long e, const std::string& mode) {
    BoundMode m = mode == "conjectured" ? BoundMode::conjectured : BoundMode::proven;
    auto [b1, b2] = mu_bound_pair(n, e, m);
    std::cout << "b1 <= " << rational_to_string(b1) << " = " << rational_to_decimal(b1)
              << "\nb2 <= " << rational_to_string(b2) << " = " << rational_to_decimal(b2)
              << "\n";
    return 0;
}

int cmd_batch(const Globals& g, const std::string& path, bool tau0_only) {
    BatchOptions opt{g.field_spec(), tau0_only ? BatchKind::tau0_only : BatchKind::full,
                     g.tau_options()};
    BatchResult res = batch_tau(load(path), opt);
    for (const auto& line : res.csv) std::cout << line << "\n";
    for (const auto& w : res.warnings) std::cerr << "warning: " << w << "\n";
    return 0;
}

int cmd_census(const Globals& g, const std::string& path) {
    BatchOptions opt{g.field_spec(), BatchKind::full, g.tau_options()};
    auto buckets = bl_match_census(load(path), opt);
    std::cout << "f0,g2,total,bl_matches\n";
    for (const auto& [key, b] : buckets)
        std::cout << key.first << ',' << key.second << ',' << b.total << ',' << b.bl_matches
                  << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact tau/sigma/mu vectors, graded Betti tables and sphere constructions"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--field", g.field, "coefficient field, fp:<p> or q")->capture_default_str();
    app.add_option("--workers", g.workers, "worker threads")->capture_default_str();
    app.add_option("--cap", g.cap, "max ground-set size for subset enumeration")
        ->capture_default_str();
    app.add_option("--format", g.format, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();

    std::string path = "-";
    bool with_sigma = false, with_mu = false, tau0_only = false;

    auto* tau = app.add_subcommand("tau", "tau-vector of each input complex");
    tau->add_option("file", path, "facet-list file, - for stdin");
    tau->add_flag("--sigma", with_sigma, "also print the sigma-vector");
    tau->add_flag("--mu", with_mu, "also print the mu-vector (closed pseudomanifolds)");

    auto* betti = app.add_subcommand("betti", "reduced Betti numbers");
    betti->add_option("file", path);
    auto* hochster = app.add_subcommand("hochster", "graded Betti table");
    hochster->add_option("file", path);
    auto* graph_tau0 = app.add_subcommand("graph-tau0", "tau_0 through the 1-skeleton");
    graph_tau0->add_option("file", path);
    auto* verify = app.add_subcommand("verify", "check every applicable exact identity");
    verify->add_option("file", path);

    auto* construct = app.add_subcommand("construct", "emit a named construction");
    construct->require_subcommand(1);
    int cd = 3, cn = 0, ci = 2, cj = 2, cm = 3;
    std::uint64_t seed = 0;
    std::string kvec;
    auto* c_simplex = construct->add_subcommand("simplex", "boundary of a (d+1)-simplex");
    c_simplex->add_option("--d", cd)->required();
    auto* c_ball = construct->add_subcommand("cyclic-ball", "lower facets of a cyclic polytope");
    c_ball->add_option("--d", cd)->required();
    c_ball->add_option("--n", cn)->required();
    auto* c_bl = construct->add_subcommand("billera-lee", "ball and sphere for an M-sequence");
    c_bl->add_option("--d", cd)->required();
    c_bl->add_option("--n", cn)->required();
    c_bl->add_option("--k", kvec, "comma-separated M-sequence k_0,k_1,...")->required();
    auto* c_stacked = construct->add_subcommand("stacked", "seeded random stacked sphere");
    c_stacked->add_option("--d", cd)->required();
    c_stacked->add_option("--n", cn)->required();
    c_stacked->add_option("--seed", seed);
    auto* c_join = construct->add_subcommand("join", "boundary-simplex join sphere");
    c_join->add_option("--i", ci)->required();
    c_join->add_option("--j", cj)->required();
    auto* c_cycle_join = construct->add_subcommand("cycle-join", "cycle joined with a simplex boundary");
    c_cycle_join->add_option("--m", cm)->required();
    c_cycle_join->add_option("--d", cd)->required();

    auto* connsum = app.add_subcommand("connsum", "connected sum of the first two entries");
    connsum->add_option("file", path);

    auto* flip = app.add_subcommand("flip", "bistellar flips");
    flip->require_subcommand(1);
    std::string f1s, f2s;
    long long budget = 1000;
    auto* flip_list = flip->add_subcommand("list", "all legal flips of the first entry");
    flip_list->add_option("file", path);
    auto* flip_apply = flip->add_subcommand("apply", "apply one flip");
    flip_apply->add_option("file", path);
    flip_apply->add_option("--f1", f1s, "labels entering (comma separated)")->required();
    flip_apply->add_option("--f2", f2s, "labels leaving")->required();
    auto* flip_explore = flip->add_subcommand("explore", "BFS closure under (i,j>=2) flips");
    flip_explore->add_option("file", path);
    flip_explore->add_option("--budget", budget, "max expansions")->capture_default_str();

    auto* bounds = app.add_subcommand("bounds", "Betti-number bound tables");
    bounds->require_subcommand(1);
    long long bn = 0, be = 0;
    std::string mode = "proven";
    auto* b_pair = bounds->add_subcommand("pair", "bounds for one link (n, e)");
    b_pair->add_option("--n", bn)->required();
    b_pair->add_option("--e", be)->required();
    b_pair->add_option("--mode", mode)->check(CLI::IsMember({"proven", "conjectured"}));
    auto* b_fig = bounds->add_subcommand("figure5", "the full feasible-parameter table");

    auto* batch = app.add_subcommand("batch", "CSV pipeline over a catalog");
    batch->add_option("file", path);
    batch->add_flag("--tau0-only", tau0_only, "skeleton fast path, tau_0 column only");

    auto* census = app.add_subcommand("census", "Billera-Lee tau-vector matches per (f0, g2)");
    census->add_option("file", path);

    CLI11_PARSE(app, argc, argv);

    try {
        if (tau->parsed()) return cmd_tau(g, path, with_sigma, with_mu);
        if (betti->parsed()) return cmd_betti(g, path);
        if (hochster->parsed()) return cmd_hochster(g, path);
        if (graph_tau0->parsed()) return cmd_graph_tau0(g, path);
        if (verify->parsed()) return cmd_verify(g, path);
        if (construct->parsed()) {
            if (c_simplex->parsed()) {
                emit(boundary_simplex(cd), "bd_simplex_d" + std::to_string(cd));
            } else if (c_ball->parsed()) {
                emit(lower_cyclic_facets(cd, cn),
                     "cyclic_ball_d" + std::to_string(cd) + "_n" + std::to_string(cn));
            } else if (c_bl->parsed()) {
                std::vector<long long> k;
                for (int v : parse_label_list(kvec)) k.push_back(v);
                auto r = billera_lee(cd, k, cn);
                emit(r.ball, "bl_ball");
                emit(r.sphere, "bl_sphere");
            } else if (c_stacked->parsed()) {
                emit(stacked_sphere(cd, cn, seed),
                     "stacked_d" + std::to_string(cd) + "_n" + std::to_string(cn));
            } else if (c_join->parsed()) {
                emit(simplex_join_sphere(ci, cj),
                     "join_" + std::to_string(ci) + "_" + std::to_string(cj));
            } else if (c_cycle_join->parsed()) {
                emit(cycle_join_sphere(cm, cd),
                     "cycle_join_m" + std::to_string(cm) + "_d" + std::to_string(cd));
            }
            return 0;
        }
        if (connsum->parsed()) {
            auto entries = load(path);
            if (entries.size() < 2) throw CatalogParseError(0, "need two entries");
            emit(connected_sum(entries[0].complex, entries[1].complex),
                 entries[0].name + "#" + entries[1].name);
            return 0;
        }
        if (flip->parsed()) {
            auto entries = load(path);
            if (entries.empty()) throw CatalogParseError(0, "empty catalog");
            const SimplicialComplex& m = entries[0].complex;
            if (flip_list->parsed()) {
                for (const auto& f : enumerate_flips(m))
                    std::cout << "(" << f.i() << "," << f.j() << ") f1=" << f.f1.to_string()
                              << " f2=" << f.f2.to_string() << "\n";
            } else if (flip_apply->parsed()) {
                FlipDescriptor f{labels_to_set(parse_label_list(f1s)),
                                 labels_to_set(parse_label_list(f2s))};
                if (!flip_is_legal(m, f)) {
                    std::cerr << "flip is not legal\n";
                    return kExitVerify;
                }
                emit(apply_flip(m, f), entries[0].name + "_flipped");
            } else {
                auto r = ::tauv::flip_explore(m, budget);
                std::cout << "types found: " << r.forms.size()
                          << (r.complete ? " (frontier exhausted)" : " (budget reached)")
                          << "\n";
            }
            return 0;
        }
        if (bounds->parsed()) {
            if (b_pair->parsed()) return cmd_bounds_pair(bn, be, mode);
            if (b_fig->parsed()) {
                for (const auto& line : figure_table_csv()) std::cout << line << "\n";
                return 0;
            }
        }
        if (batch->parsed()) return cmd_batch(g, path, tau0_only);
        if (census->parsed()) return cmd_census(g, path);
    } catch (const CatalogParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerify;
    }
    return 0;
}
