#include "polyfacet/cli.hpp"

#include "polyfacet/error.hpp"
#include "polyfacet/facet_search.hpp"
#include "polyfacet/io.hpp"
#include "polyfacet/oracle.hpp"
#include "polyfacet/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

namespace polyfacet {

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kInputError = 2;

int exit_code(ErrorCode code) {
    switch (code) {
        case ErrorCode::IncompleteEnumeration:
        case ErrorCode::LpFailure:
        case ErrorCode::IterationLimit:
            return kMismatch;
        default:
            return kInputError;
    }
}

// POLYFACET_TOL overrides the default facet band; --tol overrides both.
Tolerances resolve_tolerances(std::optional<double> flag) {
    Tolerances tol;
    if (const char* env = std::getenv("POLYFACET_TOL"); !flag && env && *env) {
        const std::string text(env);
        double value = 0.0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc() || ptr != text.data() + text.size()) {
            throw Error(ErrorCode::InvalidArgument, "POLYFACET_TOL is not a decimal number: '" + text + "'");
        }
        tol.tol_face = value;
    }
    if (flag) tol.tol_face = *flag;
    tol.tol_eq = std::min(tol.tol_eq, tol.tol_face);
    tol.validate();
    return tol;
}

void print_stats(std::ostream& os, const EnumerateStats& s) {
    os << "vertices: " << s.vertices << '\n'
       << "dimension: " << s.dimension << '\n'
       << "facets: " << s.facets << '\n'
       << "edges: " << s.edges << '\n'
       << "quick-test edges: " << s.adjacency.quick_edges << '\n'
       << "lp-test edges: " << s.adjacency.lp_edges << '\n'
       << "lp-test invocations: " << s.adjacency.lp_invocations << '\n'
       << "harvested facets: " << s.adjacency.harvested << '\n'
       << "branch facets: " << s.facets_from_search << '\n'
       << "repair facets: " << s.facets_from_repair << '\n'
       << "branches: " << s.branches << " (pruned " << s.pruned_branches << ", singular " << s.singular_branches
       << ")\n"
       << std::fixed << std::setprecision(6) << "adjacency time: " << s.adjacency_seconds << " s\n"
       << "wall time: " << s.total_seconds << " s\n"
       << std::defaultfloat;
}

struct Common {
    std::string input;
    std::optional<double> tol;
};

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Facet enumeration for convex polytopes given by their vertices", "polyfacet"};
    app.require_subcommand(1);

    Common enumerate_args;
    std::string output;
    bool no_repair = false;
    bool stats = false;
    bool serial = false;
    auto* enumerate = app.add_subcommand("enumerate", "Compute the H-representation of a V-representation");
    enumerate->add_option("input", enumerate_args.input, "Input .ext file")->required();
    enumerate->add_option("-o,--output", output, "Output .ine file (stdout when omitted)");
    enumerate->add_option("--tol", enumerate_args.tol, "Facet membership tolerance");
    enumerate->add_flag("--no-repair", no_repair, "Disable the repair pass");
    enumerate->add_flag("--stats", stats, "Print counts and timings");
    enumerate->add_flag("--serial", serial, "Classify vertex pairs on one thread");

    Common edges_args;
    auto* edges = app.add_subcommand("edges", "List the edges and the test that decided each");
    edges->add_option("input", edges_args.input, "Input .ext file")->required();
    edges->add_option("--tol", edges_args.tol, "Facet membership tolerance");

    Common check_args;
    auto* check = app.add_subcommand("check", "Compare the search against the brute-force oracle");
    check->add_option("input", check_args.input, "Input .ext file")->required();
    check->add_option("--tol", check_args.tol, "Facet membership tolerance");

    std::size_t gen_n = 0;
    std::size_t gen_d = 0;
    std::uint64_t gen_seed = 0;
    std::string gen_output;
    auto* gen = app.add_subcommand("gen", "Sample a polytope with vertices on the unit sphere");
    gen->add_option("-n", gen_n, "Vertex count")->required();
    gen->add_option("-d", gen_d, "Dimension")->required();
    gen->add_option("--seed", gen_seed, "Generator seed");
    gen->add_option("-o,--output", gen_output, "Output .ext file (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*enumerate) {
            const Tolerances tol = resolve_tolerances(enumerate_args.tol);
            const VertexMatrix V = read_ext(enumerate_args.input);
            EnumerateOptions options;
            options.repair = !no_repair;
            options.parallel = !serial;
            const FacetEnumeration result = enumerate_facets(V, tol, options);
            if (output.empty()) {
                format_ine(out, result.hrep.H, result.hrep.b);
                if (stats) print_stats(err, result.stats);
            } else {
                write_ine(output, result.hrep);
                if (stats) print_stats(out, result.stats);
            }
            return kOk;
        }
        if (*edges) {
            const Tolerances tol = resolve_tolerances(edges_args.tol);
            const VertexMatrix V = read_ext(edges_args.input);
            const CenteredPolytope P = rescale_unit(center_vertices(V, tol));
            const AdjacencyResult adj = build_adjacency(P, tol, false);
            for (const auto& e : adj.edges) {
                out << e.i + 1 << ' ' << e.j + 1 << ' ' << to_string(e.method) << '\n';
            }
            out << "edges: " << adj.edges.size() << " (QuickTest " << adj.stats.quick_edges << ", LpTest "
                << adj.stats.lp_edges << ")\n"
                << "lp-test invocations: " << adj.stats.lp_invocations << '\n';
            return kOk;
        }
        if (*check) {
            const Tolerances tol = resolve_tolerances(check_args.tol);
            const VertexMatrix V = read_ext(check_args.input);
            const FacetEnumeration result = enumerate_facets(V, tol);
            const OracleResult oracle = run_oracle(result.polytope, tol);
            const SetComparison facets = compare_facets(result.planes, oracle.facets, tol.tol_face);
            const SetComparison edge_cmp = compare_edges(result.adjacency.edges(), oracle.edges);
            out << "facets: " << facets.matched << '/' << oracle.facets.size() << " match";
            if (facets.only_engine) out << ", " << facets.only_engine << " extra";
            out << '\n' << "edges: " << edge_cmp.matched << '/' << oracle.edges.size() << " match";
            if (edge_cmp.only_engine) out << ", " << edge_cmp.only_engine << " extra";
            out << '\n';
            return facets.equal() ? kOk : kMismatch;
        }
        if (*gen) {
            const VertexMatrix V = sample_polytope(gen_n, gen_d, gen_seed);
            if (gen_output.empty()) {
                format_ext(out, V);
            } else {
                write_ext(gen_output, V);
            }
            return kOk;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code(e.code());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kMismatch;
    }
    return kInputError;
}

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("polyfacet");
    for (const auto& a : args) argv.push_back(a.c_str());
    return cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace polyfacet
