#include "unidom/cli.hpp"

#include "unidom/bounds.hpp"
#include "unidom/constructions.hpp"
#include "unidom/graph_io.hpp"
#include "unidom/json_output.hpp"
#include "unidom/search.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

namespace unidom {

using nlohmann::json;

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string format_set(VertexSet s) {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (Vertex v : s.to_vector()) {
        out << (first ? "" : ",") << v;
        first = false;
    }
    out << '}';
    return out.str();
}

std::string render(const Graph& g, const std::string& format,
                   const std::vector<std::string>& labels = {}) {
    if (format == "graph6") return emit_graph6(g) + "\n";
    if (format == "edgelist") return emit_edge_list(g);
    return emit_dot(g, labels);
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << text;
}

Graph read_single_graph(const std::string& path) {
    auto graphs = read_graph_file(path);
    if (graphs.size() != 1) {
        throw UsageError(path + ": expected exactly one graph, found " +
                         std::to_string(graphs.size()));
    }
    return std::move(graphs.front());
}

// --- bound -----------------------------------------------------------------

struct BoundArgs {
    int n = 0;
    int gamma = 0;
    std::optional<int> n_max;
    std::optional<int> gamma_max;
    bool json = false;
};

int cmd_bound(const BoundArgs& a, std::ostream& out) {
    const int n_hi = a.n_max.value_or(a.n);
    const int g_hi = a.gamma_max.value_or(a.gamma);
    if (a.n < 1 || a.gamma < 1 || n_hi < a.n || g_hi < a.gamma) {
        throw UsageError("bound: need 1 <= n <= n-max and 1 <= gamma <= gamma-max");
    }
    std::vector<json> rows;
    for (int g = a.gamma; g <= g_hi; ++g) {
        for (int n = a.n; n <= n_hi; ++n) rows.push_back(bound_row(n, g));
    }

    if (a.json) {
        json doc;
        if (rows.size() == 1) {
            doc = rows.front();
            doc["schema"] = kSchemaTag;
        } else {
            doc = {{"schema", kSchemaTag}, {"rows", rows}};
        }
        out << doc.dump() << '\n';
        return exit_code::ok;
    }
    static const char* columns[] = {"n", "gamma", "m_bipartite", "m_fischermann", "vizing", "phi"};
    for (std::size_t c = 0; c < std::size(columns); ++c) out << (c ? "\t" : "") << columns[c];
    out << '\n';
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < std::size(columns); ++c) {
            const json& v = row.at(columns[c]);
            out << (c ? "\t" : "")
                << (v.is_null() ? "NA" : v.is_string() ? v.get<std::string>() : v.dump());
        }
        out << '\n';
    }
    return exit_code::ok;
}

// --- construct -------------------------------------------------------------

struct ConstructArgs {
    std::string family;
    int n = 0;
    int gamma = 0;
    std::string format = "graph6";
    bool verify = false;
    std::string out_path;
};

int cmd_construct(const ConstructArgs& a, std::ostream& out) {
    static const std::map<std::string, Family> families = {
        {"bipartite", Family::bipartite},
        {"fischermann", Family::fischermann},
        {"star", Family::star},
    };
    const Family family = families.at(a.family);
    if (family != Family::star && a.gamma == 0) throw UsageError("construct: --gamma is required");

    Construction built;
    try {
        built = construct(family, a.n, a.gamma);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const std::string text = render(built.graph, a.format, built.layout.dot_labels());
    if (!a.out_path.empty()) write_file(a.out_path, text);
    if (!a.verify) {
        if (a.out_path.empty()) out << text;
        return exit_code::ok;
    }

    int expected = 0;
    switch (family) {
        case Family::bipartite: expected = static_cast<int>(bipartite_bound(a.n, a.gamma)); break;
        case Family::fischermann: expected = static_cast<int>(fischermann_bound(a.n, a.gamma)); break;
        case Family::star: expected = static_cast<int>(star_bound(a.n)); break;
    }
    const VerificationCertificate cert = verify_construction(built.graph, built.layout, expected);
    json doc = to_json(cert);
    doc["family"] = a.family;
    doc["n"] = a.n;
    doc["gamma"] = built.layout.intended_dominators.size();
    doc["expected_size"] = expected;
    doc["graph6"] = emit_graph6(built.graph);
    out << doc.dump() << '\n';
    return cert.all_passed() ? exit_code::ok : exit_code::verification_failed;
}

// --- verify ----------------------------------------------------------------

struct VerifyArgs {
    std::string in;
    std::optional<int> expect_gamma;
    std::optional<int> expect_size;
    bool json = false;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
    const VerifyOutcome v = verify_file(a.in, {a.expect_gamma, a.expect_size});
    for (const auto& w : v.warnings) err << "warning: " << w << '\n';

    if (a.json) {
        json doc = to_json(v.report);
        doc["n"] = v.graph.order();
        doc["size"] = v.graph.size();
        doc["graph6"] = emit_graph6(v.graph);
        doc["mismatches"] = v.mismatches;
        doc["warnings"] = v.warnings;
        doc["passed"] = v.passed();
        out << doc.dump() << '\n';
    } else {
        const DominationReport& r = v.report;
        out << std::left;
        out << std::setw(16) << "order" << v.graph.order() << '\n';
        out << std::setw(16) << "size" << v.graph.size() << '\n';
        out << std::setw(16) << "gamma" << r.gamma << '\n';
        out << std::setw(16) << "unique" << (r.unique ? "yes" : "no") << '\n';
        for (const VertexSet& s : r.min_sets) out << std::setw(16) << "minimum set" << format_set(s) << '\n';
        if (r.unique) {
            out << std::setw(16) << "perfect" << (r.perfectly_dominated ? "yes" : "no") << '\n';
            out << std::setw(16) << "epn >= 2" << (r.epn_condition_met ? "yes" : "no") << '\n';
            for (const auto& [d, nb] : r.epn_by_dominator) {
                out << std::setw(16) << ("epn(" + std::to_string(d) + ")") << format_set(nb) << '\n';
            }
        }
        for (const auto& m : v.mismatches) out << std::setw(16) << "mismatch" << m << '\n';
        out << std::setw(16) << "result" << (v.passed() ? "PASS" : "FAIL") << '\n';
    }
    return v.passed() ? exit_code::ok : exit_code::verification_failed;
}

// --- search ----------------------------------------------------------------

struct SearchArgs {
    int n = 0;
    int gamma = 0;
    std::optional<int> size;
    std::optional<double> budget;
    std::string witnesses_path;
    unsigned threads = 0;
    bool json = false;
};

int cmd_search(const SearchArgs& a, std::ostream& out, std::ostream& err) {
    SearchOptions opts;
    if (a.budget) opts.budget = std::chrono::duration<double>(*a.budget);
    opts.threads = a.threads;
    opts.progress = [&err](std::uint64_t scanned, int best) {
        err << "scanned=" << scanned << " best=" << best << '\n';
    };

    SearchResult r;
    try {
        r = a.size ? count_extremal_witnesses(a.n, a.gamma, *a.size, opts)
                   : max_umd_bipartite_size(a.n, a.gamma, opts);
    } catch (const SearchError& e) {
        throw UsageError(e.what());
    }
    err << "scanned=" << r.graphs_scanned << " best=" << r.max_size << '\n';

    if (!a.witnesses_path.empty()) {
        std::string text;
        for (const auto& w : r.witnesses) text += w + "\n";
        write_file(a.witnesses_path, text);
    }
    if (a.json) {
        out << to_json(r).dump() << '\n';
    } else {
        out << std::left;
        out << std::setw(18) << "n" << r.n << '\n';
        out << std::setw(18) << "gamma" << r.gamma << '\n';
        out << std::setw(18) << (a.size ? "size" : "max_size") << r.max_size << '\n';
        out << std::setw(18) << "classes" << r.witnesses.size() << '\n';
        out << std::setw(18) << "graphs_scanned" << r.graphs_scanned << '\n';
        out << std::setw(18) << "elapsed_seconds" << r.elapsed.count() << '\n';
        out << std::setw(18) << "complete" << (r.complete ? "yes" : "no (budget exhausted)") << '\n';
    }
    return r.complete ? exit_code::ok : exit_code::budget_truncated;
}

// --- complement / iso ------------------------------------------------------

int cmd_complement(const std::string& in, const std::string& format, std::ostream& out,
                   std::ostream& err) {
    const Graph g = read_single_graph(in);
    const auto p = find_bipartition(g);
    if (!p) {
        err << "error: graph is not bipartite\n";
        return exit_code::verification_failed;
    }
    out << render(bipartite_complement(g, *p), format);
    return exit_code::ok;
}

int cmd_iso(const std::string& lhs, const std::string& rhs, bool as_json, std::ostream& out) {
    const bool iso = are_isomorphic(read_single_graph(lhs), read_single_graph(rhs));
    if (as_json) {
        out << json{{"schema", kSchemaTag}, {"isomorphic", iso}}.dump() << '\n';
    } else {
        out << (iso ? "isomorphic" : "not isomorphic") << '\n';
    }
    return iso ? exit_code::ok : exit_code::verification_failed;
}

}  // namespace

VerifyOutcome verify_graph(const Graph& g, const Expectations& expect) {
    VerifyOutcome v{g, is_umd(g), {}, {}};
    if (g.has_isolated_vertex()) {
        v.warnings.push_back("graph has isolated vertices; UMD bounds assume none");
    }
    if (expect.gamma && *expect.gamma != v.report.gamma) {
        v.mismatches.push_back("gamma: expected " + std::to_string(*expect.gamma) + ", got " +
                               std::to_string(v.report.gamma));
    }
    if (expect.size && *expect.size != g.size()) {
        v.mismatches.push_back("size: expected " + std::to_string(*expect.size) + ", got " +
                               std::to_string(g.size()));
    }
    return v;
}

VerifyOutcome verify_file(const std::string& path, const Expectations& expect) {
    return verify_graph(read_single_graph(path), expect);
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Unique minimum dominating set toolkit: bounds, extremal constructions, "
                 "verification and exhaustive search.",
                 "unidom"};
    app.require_subcommand(1);

    BoundArgs bound;
    auto* bound_cmd = app.add_subcommand("bound", "Evaluate bound formulas (TSV or JSON).");
    bound_cmd->add_option("--n", bound.n, "Order")->required();
    bound_cmd->add_option("--gamma", bound.gamma, "Domination number")->required();
    bound_cmd->add_option("--n-max", bound.n_max, "Sweep n up to this value");
    bound_cmd->add_option("--gamma-max", bound.gamma_max, "Sweep gamma up to this value");
    bool bound_tsv = false;
    auto* bj = bound_cmd->add_flag("--json", bound.json, "Emit JSON");
    auto* bt = bound_cmd->add_flag("--tsv", bound_tsv, "Emit TSV (default)");
    bj->excludes(bt);

    ConstructArgs con;
    auto* con_cmd = app.add_subcommand("construct", "Build an extremal graph.");
    con_cmd->add_option("--family", con.family, "bipartite | fischermann | star")
        ->required()
        ->check(CLI::IsMember({"bipartite", "fischermann", "star"}));
    con_cmd->add_option("--n", con.n, "Order")->required();
    con_cmd->add_option("--gamma", con.gamma, "Domination number");
    con_cmd->add_option("--format", con.format, "graph6 | dot | edgelist")
        ->check(CLI::IsMember({"graph6", "dot", "edgelist"}));
    con_cmd->add_flag("--verify", con.verify, "Verify and print the JSON certificate");
    con_cmd->add_option("--out", con.out_path, "Write the graph to this file");

    VerifyArgs ver;
    auto* ver_cmd = app.add_subcommand("verify", "Certify domination facts of a graph file.");
    ver_cmd->add_option("--in", ver.in, "graph6 or edge-list file")->required();
    ver_cmd->add_option("--expect-gamma", ver.expect_gamma, "Expected domination number");
    ver_cmd->add_option("--expect-size", ver.expect_size, "Expected edge count");
    ver_cmd->add_flag("--json", ver.json, "Emit JSON");

    SearchArgs sea;
    auto* sea_cmd = app.add_subcommand("search", "Exhaustive search over small bipartite graphs.");
    sea_cmd->add_option("--n", sea.n, "Order (<= 10)")->required();
    sea_cmd->add_option("--gamma", sea.gamma, "Domination number")->required();
    sea_cmd->add_option("--size", sea.size, "Count classes of exactly this size");
    sea_cmd->add_option("--budget", sea.budget, "Wall-clock budget in seconds")
        ->check(CLI::NonNegativeNumber);
    sea_cmd->add_option("--witnesses", sea.witnesses_path, "Write witnesses (graph6) here");
    sea_cmd->add_option("--threads", sea.threads, "Worker threads (default: UNIDOM_THREADS or all)");
    sea_cmd->add_flag("--json", sea.json, "Emit JSON");

    std::string comp_in, comp_format = "graph6";
    auto* comp_cmd = app.add_subcommand("complement", "Bipartite complement of a graph file.");
    comp_cmd->add_option("--in", comp_in, "graph6 or edge-list file")->required();
    comp_cmd->add_option("--format", comp_format, "graph6 | dot | edgelist")
        ->check(CLI::IsMember({"graph6", "dot", "edgelist"}));

    std::string iso_a, iso_b;
    bool iso_json = false;
    auto* iso_cmd = app.add_subcommand("iso", "Test two graph files for isomorphism.");
    iso_cmd->add_option("--a", iso_a, "First graph file")->required();
    iso_cmd->add_option("--b", iso_b, "Second graph file")->required();
    iso_cmd->add_flag("--json", iso_json, "Emit JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e, out, err);
        err << "usage error: " << e.what() << '\n';
        return exit_code::usage;
    }

    try {
        if (*bound_cmd) return cmd_bound(bound, out);
        if (*con_cmd) return cmd_construct(con, out);
        if (*ver_cmd) return cmd_verify(ver, out, err);
        if (*sea_cmd) return cmd_search(sea, out, err);
        if (*comp_cmd) return cmd_complement(comp_in, comp_format, out, err);
        if (*iso_cmd) return cmd_iso(iso_a, iso_b, iso_json, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return exit_code::usage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::usage;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::usage;
    }
    return exit_code::usage;
}

}  // namespace unidom
