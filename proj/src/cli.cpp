#include "shadowbound/cli.hpp"

#include "shadowbound/bounds.hpp"
#include "shadowbound/combinatorics.hpp"
#include "shadowbound/constructions.hpp"
#include "shadowbound/graph.hpp"
#include "shadowbound/json_io.hpp"
#include "shadowbound/oracle.hpp"
#include "shadowbound/set_family.hpp"
#include "shadowbound/verify.hpp"

#include "CLI11.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace shadowbound {

namespace {

Json report_to_json(const BoundReport& rep) {
    Json j = Json::object();
    j["value"] = rep.value;
    j["regime"] = regime_name(rep.regime);
    j["r"] = std::isnan(rep.r) ? Json() : Json(rep.r);
    j["r_prime"] = rep.r_prime ? Json(*rep.r_prime) : Json();
    j["threshold_t"] = rep.threshold_t;
    j["exact"] = rep.exact;
    j["asymptotic_caveat"] = rep.asymptotic_caveat;
    return j;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    out << content;
    if (!out) throw std::runtime_error("failed writing to " + path);
}

std::string csv_num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

// Input sniffing: a leading line with one integer is an edge list, with two
// integers a set-family text, anything else graph6.
enum class InputKind { Graph, Family };

InputKind sniff_input(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        long long a = 0, b = 0;
        std::string rest;
        if (ls >> a) {
            if (ls >> b) return (ls >> rest) ? InputKind::Graph : InputKind::Family;
            return InputKind::Graph;
        }
        if (!line.empty()) return InputKind::Graph;
    }
    return InputKind::Graph;
}

int resolve_workers(int cli_workers, bool cli_given, std::ostream& err) {
    if (cli_given) {
        if (cli_workers < 1) {
            err << "error: --workers must be >= 1\n";
            return -1;
        }
        return cli_workers;
    }
    const char* env = std::getenv("SHADOWBOUND_WORKERS");
    if (env == nullptr || *env == '\0') return 1;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1) {
        err << "error: SHADOWBOUND_WORKERS must be a positive integer, got \"" << env << "\"\n";
        return -1;
    }
    return static_cast<int>(v);
}

int cmd_bound_shadow(long long n, double d, std::ostream& out) {
    const BoundReport rep = shadow_mindeg_bound(n, d);
    Json j = Json::object();
    j["command"] = "bound shadow";
    Json params = Json::object();
    params["n"] = n;
    params["d"] = d;
    j["params"] = params;
    j["report"] = report_to_json(rep);
    j["naive_bound"] = naive_mindeg_shadow_bound(n, 3, d);
    out << j.dump() << "\n";
    return 0;
}

int cmd_bound_edges(long long n, double t, std::ostream& out) {
    const BoundReport rep = edge_lower_bound(n, t);
    Json j = Json::object();
    j["command"] = "bound edges";
    Json params = Json::object();
    params["n"] = n;
    params["t"] = t;
    j["params"] = params;
    j["report"] = report_to_json(rep);
    out << j.dump() << "\n";
    return 0;
}

int cmd_construct(const std::string& kind_name, int n, double t, const std::string& out_path,
                  const std::string& format, std::ostream& out) {
    ConstructionKind kind;
    if (kind_name == "g1") kind = ConstructionKind::G1;
    else if (kind_name == "g2") kind = ConstructionKind::G2;
    else if (kind_name == "g2p") kind = ConstructionKind::G2Prime;
    else if (kind_name == "cliques") kind = ConstructionKind::DisjointCliques;
    else kind = ConstructionKind::ExactSmall;

    const BuiltConstruction built = build_construction(kind, n, t);
    const std::string encoded =
        format == "edgelist" ? to_edge_list(built.graph) : to_graph6(built.graph) + "\n";

    Json j = Json::object();
    j["command"] = "construct";
    Json params = Json::object();
    params["kind"] = kind_name;
    params["n"] = n;
    params["t"] = t;
    params["format"] = format;
    j["params"] = params;
    Json derived = Json::object();
    if (kind == ConstructionKind::G1) derived["overlap"] = built.spec.overlap;
    if (kind == ConstructionKind::G2) derived["r"] = built.spec.r;
    if (kind == ConstructionKind::G2Prime) derived["r_prime"] = built.spec.r_prime;
    j["derived"] = derived;
    j["edges"] = built.graph.edge_count();
    j["min_triangle_degree"] = built.cert.min_triangle_degree;
    j["required_triangle_degree"] = built.cert.required;
    j["certified"] = built.cert.ok;
    Json warnings = Json::array();
    for (const auto& w : built.warnings) warnings.push_back(w);
    j["warnings"] = warnings;
    if (!out_path.empty()) {
        write_file(out_path, encoded);
        j["out"] = out_path;
    } else {
        j["graph"] = format == "edgelist" ? encoded : to_graph6(built.graph);
    }
    out << j.dump() << "\n";
    return 0;
}

int cmd_analyze(const std::string& in_path, const std::string& report, bool t_given, double t,
                std::ostream& out, std::ostream& err) {
    const std::string text = read_file(in_path);
    const InputKind kind = sniff_input(text);

    Json j = Json::object();
    j["command"] = "analyze";
    Json params = Json::object();
    params["in"] = in_path;
    params["report"] = report;
    if (t_given) params["t"] = t;
    j["params"] = params;

    if (kind == InputKind::Family) {
        const SetFamily f = family_from_text(text);
        j["input"] = "family";
        j["n"] = f.n();
        j["k"] = f.k();
        j["size"] = f.size();
        if (report == "triangle-degrees") {
            Json degs = Json::array();
            for (int v = 0; v < f.n(); ++v) degs.push_back(degree(f, v));
            j["degrees"] = degs;
            j["min_degree"] = min_degree(f);
        } else if (report == "shadow") {
            j["shadow_size"] = shadow(f).size();
        } else {
            err << "error: delta-equality needs a graph input\n";
            return 2;
        }
        out << j.dump() << "\n";
        return 0;
    }

    const Graph g = read_graph_auto(text);
    j["input"] = "graph";
    j["n"] = g.n();
    j["edges"] = g.edge_count();
    if (report == "triangle-degrees") {
        Json degs = Json::array();
        for (int v = 0; v < g.n(); ++v) degs.push_back(g.degree(v));
        Json tdegs = Json::array();
        for (long long td : g.triangle_degrees()) tdegs.push_back(td);
        j["degrees"] = degs;
        j["triangle_degrees"] = tdegs;
        j["min_triangle_degree"] = g.min_triangle_degree();
        j["max_triangle_degree"] = g.max_triangle_degree();
    } else if (report == "shadow") {
        const SetFamily tri = clique_family(g, 3);
        const Graph sh = shadow_graph(tri);
        j["triangle_family_size"] = tri.size();
        j["shadow_size"] = sh.edge_count();
        j["shadow_equals_edges"] = sh.edge_count() == g.edge_count();
    } else {  // delta-equality
        if (!t_given) {
            err << "error: --report delta-equality requires --t\n";
            return 2;
        }
        j["delta"] = g.min_degree();
        j["f_delta"] = delta_based_bound(g, t);
        j["equality"] = check_delta_equality(g, t);
    }
    out << j.dump() << "\n";
    return 0;
}

int cmd_oracle(const std::string& mode, int n, long long threshold, int workers, bool no_pruning,
               bool progress, std::ostream& out) {
    SearchOptions opt;
    opt.workers = workers;
    opt.pruning = !no_pruning;
    opt.progress = progress;
    const SearchResult res =
        mode == "min-edges" ? min_edges_graph(n, threshold, opt) : min_shadow_family(n, threshold, opt);

    Json j = Json::object();
    j["command"] = "oracle " + mode;
    Json params = Json::object();
    params["n"] = n;
    params["threshold"] = threshold;
    params["workers"] = workers;
    params["pruning"] = !no_pruning;
    j["params"] = params;
    j["minimum"] = res.minimum;
    Json witnesses = Json::array();
    if (mode == "min-edges") {
        for (const Graph& g : res.witness_graphs) witnesses.push_back(to_graph6(g));
    } else {
        for (const SetFamily& f : res.witness_families) {
            Json fam = Json::array();
            for (const auto& e : f.all_edges()) {
                Json triple = Json::array();
                for (int v : e) triple.push_back(v);
                fam.push_back(triple);
            }
            witnesses.push_back(fam);
        }
    }
    j["witnesses"] = witnesses;
    j["nodes_explored"] = res.nodes_explored;
    j["wall_time_s"] = res.wall_time_s;
    out << j.dump() << "\n";
    return 0;
}

int cmd_sweep(long long n, double d_from, double d_to, double step, const std::string& out_path,
              std::ostream& out) {
    if (step <= 0) throw std::invalid_argument("--step must be positive");
    if (d_to < d_from) throw std::invalid_argument("--d-to must be >= --d-from");
    const double pairs = binom_real(static_cast<double>(n), 2);
    std::string csv = "d,regime,bound/C(n,2),construction_size/C(n,2)\n";
    long long rows = 0;
    for (double d = d_from; d <= d_to + 1e-12; d += step) {
        const BoundReport rep = shadow_mindeg_bound(n, d);
        const double t = binom_inverse(d * pairs, 2);
        const auto best = best_construction(static_cast<int>(n), t);
        const double size_ratio =
            best ? static_cast<double>(best->graph.edge_count()) / pairs
                 : std::numeric_limits<double>::quiet_NaN();
        csv += csv_num(d);
        csv += ',';
        csv += regime_name(rep.regime);
        csv += ',';
        csv += csv_num(rep.value / pairs);
        csv += ',';
        csv += csv_num(size_ratio);
        csv += '\n';
        ++rows;
    }
    write_file(out_path, csv);
    Json j = Json::object();
    j["command"] = "sweep";
    Json params = Json::object();
    params["n"] = n;
    params["d_from"] = d_from;
    params["d_to"] = d_to;
    params["step"] = step;
    j["params"] = params;
    j["rows"] = rows;
    j["out"] = out_path;
    out << j.dump() << "\n";
    return 0;
}

int cmd_verify(int max_n, std::ostream& out) {
    const auto results = run_verification(max_n, nullptr);
    int failed = 0;
    for (const auto& r : results) {
        out << (r.pass ? "ok " : "FAIL ") << r.name << ": " << r.detail << "\n";
        if (!r.pass) ++failed;
    }
    out << "passed " << (results.size() - failed) << "/" << results.size() << " checks\n";
    return failed == 0 ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"shadow and edge lower bounds for triangle-degree conditions"};
    app.require_subcommand(1);

    // bound
    auto* bound = app.add_subcommand("bound", "closed-form lower bounds");
    bound->require_subcommand(1);
    long long bn = 0;
    double bd = 0.0, bt = 0.0;
    auto* bound_shadow = bound->add_subcommand("shadow", "shadow bound from density d");
    bound_shadow->add_option("--n", bn, "number of vertices")->required();
    bound_shadow->add_option("--d", bd, "degree density in [0.25, 1)")->required();
    auto* bound_edges = bound->add_subcommand("edges", "edge bound from real t");
    bound_edges->add_option("--n", bn, "number of vertices")->required();
    bound_edges->add_option("--t", bt, "threshold parameter, n/2 - 1 <= t <= n - 1")->required();

    // construct
    auto* construct = app.add_subcommand("construct", "build an extremal candidate graph");
    std::string kind, out_path, format = "graph6";
    int cn = 0;
    double ct = 0.0;
    construct->add_option("kind", kind, "g1|g2|g2p|cliques|exact-small")
        ->required()
        ->check(CLI::IsMember({"g1", "g2", "g2p", "cliques", "exact-small"}));
    construct->add_option("--n", cn, "number of vertices")->required();
    construct->add_option("--t", ct, "threshold parameter")->required();
    construct->add_option("-o,--out", out_path, "write the graph to this file");
    construct->add_option("--format", format, "graph6|edgelist")
        ->check(CLI::IsMember({"graph6", "edgelist"}));

    // analyze
    auto* analyze = app.add_subcommand("analyze", "report on a graph or family file");
    std::string in_path, report;
    double at = 0.0;
    analyze->add_option("--in", in_path, "input file (graph6, edge list, or family text)")
        ->required();
    auto* report_opt =
        analyze->add_option("--report", report, "triangle-degrees|shadow|delta-equality")
            ->required()
            ->check(CLI::IsMember({"triangle-degrees", "shadow", "delta-equality"}));
    (void)report_opt;
    auto* at_opt = analyze->add_option("--t", at, "threshold parameter for delta-equality");

    // oracle
    auto* oracle = app.add_subcommand("oracle", "exhaustive minimization on small instances");
    std::string mode;
    int on = 0, workers = 0;
    long long threshold = 0;
    bool no_pruning = false, progress = false;
    oracle->add_option("mode", mode, "min-edges|min-shadow")
        ->required()
        ->check(CLI::IsMember({"min-edges", "min-shadow"}));
    oracle->add_option("--n", on, "number of vertices (<= 8 graphs, <= 6 families)")->required();
    oracle->add_option("--threshold", threshold, "minimum triangle degree")->required();
    auto* workers_opt = oracle->add_option("--workers", workers, "search threads (default 1 or SHADOWBOUND_WORKERS)");
    oracle->add_flag("--no-pruning", no_pruning, "disable search pruning (cross-check mode)");
    oracle->add_flag("--progress", progress, "stream progress to standard error");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "CSV sweep of bound vs construction over d");
    long long sn = 0;
    double d_from = 0.0, d_to = 0.0, sstep = 0.0;
    std::string sweep_out;
    sweep->add_option("--n", sn, "number of vertices")->required();
    sweep->add_option("--d-from", d_from, "grid start")->required();
    sweep->add_option("--d-to", d_to, "grid end (inclusive)")->required();
    sweep->add_option("--step", sstep, "grid step")->required();
    sweep->add_option("--out", sweep_out, "CSV output path")->required();

    // verify
    auto* verify = app.add_subcommand("verify", "run the invariant suite");
    std::string target;
    int max_n = 6;
    verify->add_option("target", target, "only \"all\" is defined")
        ->required()
        ->check(CLI::IsMember({"all"}));
    verify->add_option("--max-n", max_n, "cap for exhaustive-search checks (default 6)");

    std::vector<const char*> argv;
    argv.push_back("shadowbound");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (bound_shadow->parsed()) return cmd_bound_shadow(bn, bd, out);
        if (bound_edges->parsed()) return cmd_bound_edges(bn, bt, out);
        if (construct->parsed()) return cmd_construct(kind, cn, ct, out_path, format, out);
        if (analyze->parsed())
            return cmd_analyze(in_path, report, at_opt->count() > 0, at, out, err);
        if (oracle->parsed()) {
            const int w = resolve_workers(workers, workers_opt->count() > 0, err);
            if (w < 0) return 2;
            return cmd_oracle(mode, on, threshold, w, no_pruning, progress, out);
        }
        if (sweep->parsed()) return cmd_sweep(sn, d_from, d_to, sstep, sweep_out, out);
        if (verify->parsed()) return cmd_verify(max_n, out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace shadowbound
