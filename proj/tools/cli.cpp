#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "proxdeg/errors.hpp"
#include "proxdeg/experiment.hpp"
#include "proxdeg/graph.hpp"
#include "proxdeg/io.hpp"
#include "proxdeg/measures.hpp"
#include "proxdeg/random.hpp"
#include "proxdeg/stats.hpp"
#include "proxdeg/witness.hpp"

namespace proxdeg::cli {

namespace {

using nlohmann::json;

/// Flag combination that parses but cannot be acted on.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Runtime failure that already carries a JSON error report.
class ReportedError : public std::runtime_error {
public:
    explicit ReportedError(json report)
        : std::runtime_error(report.value("error", "error")), report_(std::move(report)) {}
    const json& report() const { return report_; }

private:
    json report_;
};

struct GraphFlags {
    std::string graph;
    std::optional<int> p;
    double offset = 0.0;
    std::optional<double> radius;
    std::optional<double> intersect_udg;
};

void add_graph_flags(CLI::App* cmd, GraphFlags& f, bool required) {
    auto* g = cmd->add_option("--graph", f.graph, "Graph kind")
                  ->check(CLI::IsMember({"gabriel", "gabriel-naive", "yao", "rng", "udg"}));
    if (required) g->required();
    cmd->add_option("--p", f.p, "Yao cone count (required for yao)");
    cmd->add_option("--offset", f.offset, "Yao cone offset angle in radians")->capture_default_str();
    cmd->add_option("--radius", f.radius, "Unit disk radius (required for udg)");
    cmd->add_option("--intersect-udg", f.intersect_udg,
                    "Intersect with the unit disk graph of this radius");
}

GraphKind graph_kind(const GraphFlags& f) {
    GraphKind kind;
    if (f.graph == "gabriel") {
        kind.base = GraphBase::Gabriel;
    } else if (f.graph == "gabriel-naive") {
        kind.base = GraphBase::GabrielNaive;
    } else if (f.graph == "rng") {
        kind.base = GraphBase::Rng;
    } else if (f.graph == "yao") {
        if (!f.p) throw UsageError("--graph yao requires --p");
        kind.base = GraphBase::Yao;
        kind.p = *f.p;
        kind.offset = f.offset;
    } else if (f.graph == "udg") {
        if (!f.radius) throw UsageError("--graph udg requires --radius");
        kind.base = GraphBase::Udg;
        kind.radius = *f.radius;
    } else if (f.graph.empty() || f.graph == "none") {
        kind.base = GraphBase::None;
    } else {
        throw UsageError("unknown graph kind '" + f.graph + "'");
    }
    kind.intersect_udg = f.intersect_udg;
    return kind;
}

json graph_params(const GraphFlags& f) {
    json j;
    j["graph"] = f.graph;
    if (f.p) j["p"] = *f.p;
    j["offset"] = f.offset;
    if (f.radius) j["radius"] = *f.radius;
    if (f.intersect_udg) j["intersect_udg"] = *f.intersect_udg;
    return j;
}

Region parse_support(const std::string& name) {
    if (name == "unit-square") return Region::unit_square();
    if (name == "rotated-square") return Region::rotated_square();
    if (name == "l-shape") return Region::l_shape();
    throw UsageError("unknown support '" + name + "'");
}

class Output {
public:
    Output(const std::string& path, std::ostream& fallback) {
        if (path.empty() || path == "-") {
            os_ = &fallback;
        } else {
            file_.open(path, std::ios::binary);
            if (!file_) throw ParameterError("cannot write '" + path + "'");
            os_ = &file_;
        }
    }
    std::ostream& stream() { return *os_; }

private:
    std::ofstream file_;
    std::ostream* os_ = nullptr;
};

io::RunManifest manifest(const std::string& sub, json params, std::optional<std::uint64_t> seed,
                         bool stamp) {
    io::RunManifest m;
    m.subcommand = sub;
    m.params = std::move(params);
    m.seed = seed;
    if (stamp) m.timestamp = io::utc_timestamp();
    return m;
}

unsigned default_workers() {
    if (const char* env = std::getenv("PROXDEG_WORKERS")) {
        try {
            const long v = std::stol(env);
            if (v >= 0) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
    }
    return 1;
}

std::vector<std::size_t> parse_sizes(const std::vector<std::string>& items) {
    std::vector<std::size_t> out;
    for (const auto& item : items) {
        std::stringstream ss(item);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok.empty()) continue;
            std::size_t pos = 0;
            long long v = -1;
            try {
                v = std::stoll(tok, &pos);
            } catch (const std::exception&) {
            }
            if (v < 0 || pos != tok.size()) throw UsageError("bad size '" + tok + "'");
            out.push_back(static_cast<std::size_t>(v));
        }
    }
    if (out.empty()) throw UsageError("--n needs at least one value");
    return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Proximity graphs over random planar point sets", "proxdeg"};
    app.require_subcommand(1);
    bool stamp = false;
    app.add_flag("--timestamp", stamp, "Record the wall-clock time in output manifests");

    // generate
    auto* gen = app.add_subcommand("generate", "Sample uniform points to a CSV file");
    std::size_t gen_n = 0;
    std::uint64_t gen_seed = 1;
    std::string gen_support = "unit-square";
    std::string gen_out;
    gen->add_option("--n", gen_n, "Number of points")->required();
    gen->add_option("--seed", gen_seed, "Random seed")->capture_default_str();
    gen->add_option("--support", gen_support, "Support region")
        ->check(CLI::IsMember({"unit-square", "rotated-square"}))
        ->capture_default_str();
    gen->add_option("--out", gen_out, "Output CSV ('-' for stdout)")->required();

    // build
    auto* build = app.add_subcommand("build", "Build a proximity graph edge list");
    std::string build_points;
    std::string build_out;
    GraphFlags build_graph_flags;
    build->add_option("--points", build_points, "Points CSV")->required();
    add_graph_flags(build, build_graph_flags, true);
    build->add_option("--out", build_out, "Output edge list ('-' for stdout)")->required();

    // detect
    auto* detect = app.add_subcommand("detect", "Count witness configurations, maxima, minima");
    std::string detect_points;
    std::string detect_witness;
    double detect_c = 1.0;
    bool detect_maxima = false;
    bool detect_minima = false;
    std::string detect_out;
    detect->add_option("--points", detect_points, "Points CSV")->required();
    detect->add_option("--witness", detect_witness, "Witness kind")
        ->check(CLI::IsMember({"jewel", "staircase"}));
    detect->add_option("--c", detect_c, "Constant c in k = c log n / log log n")
        ->capture_default_str();
    detect->add_flag("--maxima", detect_maxima, "Report the number of maximal points");
    detect->add_flag("--minima", detect_minima, "Report the number of minimal points");
    detect->add_option("--out", detect_out, "Output JSON (default stdout)");

    // experiment
    auto* exp = app.add_subcommand("experiment", "Run seeded Monte Carlo trials");
    std::vector<std::string> exp_sizes;
    std::size_t exp_trials = 1;
    std::uint64_t exp_seed = 1;
    std::string exp_support;
    GraphFlags exp_graph_flags;
    std::vector<std::string> exp_measures{"max_degree"};
    double exp_jewel_c = 1.0;
    double exp_staircase_c = 1.0;
    unsigned exp_workers = default_workers();
    std::string exp_out;
    std::string exp_raw_out;
    exp->add_option("--n", exp_sizes, "Sample sizes (comma separated)")->required();
    exp->add_option("--trials", exp_trials, "Trials per size")->capture_default_str();
    exp->add_option("--seed", exp_seed, "Random seed")->capture_default_str();
    exp->add_option("--support", exp_support,
                    "unit-square | rotated-square | l-shape (default: rotated-square for yao, "
                    "unit-square otherwise)")
        ->check(CLI::IsMember({"unit-square", "rotated-square", "l-shape"}));
    add_graph_flags(exp, exp_graph_flags, false);
    exp->add_option("--measures", exp_measures, "Measures (comma separated)")
        ->delimiter(',')
        ->capture_default_str();
    exp->add_option("--jewel-c", exp_jewel_c, "c for jewel_count")->capture_default_str();
    exp->add_option("--staircase-c", exp_staircase_c, "c for staircase_count")
        ->capture_default_str();
    exp->add_option("--workers", exp_workers,
                    "Worker threads, 0 = all cores (default: $PROXDEG_WORKERS or 1)");
    exp->add_option("--out", exp_out, "Summary JSON (default stdout)");
    exp->add_option("--raw-out", exp_raw_out, "Per-trial CSV");

    // stretch
    auto* stretch = app.add_subcommand("stretch", "Stretch factor of a geometric graph");
    std::string stretch_points;
    std::string stretch_graph_file;
    GraphFlags stretch_graph_flags;
    std::string stretch_out;
    stretch->add_option("--points", stretch_points, "Points CSV")->required();
    stretch->add_option("--graph-file", stretch_graph_file, "Edge list to evaluate");
    add_graph_flags(stretch, stretch_graph_flags, false);
    stretch->add_option("--out", stretch_out, "Output JSON (default stdout)");

    std::vector<std::string> rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsageError;
    }

    std::string report_path;
    try {
        if (*gen) {
            RandomStream stream(gen_seed);
            const PointSet pts = sample_uniform(parse_support(gen_support), gen_n, stream);
            json params = {{"n", gen_n}, {"support", gen_support}};
            Output o(gen_out, out);
            io::write_points_csv(o.stream(), pts, manifest("generate", params, gen_seed, stamp));
        } else if (*build) {
            const GraphKind kind = graph_kind(build_graph_flags);
            const PointSet pts = io::read_points_file(build_points);
            json params = graph_params(build_graph_flags);
            params["points"] = build_points;
            std::vector<Edge> edges;
            if (kind.base == GraphBase::Yao && !kind.intersect_udg) {
                edges = yao(pts, ConeSpec(kind.p, kind.offset)).arcs();
            } else {
                edges = build_graph(pts, kind).edges();
            }
            Output o(build_out, out);
            io::write_edges(o.stream(), edges, manifest("build", params, std::nullopt, stamp));
        } else if (*detect) {
            report_path = detect_out;
            const PointSet pts = io::read_points_file(detect_points);
            json params = {{"points", detect_points}, {"c", detect_c},
                           {"maxima", detect_maxima}, {"minima", detect_minima}};
            if (!detect_witness.empty()) params["witness"] = detect_witness;
            json report;
            report["manifest"] = manifest("detect", params, std::nullopt, stamp).to_json();
            if (!detect_witness.empty()) {
                const Region square = Region::unit_square();
                const WitnessScan scan = detect_witness == "jewel"
                                             ? scan_jewels(pts, detect_c, square)
                                             : scan_staircases(pts, detect_c, square);
                report["witness"] = detect_witness;
                report["count"] = scan.count;
                report["k"] = scan.k;
                report["r"] = scan.r;
                report["per_index"] = scan.per_index;
            }
            if (detect_maxima) report["maxima"] = count_maxima(pts);
            if (detect_minima) report["minima"] = count_minima(pts);
            Output o(detect_out, out);
            o.stream() << report.dump(2) << '\n';
        } else if (*exp) {
            report_path = exp_out;
            const auto sizes = parse_sizes(exp_sizes);
            ExperimentConfig base;
            base.trials = exp_trials;
            base.seed = exp_seed;
            base.graph = graph_kind(exp_graph_flags);
            if (exp_support.empty()) {
                exp_support = base.graph.base == GraphBase::Yao ? "rotated-square" : "unit-square";
            }
            base.support = parse_support(exp_support);
            base.measures.clear();
            for (const auto& m : exp_measures) base.measures.push_back(parse_measure(m));
            base.jewel_c = exp_jewel_c;
            base.staircase_c = exp_staircase_c;
            base.workers = exp_workers;

            json params = graph_params(exp_graph_flags);
            params["n"] = sizes;
            params["trials"] = exp_trials;
            params["support"] = exp_support;
            params["measures"] = exp_measures;
            params["jewel_c"] = exp_jewel_c;
            params["staircase_c"] = exp_staircase_c;

            json report;
            report["manifest"] = manifest("experiment", params, exp_seed, stamp).to_json();
            report["summaries"] = json::array();
            json ratio_rows = json::array();
            std::ostringstream raw;
            bool first = true;
            for (std::size_t n : sizes) {
                ExperimentConfig config = base;
                config.n = n;
                const TrialSummary summary = run_trials(config);
                report["summaries"].push_back(io::summary_to_json(summary));
                io::write_raw_csv(raw, summary, first);
                first = false;
                if (const auto* md = summary.find(Measure::MaxDegree); md && n >= 16) {
                    const double scale = theoretical_k(n, 1.0);
                    ratio_rows.push_back({{"n", n},
                                          {"log_n_over_log_log_n", scale},
                                          {"mean_max_degree", md->moments.mean},
                                          {"mean_ratio", md->moments.mean / scale},
                                          {"min_ratio", md->moments.min / scale},
                                          {"max_ratio", md->moments.max / scale}});
                }
            }
            if (!ratio_rows.empty()) report["ratio_table"] = ratio_rows;
            if (!exp_raw_out.empty()) {
                Output o(exp_raw_out, out);
                o.stream() << "# manifest: " << report["manifest"].dump() << '\n' << raw.str();
            }
            Output o(exp_out, out);
            o.stream() << report.dump(2) << '\n';
        } else if (*stretch) {
            report_path = stretch_out;
            const PointSet pts = io::read_points_file(stretch_points);
            json params = graph_params(stretch_graph_flags);
            params["points"] = stretch_points;
            Graph g;
            if (!stretch_graph_file.empty()) {
                params["graph_file"] = stretch_graph_file;
                g = io::read_graph_file(stretch_graph_file, pts.size());
            } else if (!stretch_graph_flags.graph.empty()) {
                g = build_graph(pts, graph_kind(stretch_graph_flags));
            } else {
                throw UsageError("stretch needs --graph-file or --graph");
            }
            json report;
            report["manifest"] = manifest("stretch", params, std::nullopt, stamp).to_json();
            try {
                const StretchReport s = stretch_report(g, pts);
                report["stretch"] = s.stretch;
                report["worst_pair"] = {s.u, s.v};
            } catch (const DisconnectedGraphError& e) {
                report["error"] = e.what();
                report["unreachable_pair"] = {e.from(), e.to()};
                throw ReportedError(report);
            }
            if (stretch_graph_flags.p) report["bound"] = yao_stretch_bound(*stretch_graph_flags.p);
            Output o(stretch_out, out);
            o.stream() << report.dump(2) << '\n';
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsageError;
    } catch (const ReportedError& e) {
        try {
            Output o(report_path, out);
            o.stream() << e.report().dump(2) << '\n';
        } catch (const std::exception&) {
        }
        err << "error: " << e.what() << '\n';
        return kRuntimeError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kRuntimeError;
    }
    return kOk;
}

}  // namespace proxdeg::cli
