#include "proxdeg/io.hpp"

#include <charconv>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "proxdeg/errors.hpp"

namespace proxdeg::io {

namespace {

constexpr const char* kManifestPrefix = "# manifest: ";

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_real(const std::string& text, std::size_t line) {
    const std::string t = trim(text);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || ptr != t.data() + t.size() || t.empty()) {
        throw ParameterError("line " + std::to_string(line) + ": cannot parse number '" + t + "'");
    }
    return v;
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParameterError("cannot open '" + path + "'");
    return in;
}

std::string region_name(const Region& r) {
    switch (r.kind()) {
        case RegionKind::UnitSquare: return "unit-square";
        case RegionKind::RotatedSquare: return "rotated-square";
        case RegionKind::RectUnion: return "rect-union";
    }
    return "unknown";
}

}  // namespace

nlohmann::json RunManifest::to_json() const {
    nlohmann::json j;
    j["subcommand"] = subcommand;
    j["params"] = params;
    j["seed"] = seed ? nlohmann::json(*seed) : nlohmann::json(nullptr);
    j["timestamp"] = timestamp.empty() ? nlohmann::json(nullptr) : nlohmann::json(timestamp);
    j["version"] = version;
    return j;
}

RunManifest RunManifest::from_json(const nlohmann::json& j) {
    RunManifest m;
    m.subcommand = j.at("subcommand").get<std::string>();
    m.params = j.at("params");
    if (!j.at("seed").is_null()) m.seed = j.at("seed").get<std::uint64_t>();
    if (!j.at("timestamp").is_null()) m.timestamp = j.at("timestamp").get<std::string>();
    m.version = j.at("version").get<std::string>();
    return m;
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_points_csv(std::ostream& os, const PointSet& points, const RunManifest& manifest) {
    os << kManifestPrefix << manifest.to_json().dump() << '\n';
    for (const auto& p : points) os << format_real(p.x()) << ',' << format_real(p.y()) << '\n';
}

PointSet read_points_csv(std::istream& is) {
    std::vector<Point> pts;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t.front() == '#') continue;
        const auto comma = t.find(',');
        if (comma == std::string::npos || t.find(',', comma + 1) != std::string::npos) {
            throw ParameterError("line " + std::to_string(lineno) + ": expected 'x,y'");
        }
        pts.emplace_back(parse_real(t.substr(0, comma), lineno),
                         parse_real(t.substr(comma + 1), lineno));
    }
    return PointSet(std::move(pts));
}

PointSet read_points_file(const std::string& path) {
    auto in = open_input(path);
    return read_points_csv(in);
}

std::optional<RunManifest> read_manifest(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) return std::nullopt;
    const std::string prefix = kManifestPrefix;
    if (line.rfind(prefix, 0) != 0) return std::nullopt;
    return RunManifest::from_json(nlohmann::json::parse(line.substr(prefix.size())));
}

void write_edges(std::ostream& os, std::span<const Edge> edges, const RunManifest& manifest) {
    os << kManifestPrefix << manifest.to_json().dump() << '\n';
    for (const auto& [a, b] : edges) os << a << ' ' << b << '\n';
}

Graph read_graph(std::istream& is, std::size_t n) {
    std::vector<Edge> edges;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t.front() == '#') continue;
        std::istringstream fields(t);
        long long a = -1;
        long long b = -1;
        std::string extra;
        if (!(fields >> a >> b) || (fields >> extra) || a < 0 || b < 0 ||
            static_cast<std::size_t>(a) >= n || static_cast<std::size_t>(b) >= n) {
            throw ParameterError("line " + std::to_string(lineno) + ": expected 'i j' with 0 <= i, j < " +
                                 std::to_string(n));
        }
        edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    }
    return Graph::from_edges(n, edges);
}

Graph read_graph_file(const std::string& path, std::size_t n) {
    auto in = open_input(path);
    return read_graph(in, n);
}

nlohmann::json config_to_json(const ExperimentConfig& config) {
    nlohmann::json j;
    j["n"] = config.n;
    j["trials"] = config.trials;
    j["seed"] = config.seed;
    j["support"] = region_name(config.support);
    if (config.support.kind() == RegionKind::RectUnion) {
        auto rects = nlohmann::json::array();
        for (const auto& r : config.support.rects()) {
            rects.push_back({r.xmin, r.ymin, r.xmax, r.ymax});
        }
        j["rects"] = rects;
    }
    j["graph"] = config.graph.describe();
    auto measures = nlohmann::json::array();
    for (Measure m : config.measures) measures.push_back(measure_name(m));
    j["measures"] = measures;
    j["jewel_c"] = config.jewel_c;
    j["staircase_c"] = config.staircase_c;
    return j;
}

nlohmann::json summary_to_json(const TrialSummary& summary) {
    nlohmann::json j;
    j["config"] = config_to_json(summary.config);
    j["version"] = summary.version;
    nlohmann::json measures = nlohmann::json::object();
    for (const auto& m : summary.measures) {
        measures[measure_name(m.measure)] = {
            {"mean", m.moments.mean}, {"sd", m.moments.sd},   {"min", m.moments.min},
            {"max", m.moments.max},   {"raw", m.raw},
        };
    }
    if (!summary.raw_histograms.empty()) {
        measures["degree_histogram"] = {{"mean", summary.mean_histogram},
                                        {"raw", summary.raw_histograms}};
    }
    j["measures"] = measures;
    return j;
}

void write_raw_csv(std::ostream& os, const TrialSummary& summary, bool with_header) {
    const bool hist = !summary.raw_histograms.empty();
    if (with_header) {
        os << "n,trial";
        for (const auto& m : summary.measures) os << ',' << measure_name(m.measure);
        if (hist) os << ",degree_histogram";
        os << '\n';
    }
    for (std::size_t t = 0; t < summary.config.trials; ++t) {
        os << summary.config.n << ',' << t;
        for (const auto& m : summary.measures) os << ',' << format_real(m.raw[t]);
        if (hist) {
            os << ',';
            const auto& h = summary.raw_histograms[t];
            for (std::size_t d = 0; d < h.size(); ++d) os << (d ? ";" : "") << h[d];
        }
        os << '\n';
    }
}

}  // namespace proxdeg::io
