#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "proxdeg/experiment.hpp"
#include "proxdeg/graph.hpp"
#include "proxdeg/point_set.hpp"

namespace proxdeg::io {

/// Echo of a CLI invocation, embedded in every output file.
struct RunManifest {
    std::string subcommand;
    nlohmann::json params = nlohmann::json::object();
    std::optional<std::uint64_t> seed;
    /// ISO-8601 UTC; left empty (serialized as null) unless requested so that
    /// repeated runs are byte-identical.
    std::string timestamp;
    std::string version = kVersion;

    nlohmann::json to_json() const;
    static RunManifest from_json(const nlohmann::json& j);
};

/// Current UTC time as "YYYY-MM-DDTHH:MM:SSZ".
std::string utc_timestamp();

/// Shortest-round-trip-safe decimal form (17 significant digits).
std::string format_real(double v);

/// "# manifest: <json>" header line followed by one "x,y" line per point.
void write_points_csv(std::ostream& os, const PointSet& points, const RunManifest& manifest);

/// Reads a points CSV. Lines starting with '#' and blank lines are skipped.
/// Throws ParameterError (with the line number) on malformed input and
/// DuplicatePointError for repeated points.
PointSet read_points_csv(std::istream& is);
PointSet read_points_file(const std::string& path);

/// Manifest embedded in a file's first "# manifest:" line, if any.
std::optional<RunManifest> read_manifest(std::istream& is);

/// Header line followed by "i j" lines in the given (already sorted) order.
void write_edges(std::ostream& os, std::span<const Edge> edges, const RunManifest& manifest);

/// Reads an "i j" edge list into an undirected graph on n vertices.
Graph read_graph(std::istream& is, std::size_t n);
Graph read_graph_file(const std::string& path, std::size_t n);

nlohmann::json config_to_json(const ExperimentConfig& config);
nlohmann::json summary_to_json(const TrialSummary& summary);

/// One row per trial: "n,trial,<measure columns...>". Histograms are written
/// as ';'-separated counts. When `with_header` is false only rows are written.
void write_raw_csv(std::ostream& os, const TrialSummary& summary, bool with_header = true);

}  // namespace proxdeg::io
