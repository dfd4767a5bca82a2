#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "proxdeg/geometry.hpp"
#include "proxdeg/graph.hpp"
#include "proxdeg/point_set.hpp"
#include "proxdeg/random.hpp"
#include "proxdeg/stats.hpp"

namespace proxdeg {

inline constexpr const char* kVersion = "0.1.0";

enum class GraphBase { None, Gabriel, GabrielNaive, Yao, Rng, Udg };

/// Which graph a trial builds. `intersect_udg`, when set, intersects the base
/// graph (the undirected view, for Yao) with the unit disk graph of that radius.
struct GraphKind {
    GraphBase base = GraphBase::Gabriel;
    int p = 4;
    double offset = 0.0;
    double radius = 1.0;
    std::optional<double> intersect_udg;

    /// Compact descriptor such as "gabriel", "yao(p=4,offset=0)" or
    /// "gabriel&udg(0.1)".
    std::string describe() const;
};

enum class Measure {
    MaxDegree,
    MaxDegreeRatio,  // max_degree / (log n / log log n)
    MaxOutDegree,    // Yao only
    EdgeCount,       // directed arcs for a bare Yao graph
    MaxEdgeLength,
    DegreeHistogram,
    Stretch,
    JewelCount,
    StaircaseCount,
    Maxima,
    Minima,
};

std::string measure_name(Measure m);
/// Throws ParameterError for an unknown name.
Measure parse_measure(const std::string& name);

struct ExperimentConfig {
    std::size_t n = 1000;
    std::size_t trials = 1;
    std::uint64_t seed = 1;
    Region support = Region::unit_square();
    GraphKind graph;
    std::vector<Measure> measures{Measure::MaxDegree};
    double jewel_c = 1.0;
    double staircase_c = 1.0;
    /// Worker threads; 0 picks the hardware concurrency.
    unsigned workers = 1;

    /// Throws ParameterError on invalid combinations.
    void validate() const;
};

/// Scalar measures of one trial, keyed by measure, plus the degree histogram
/// when requested.
struct TrialResult {
    std::map<Measure, double> values;
    std::vector<std::size_t> histogram;
};

struct MeasureSummary {
    Measure measure;
    Moments moments;
    std::vector<double> raw;
};

struct TrialSummary {
    ExperimentConfig config;
    std::string version = kVersion;
    std::vector<MeasureSummary> measures;
    /// Mean count per degree over trials (requested histogram only).
    std::vector<double> mean_histogram;
    std::vector<std::vector<std::size_t>> raw_histograms;

    const MeasureSummary* find(Measure m) const;
};

/// Stream for trial t of a run seeded with `seed`.
RandomStream trial_stream(std::uint64_t seed, std::size_t trial);

/// Point set of trial t.
PointSet trial_points(const ExperimentConfig& config, std::size_t trial);

/// Builds the configured graph as an undirected graph (Yao: undirected view).
Graph build_graph(const PointSet& points, const GraphKind& kind);

/// Everything trial t measures, computed from its own stream only.
TrialResult run_trial(const ExperimentConfig& config, std::size_t trial);

/// Aggregates per-trial results given in trial order.
TrialSummary summarize(const ExperimentConfig& config, const std::vector<TrialResult>& results);

/// Runs all trials on `config.workers` threads and aggregates in trial order,
/// so the summary does not depend on the schedule. A failing trial is
/// rethrown as TrialError carrying the lowest failing trial index.
TrialSummary run_trials(const ExperimentConfig& config);

}  // namespace proxdeg
