#include "proxdeg/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "proxdeg/errors.hpp"
#include "proxdeg/measures.hpp"
#include "proxdeg/witness.hpp"

namespace proxdeg {

namespace {

struct MeasureInfo {
    Measure measure;
    const char* name;
    bool needs_graph;
};

constexpr MeasureInfo kMeasures[] = {
    {Measure::MaxDegree, "max_degree", true},
    {Measure::MaxDegreeRatio, "max_degree_ratio", true},
    {Measure::MaxOutDegree, "max_out_degree", true},
    {Measure::EdgeCount, "edge_count", true},
    {Measure::MaxEdgeLength, "max_edge_length", true},
    {Measure::DegreeHistogram, "degree_histogram", true},
    {Measure::Stretch, "stretch", true},
    {Measure::JewelCount, "jewel_count", false},
    {Measure::StaircaseCount, "staircase_count", false},
    {Measure::Maxima, "maxima", false},
    {Measure::Minima, "minima", false},
};

const MeasureInfo& info(Measure m) {
    for (const auto& i : kMeasures) {
        if (i.measure == m) return i;
    }
    throw ParameterError("unknown measure");
}

std::string format_number(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

}  // namespace

std::string GraphKind::describe() const {
    std::string s;
    switch (base) {
        case GraphBase::None: s = "none"; break;
        case GraphBase::Gabriel: s = "gabriel"; break;
        case GraphBase::GabrielNaive: s = "gabriel-naive"; break;
        case GraphBase::Rng: s = "rng"; break;
        case GraphBase::Yao:
            s = "yao(p=" + std::to_string(p) + ",offset=" + format_number(offset) + ")";
            break;
        case GraphBase::Udg: s = "udg(" + format_number(radius) + ")"; break;
    }
    if (intersect_udg) s += "&udg(" + format_number(*intersect_udg) + ")";
    return s;
}

std::string measure_name(Measure m) {
    return info(m).name;
}

Measure parse_measure(const std::string& name) {
    for (const auto& i : kMeasures) {
        if (name == i.name) return i.measure;
    }
    throw ParameterError("unknown measure '" + name + "'");
}

void ExperimentConfig::validate() const {
    if (n < 1) throw ParameterError("n must be at least 1");
    if (trials < 1) throw ParameterError("trials must be at least 1");
    if (measures.empty()) throw ParameterError("no measures requested");
    for (Measure m : measures) {
        if (info(m).needs_graph && graph.base == GraphBase::None) {
            throw ParameterError("measure " + measure_name(m) + " needs a graph");
        }
        if (m == Measure::MaxOutDegree &&
            (graph.base != GraphBase::Yao || graph.intersect_udg.has_value())) {
            throw ParameterError("max_out_degree is defined for bare Yao graphs only");
        }
        if ((m == Measure::MaxDegreeRatio || m == Measure::JewelCount ||
             m == Measure::StaircaseCount) &&
            n < 16) {
            throw ParameterError("measure " + measure_name(m) + " needs n >= 16");
        }
        if ((m == Measure::JewelCount || m == Measure::StaircaseCount) &&
            support.kind() != RegionKind::UnitSquare) {
            throw ParameterError("measure " + measure_name(m) + " needs the unit square support");
        }
    }
    if (graph.base == GraphBase::Yao) ConeSpec(graph.p, graph.offset);
    if (graph.base == GraphBase::Udg && !(graph.radius > 0.0)) {
        throw ParameterError("udg radius must be positive");
    }
    if (graph.intersect_udg && !(*graph.intersect_udg > 0.0)) {
        throw ParameterError("udg radius must be positive");
    }
}

const MeasureSummary* TrialSummary::find(Measure m) const {
    for (const auto& s : measures) {
        if (s.measure == m) return &s;
    }
    return nullptr;
}

RandomStream trial_stream(std::uint64_t seed, std::size_t trial) {
    return RandomStream(seed, trial);
}

PointSet trial_points(const ExperimentConfig& config, std::size_t trial) {
    RandomStream stream = trial_stream(config.seed, trial);
    return sample_uniform(config.support, config.n, stream);
}

Graph build_graph(const PointSet& points, const GraphKind& kind) {
    Graph g;
    switch (kind.base) {
        case GraphBase::None: throw ParameterError("no graph configured");
        case GraphBase::Gabriel: g = gabriel(points); break;
        case GraphBase::GabrielNaive: g = gabriel_naive(points); break;
        case GraphBase::Rng: g = rng_graph(points); break;
        case GraphBase::Udg: g = unit_disk_graph(points, kind.radius); break;
        case GraphBase::Yao: g = undirected_view(yao(points, ConeSpec(kind.p, kind.offset))); break;
    }
    if (kind.intersect_udg) g = intersect(g, unit_disk_graph(points, *kind.intersect_udg));
    return g;
}

TrialResult run_trial(const ExperimentConfig& config, std::size_t trial) {
    const PointSet points = trial_points(config, trial);
    TrialResult out;

    const bool need_graph = std::any_of(config.measures.begin(), config.measures.end(),
                                        [](Measure m) { return info(m).needs_graph; });
    Graph g;
    std::optional<DiGraph> arcs;
    if (need_graph) {
        if (config.graph.base == GraphBase::Yao) {
            arcs = yao(points, ConeSpec(config.graph.p, config.graph.offset));
            g = undirected_view(*arcs);
            if (config.graph.intersect_udg) {
                g = intersect(g, unit_disk_graph(points, *config.graph.intersect_udg));
            }
        } else {
            g = build_graph(points, config.graph);
        }
    }
    const bool directed = arcs.has_value() && !config.graph.intersect_udg.has_value();

    for (Measure m : config.measures) {
        double v = 0.0;
        switch (m) {
            case Measure::MaxDegree: v = static_cast<double>(max_degree(g)); break;
            case Measure::MaxDegreeRatio:
                v = static_cast<double>(max_degree(g)) / theoretical_k(points.size(), 1.0);
                break;
            case Measure::MaxOutDegree: v = static_cast<double>(arcs->max_out_degree()); break;
            case Measure::EdgeCount:
                v = static_cast<double>(directed ? arcs->arc_count() : g.edge_count());
                break;
            case Measure::MaxEdgeLength: v = max_edge_length(g, points); break;
            case Measure::DegreeHistogram:
                out.histogram = degree_histogram(g);
                continue;
            case Measure::Stretch: v = stretch_factor(g, points); break;
            case Measure::JewelCount:
                v = static_cast<double>(count_jewels(points, config.jewel_c, config.support));
                break;
            case Measure::StaircaseCount:
                v = static_cast<double>(
                    count_staircases(points, config.staircase_c, config.support));
                break;
            case Measure::Maxima: v = static_cast<double>(count_maxima(points)); break;
            case Measure::Minima: v = static_cast<double>(count_minima(points)); break;
        }
        out.values[m] = v;
    }
    return out;
}

TrialSummary summarize(const ExperimentConfig& config, const std::vector<TrialResult>& results) {
    TrialSummary summary;
    summary.config = config;
    for (Measure m : config.measures) {
        if (m == Measure::DegreeHistogram) continue;
        MeasureSummary s{m, {}, {}};
        s.raw.reserve(results.size());
        for (const auto& r : results) s.raw.push_back(r.values.at(m));
        s.moments = moments(s.raw);
        summary.measures.push_back(std::move(s));
    }
    if (std::find(config.measures.begin(), config.measures.end(), Measure::DegreeHistogram) !=
        config.measures.end()) {
        std::size_t width = 0;
        for (const auto& r : results) width = std::max(width, r.histogram.size());
        summary.mean_histogram.assign(width, 0.0);
        for (const auto& r : results) {
            for (std::size_t d = 0; d < r.histogram.size(); ++d) {
                summary.mean_histogram[d] += static_cast<double>(r.histogram[d]);
            }
            summary.raw_histograms.push_back(r.histogram);
        }
        for (double& h : summary.mean_histogram) h /= static_cast<double>(results.size());
    }
    return summary;
}

TrialSummary run_trials(const ExperimentConfig& config) {
    config.validate();
    const std::size_t trials = config.trials;
    unsigned workers = config.workers == 0 ? std::thread::hardware_concurrency() : config.workers;
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(trials)));

    std::vector<TrialResult> results(trials);
    std::vector<std::exception_ptr> errors(trials);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t t = next++; t < trials; t = next++) {
            try {
                results[t] = run_trial(config, t);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    }
    for (std::size_t t = 0; t < trials; ++t) {
        if (!errors[t]) continue;
        try {
            std::rethrow_exception(errors[t]);
        } catch (const std::exception& e) {
            throw TrialError(t, e.what());
        }
    }
    return summarize(config, results);
}

}  // namespace proxdeg
