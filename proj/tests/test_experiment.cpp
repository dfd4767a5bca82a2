#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "proxdeg/errors.hpp"
#include "proxdeg/experiment.hpp"
#include "proxdeg/measures.hpp"
#include "proxdeg/random.hpp"
#include "proxdeg/stats.hpp"
#include "proxdeg/witness.hpp"

using namespace proxdeg;

TEST(RandomStream, Reproducible) {
    RandomStream a(42, 7), b(42, 7), c(42, 8), d(43, 7);
    for (int i = 0; i < 100; ++i) {
        const auto va = a();
        EXPECT_EQ(va, b());
        EXPECT_NE(va, c());
        EXPECT_NE(va, d());
    }
    RandomStream u(1);
    for (int i = 0; i < 10000; ++i) {
        const double x = u.uniform();
        ASSERT_GE(x, 0.0);
        ASSERT_LT(x, 1.0);
    }
}

TEST(SampleUniform, EmptyAndDeterministic) {
    RandomStream s(1);
    EXPECT_TRUE(sample_uniform(Region::unit_square(), 0, s).empty());
    RandomStream a(5), b(5);
    EXPECT_EQ(sample_uniform(Region::rotated_square(), 300, a),
              sample_uniform(Region::rotated_square(), 300, b));
}

TEST(SampleUniform, StaysInRegion) {
    for (const auto& region :
         {Region::unit_square(), Region::rotated_square(), Region::l_shape(0.3, 0.6)}) {
        RandomStream s(3);
        const auto ps = sample_uniform(region, 5000, s);
        for (const auto& p : ps) ASSERT_TRUE(contains(region, p));
    }
}

TEST(SampleUniform, MeanOfUnitSquare) {
    RandomStream s(2024);
    const auto ps = sample_uniform(Region::unit_square(), 100000, s);
    double sx = 0.0;
    for (const auto& p : ps) sx += p.x();
    // 3 standard errors of the mean are ~0.0027; tolerance doubled.
    EXPECT_NEAR(sx / ps.size(), 0.5, 0.005);
}

TEST(SampleUniform, RectUnionIsAreaWeighted) {
    // Thin strip of area 0.2 and a block of area 0.8.
    const auto region = Region::rect_union({Rect{0, 0, 1, 0.2}, Rect{0, 0.5, 1, 1.3}});
    RandomStream s(6);
    const auto ps = sample_uniform(region, 50000, s);
    const auto low = std::count_if(ps.begin(), ps.end(), [](const Point& p) { return p.y() <= 0.2; });
    // Binomial(50000, 0.2): sd ~ 89.
    EXPECT_NEAR(static_cast<double>(low), 10000.0, 450.0);
}

TEST(SampleUniform, ZeroAreaIsRejected) {
    // Every constructible region has positive area; the guard is exercised via
    // rect_union validation.
    EXPECT_THROW(Region::rect_union({Rect{0, 0, 1, 0}}), ParameterError);
}

TEST(TheoreticalK, Values) {
    // Oracle: long double evaluation of the same closed form.
    const long double l16 = std::log(16.0L);
    EXPECT_NEAR(theoretical_k(16, 1.0), static_cast<double>(l16 / std::log(l16)), 1e-12);
    EXPECT_NEAR(theoretical_k(16, 1.0), 2.7188, 1e-4);
    EXPECT_EQ(theoretical_k(1000, 0.0), 0.0);
    EXPECT_NEAR(theoretical_k(1000000, 1.0), 5.2614, 1e-4);
    EXPECT_THROW(theoretical_k(15, 1.0), ParameterError);
}

TEST(Chernoff, Values) {
    EXPECT_EQ(chernoff_tail(3.0, 0.0), 1.0);
    EXPECT_NEAR(chernoff_tail(1.0, std::numbers::e - 1.0), std::exp(-1.0), 1e-12);
    EXPECT_NEAR(chernoff_tail(1e-3, 1e-9), 1.0, 1e-12);
    double prev = 1.0;
    for (double mu = 0.5; mu < 20; mu += 0.5) {
        const double v = chernoff_tail(mu, 0.7);
        EXPECT_LT(v, prev);
        EXPECT_GT(v, 0.0);
        prev = v;
    }
    EXPECT_THROW(chernoff_tail(0.0, 1.0), ParameterError);
    EXPECT_THROW(chernoff_tail(1.0, -1.0), ParameterError);
}

TEST(Harmonic, Values) {
    EXPECT_EQ(harmonic(0), 0.0);
    EXPECT_EQ(harmonic(1), 1.0);
    EXPECT_NEAR(harmonic(4), 25.0 / 12.0, 1e-15);
    const double h = harmonic(1000000);
    EXPECT_GE(h, std::log(1e6));
    EXPECT_LE(h, std::log(1e6) + 1.0);
    for (std::size_t m = 1; m < 3000; m += 37) {
        EXPECT_GE(harmonic(m), std::log(static_cast<double>(m)));
        EXPECT_LE(harmonic(m), std::log(static_cast<double>(m)) + 1.0);
    }
}

TEST(Measures, MaxDegree) {
    const std::vector<Edge> path{{0, 1}, {1, 2}};
    EXPECT_EQ(max_degree(Graph::from_edges(3, path)), 2u);
    EXPECT_EQ(max_degree(Graph(4)), 0u);
    EXPECT_EQ(max_degree(Graph()), 0u);
    const std::vector<Edge> star{{0, 1}, {0, 2}, {0, 3}, {0, 4}};
    const auto g = Graph::from_edges(5, star);
    EXPECT_EQ(max_degree(g), 4u);
    EXPECT_EQ(degree_histogram(g), (std::vector<std::size_t>{0, 4, 0, 0, 1}));
}

TEST(Measures, MaxEdgeLength) {
    const PointSet two({Point(0, 0), Point(3, 4)});
    const std::vector<Edge> one{{0, 1}};
    EXPECT_DOUBLE_EQ(max_edge_length(Graph::from_edges(2, one), two), 5.0);
    EXPECT_EQ(max_edge_length(Graph(2), two), 0.0);
    const PointSet tri({Point(0, 0), Point(3, 0), Point(3, 4)});
    const std::vector<Edge> all{{0, 1}, {1, 2}, {0, 2}};
    EXPECT_DOUBLE_EQ(max_edge_length(Graph::from_edges(3, all), tri), 5.0);
    EXPECT_THROW(max_edge_length(Graph(3), two), ParameterError);
}

TEST(Measures, StretchExamples) {
    const std::vector<Edge> one{{0, 1}};
    EXPECT_EQ(stretch_factor(Graph::from_edges(2, one), PointSet({Point(0, 0), Point(1, 2)})),
              1.0);

    const PointSet line({Point(0, 0), Point(1, 0), Point(2, 0)});
    const std::vector<Edge> path{{0, 1}, {1, 2}};
    EXPECT_EQ(stretch_factor(Graph::from_edges(3, path), line), 1.0);

    const PointSet sq({Point(0, 0), Point(1, 0), Point(1, 1), Point(0, 1)});
    const std::vector<Edge> sides{{0, 1}, {1, 2}, {2, 3}, {3, 0}};
    const auto rep = stretch_report(Graph::from_edges(4, sides), sq);
    EXPECT_NEAR(rep.stretch, std::sqrt(2.0), 1e-15);
    EXPECT_EQ(rep.u, 0u);
    EXPECT_EQ(rep.v, 2u);
}

TEST(Measures, StretchErrors) {
    const PointSet three({Point(0, 0), Point(1, 0), Point(5, 5)});
    const std::vector<Edge> one{{0, 1}};
    try {
        stretch_factor(Graph::from_edges(3, one), three);
        FAIL();
    } catch (const DisconnectedGraphError& e) {
        EXPECT_EQ(e.from(), 0u);
        EXPECT_EQ(e.to(), 2u);
    }
    EXPECT_THROW(stretch_factor(Graph(1), PointSet({Point(0, 0)})), ParameterError);
}

TEST(Measures, StretchAgainstFloydWarshall) {
    const auto ps = oracle::random_points(60, 77);
    const auto g = gabriel(ps);
    const std::size_t n = ps.size();
    std::vector<double> d(n * n, INFINITY);
    for (std::size_t i = 0; i < n; ++i) d[i * n + i] = 0.0;
    for (const auto& [a, b] : g.edges()) {
        d[a * n + b] = d[b * n + a] = dist(ps[a], ps[b]);
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                d[i * n + j] = std::min(d[i * n + j], d[i * n + k] + d[k * n + j]);
    double worst = 1.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) worst = std::max(worst, d[i * n + j] / dist(ps[i], ps[j]));
    EXPECT_NEAR(stretch_factor(g, ps), worst, 1e-12);
}

TEST(Measures, YaoStretchBound) {
    EXPECT_NEAR(yao_stretch_bound(8), 1.0 / (1.0 - 2.0 * std::sin(std::numbers::pi / 8)), 1e-15);
    EXPECT_NEAR(yao_stretch_bound(8), 4.2620, 1e-4);
}

TEST(Moments, Basic) {
    const std::vector<double> v{1, 2, 3, 4};
    const auto m = moments(v);
    EXPECT_DOUBLE_EQ(m.mean, 2.5);
    EXPECT_NEAR(m.sd, std::sqrt(5.0 / 3.0), 1e-15);
    EXPECT_EQ(m.min, 1);
    EXPECT_EQ(m.max, 4);
    const std::vector<double> one{7};
    EXPECT_EQ(moments(one).sd, 0.0);
}

TEST(Experiment, SingleTrialMatchesManualPipeline) {
    ExperimentConfig c;
    c.n = 500;
    c.trials = 1;
    c.seed = 77;
    c.measures = {Measure::MaxDegree, Measure::EdgeCount, Measure::MaxEdgeLength};
    const auto summary = run_trials(c);

    RandomStream stream = trial_stream(77, 0);
    const auto ps = sample_uniform(Region::unit_square(), 500, stream);
    const auto g = gabriel(ps);
    EXPECT_EQ(summary.find(Measure::MaxDegree)->raw[0], static_cast<double>(max_degree(g)));
    EXPECT_EQ(summary.find(Measure::EdgeCount)->raw[0], static_cast<double>(g.edge_count()));
    EXPECT_EQ(summary.find(Measure::MaxEdgeLength)->raw[0], max_edge_length(g, ps));
}

TEST(Experiment, OrderAndWorkerIndependent) {
    ExperimentConfig c;
    c.n = 300;
    c.trials = 12;
    c.seed = 5;
    c.graph.base = GraphBase::Yao;
    c.graph.p = 6;
    c.support = Region::rotated_square();
    c.measures = {Measure::MaxDegree, Measure::MaxOutDegree, Measure::EdgeCount,
                  Measure::DegreeHistogram, Measure::Maxima};
    c.workers = 1;
    const auto serial = run_trials(c);
    c.workers = 4;
    const auto parallel = run_trials(c);

    // Reverse execution order by hand.
    std::vector<TrialResult> results(c.trials);
    for (std::size_t t = c.trials; t-- > 0;) results[t] = run_trial(c, t);
    const auto reversed = summarize(c, results);

    for (const auto* other : {&parallel, &reversed}) {
        ASSERT_EQ(serial.measures.size(), other->measures.size());
        for (std::size_t i = 0; i < serial.measures.size(); ++i) {
            EXPECT_EQ(serial.measures[i].raw, other->measures[i].raw);
            EXPECT_EQ(serial.measures[i].moments.mean, other->measures[i].moments.mean);
        }
        EXPECT_EQ(serial.raw_histograms, other->raw_histograms);
    }
    for (double v : serial.find(Measure::MaxOutDegree)->raw) EXPECT_LE(v, 6.0);
    for (double v : serial.find(Measure::EdgeCount)->raw) EXPECT_LE(v, 6.0 * 300);
}

TEST(Experiment, TrialErrorsCarryIndex) {
    ExperimentConfig c;
    c.n = 3;
    c.trials = 2;
    c.seed = 1;
    c.graph.base = GraphBase::Udg;
    c.graph.radius = 1e-6;  // certainly disconnected
    c.measures = {Measure::Stretch};
    try {
        run_trials(c);
        FAIL();
    } catch (const TrialError& e) {
        EXPECT_EQ(e.trial(), 0u);
        EXPECT_NE(std::string(e.what()).find("disconnected"), std::string::npos);
    }
}

TEST(Experiment, ValidatesConfig) {
    ExperimentConfig c;
    c.trials = 0;
    EXPECT_THROW(c.validate(), ParameterError);
    c.trials = 1;
    c.graph.base = GraphBase::None;
    EXPECT_THROW(c.validate(), ParameterError);
    c.measures = {Measure::Maxima};
    EXPECT_NO_THROW(c.validate());
    c.measures = {Measure::JewelCount};
    c.n = 10;
    EXPECT_THROW(c.validate(), ParameterError);
    c.graph.base = GraphBase::Gabriel;
    c.n = 100;
    c.measures = {Measure::MaxOutDegree};
    EXPECT_THROW(c.validate(), ParameterError);
    EXPECT_THROW(parse_measure("bogus"), ParameterError);
    EXPECT_EQ(parse_measure("max_degree"), Measure::MaxDegree);
}

TEST(Experiment, IntersectionDescriptor) {
    GraphKind k;
    k.base = GraphBase::Yao;
    k.p = 8;
    k.intersect_udg = 0.25;
    EXPECT_EQ(k.describe(), "yao(p=8,offset=0)&udg(0.25)");

    const auto ps = oracle::random_points(400, 3);
    const auto g = build_graph(ps, k);
    EXPECT_LE(max_edge_length(g, ps), 0.25);
}

TEST(Experiment, WitnessMeasures) {
    ExperimentConfig c;
    c.n = 2000;
    c.trials = 3;
    c.seed = 9;
    c.graph.base = GraphBase::None;
    c.measures = {Measure::JewelCount, Measure::StaircaseCount};
    c.jewel_c = 0.5;
    c.staircase_c = 0.5;
    const auto s = run_trials(c);
    for (std::size_t t = 0; t < 3; ++t) {
        const auto ps = trial_points(c, t);
        EXPECT_EQ(s.find(Measure::JewelCount)->raw[t],
                  static_cast<double>(count_jewels(ps, 0.5, c.support)));
        EXPECT_EQ(s.find(Measure::StaircaseCount)->raw[t],
                  static_cast<double>(count_staircases(ps, 0.5, c.support)));
    }
}

TEST(Experiment, GabrielEdgeDensityAtModerateN) {
    ExperimentConfig c;
    c.n = 2000;
    c.trials = 10;
    c.seed = 3;
    c.measures = {Measure::EdgeCount};
    const auto s = run_trials(c);
    const double per_n = s.find(Measure::EdgeCount)->moments.mean / 2000.0;
    EXPECT_GE(per_n, 1.7);
    EXPECT_LE(per_n, 2.05);
}
