#include "proxdeg/measures.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <queue>

#include "proxdeg/errors.hpp"

namespace proxdeg {

std::size_t max_degree(const Graph& g) noexcept {
    std::size_t m = 0;
    for (std::size_t v = 0; v < g.n(); ++v) m = std::max(m, g.degree(v));
    return m;
}

std::vector<std::size_t> degree_histogram(const Graph& g) {
    std::vector<std::size_t> hist(max_degree(g) + 1, 0);
    if (g.n() == 0) return {};
    for (std::size_t v = 0; v < g.n(); ++v) ++hist[g.degree(v)];
    return hist;
}

namespace {

void require_matching(const Graph& g, const PointSet& points) {
    if (g.n() != points.size()) {
        throw ParameterError("graph has " + std::to_string(g.n()) + " vertices but there are " +
                             std::to_string(points.size()) + " points");
    }
}

}  // namespace

double max_edge_length(const Graph& g, const PointSet& points) {
    require_matching(g, points);
    double m = 0.0;
    for (Vertex u = 0; u < g.n(); ++u) {
        for (Vertex v : g.neighbors(u)) {
            if (u < v) m = std::max(m, dist(points[u], points[v]));
        }
    }
    return m;
}

StretchReport stretch_report(const Graph& g, const PointSet& points) {
    require_matching(g, points);
    const std::size_t n = g.n();
    if (n < 2) throw ParameterError("stretch factor needs at least 2 vertices");

    StretchReport worst;
    worst.u = 0;
    worst.v = 1;
    worst.stretch = -1.0;
    std::vector<double> d(n);
    using Item = std::pair<double, Vertex>;
    for (Vertex s = 0; s < n; ++s) {
        std::fill(d.begin(), d.end(), std::numeric_limits<double>::infinity());
        d[s] = 0.0;
        std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
        heap.emplace(0.0, s);
        while (!heap.empty()) {
            const auto [du, u] = heap.top();
            heap.pop();
            if (du > d[u]) continue;
            for (Vertex v : g.neighbors(u)) {
                const double nd = du + dist(points[u], points[v]);
                if (nd < d[v]) {
                    d[v] = nd;
                    heap.emplace(nd, v);
                }
            }
        }
        for (Vertex t = s + 1; t < n; ++t) {
            if (!std::isfinite(d[t])) throw DisconnectedGraphError(s, t);
            const double ratio = d[t] / dist(points[s], points[t]);
            if (ratio > worst.stretch) {
                worst.stretch = ratio;
                worst.u = s;
                worst.v = t;
            }
        }
    }
    return worst;
}

double stretch_factor(const Graph& g, const PointSet& points) {
    return stretch_report(g, points).stretch;
}

double yao_stretch_bound(int p) {
    const double theta = 2.0 * std::numbers::pi / p;
    return 1.0 / (1.0 - 2.0 * std::sin(theta / 2.0));
}

}  // namespace proxdeg
