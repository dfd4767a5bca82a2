#pragma once

// Brute-force reference implementations used only by tests. They share no
// code path with the accelerated builders beyond the basic predicates.

#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include "proxdeg/geometry.hpp"
#include "proxdeg/graph.hpp"
#include "proxdeg/point_set.hpp"
#include "proxdeg/random.hpp"

namespace proxdeg::oracle {

/// O(n^3) relative neighborhood graph from unsquared distances.
inline Graph rng_brute(const PointSet& pts) {
    std::vector<Edge> edges;
    const auto n = static_cast<Vertex>(pts.size());
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) {
            const double d = dist(pts[i], pts[j]);
            bool empty = true;
            for (Vertex k = 0; k < n && empty; ++k) {
                if (k == i || k == j) continue;
                if (std::max(dist(pts[k], pts[i]), dist(pts[k], pts[j])) < d) empty = false;
            }
            if (empty) edges.emplace_back(i, j);
        }
    }
    return Graph::from_edges(pts.size(), edges);
}

/// O(n^2) Yao graph: every point against every other.
inline DiGraph yao_brute(const PointSet& pts, const ConeSpec& spec) {
    std::vector<Edge> arcs;
    const auto n = static_cast<Vertex>(pts.size());
    for (Vertex u = 0; u < n; ++u) {
        std::vector<double> best(spec.p(), std::numeric_limits<double>::infinity());
        std::vector<Vertex> who(spec.p(), 0);
        for (Vertex w = 0; w < n; ++w) {
            if (w == u) continue;
            const int c = cone_index(pts[u], pts[w], spec) - 1;
            const double d = dist2(pts[u], pts[w]);
            if (d < best[c]) {  // scanning in index order keeps the smallest index on ties
                best[c] = d;
                who[c] = w;
            }
        }
        for (int c = 0; c < spec.p(); ++c) {
            if (std::isfinite(best[c])) arcs.emplace_back(u, who[c]);
        }
    }
    return DiGraph::from_arcs(pts.size(), arcs);
}

/// O(n^2) count of points with no strictly dominating point.
inline std::size_t maxima_brute(const PointSet& pts) {
    std::size_t count = 0;
    for (const auto& p : pts) {
        bool dominated = false;
        for (const auto& q : pts) {
            if (q.x() > p.x() && q.y() > p.y()) {
                dominated = true;
                break;
            }
        }
        if (!dominated) ++count;
    }
    return count;
}

inline PointSet random_points(std::size_t n, std::uint64_t seed,
                              const Region& region = Region::unit_square()) {
    RandomStream stream(seed, 0xabcdef);
    return sample_uniform(region, n, stream);
}

}  // namespace proxdeg::oracle
