#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "proxdeg/errors.hpp"
#include "proxdeg/graph.hpp"
#include "spatial_grid.hpp"

namespace proxdeg {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
    Graph g(n);
    for (const auto& [a, b] : edges) {
        if (a >= n || b >= n) {
            throw ParameterError("edge endpoint out of range");
        }
        if (a == b) {
            throw ParameterError("self-loop at vertex " + std::to_string(a));
        }
        g.adj_[a].push_back(b);
        g.adj_[b].push_back(a);
    }
    for (auto& list : g.adj_) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
    }
    return g;
}

std::size_t Graph::edge_count() const noexcept {
    std::size_t twice = 0;
    for (const auto& list : adj_) twice += list.size();
    return twice / 2;
}

bool Graph::has_edge(Vertex a, Vertex b) const noexcept {
    if (a >= adj_.size()) return false;
    return std::binary_search(adj_[a].begin(), adj_[a].end(), b);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (Vertex i = 0; i < adj_.size(); ++i) {
        for (Vertex j : adj_[i]) {
            if (i < j) out.emplace_back(i, j);
        }
    }
    return out;
}

DiGraph DiGraph::from_arcs(std::size_t n, std::span<const Edge> arcs) {
    DiGraph d(n);
    for (const auto& [a, b] : arcs) {
        if (a >= n || b >= n) {
            throw ParameterError("arc endpoint out of range");
        }
        if (a == b) {
            throw ParameterError("self-loop at vertex " + std::to_string(a));
        }
        d.out_[a].push_back(b);
    }
    for (auto& list : d.out_) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
    }
    return d;
}

std::size_t DiGraph::arc_count() const noexcept {
    std::size_t m = 0;
    for (const auto& list : out_) m += list.size();
    return m;
}

std::size_t DiGraph::max_out_degree() const noexcept {
    std::size_t m = 0;
    for (const auto& list : out_) m = std::max(m, list.size());
    return m;
}

std::vector<Edge> DiGraph::arcs() const {
    std::vector<Edge> out;
    out.reserve(arc_count());
    for (Vertex i = 0; i < out_.size(); ++i) {
        for (Vertex j : out_[i]) out.emplace_back(i, j);
    }
    return out;
}

namespace {

struct Vec2 {
    double x;
    double y;
};

using Polygon = std::vector<Vec2>;

// Keeps the part of `poly` where a*x + b*y <= c.
void clip(Polygon& poly, double a, double b, double c, Polygon& scratch) {
    scratch.clear();
    const std::size_t m = poly.size();
    for (std::size_t i = 0; i < m; ++i) {
        const Vec2& s = poly[i];
        const Vec2& e = poly[(i + 1) % m];
        const double fs = a * s.x + b * s.y - c;
        const double fe = a * e.x + b * e.y - c;
        if (fs <= 0.0) scratch.push_back(s);
        if ((fs < 0.0 && fe > 0.0) || (fs > 0.0 && fe < 0.0)) {
            const double t = fs / (fs - fe);
            scratch.push_back(Vec2{s.x + t * (e.x - s.x), s.y + t * (e.y - s.y)});
        }
    }
    poly.swap(scratch);
}

double max_dist2(const Polygon& poly, const Point& u) {
    double m = 0.0;
    for (const auto& q : poly) {
        const double dx = q.x - u.x();
        const double dy = q.y - u.y();
        m = std::max(m, dx * dx + dy * dy);
    }
    return m;
}

Polygon box_polygon(const Rect& b) {
    return {{b.xmin, b.ymin}, {b.xmax, b.ymin}, {b.xmax, b.ymax}, {b.xmin, b.ymax}};
}

// Radius below which every point is guaranteed to have been visited after
// scanning rings 0..ring.
double covered_radius(int ring, double cell) {
    return ring <= 0 ? 0.0 : (ring - 1e-6) * cell;
}

// Relative slack when turning a floating-point polygon bound into a search
// radius.
constexpr double kSlack = 1e-7;

/// For vertex u, collects every point that could be a Gabriel (and hence RNG)
/// neighbor of u, together with all points that could witness against them.
///
/// A point w blocks every v in the open half-plane beyond w perpendicular to
/// uw, so Gabriel candidates lie in the bounding box clipped by those
/// half-planes. Rings of grid cells are scanned until the covered radius
/// exceeds the farthest vertex of that polygon.
class CandidateSearch {
public:
    CandidateSearch(const PointSet& points, const detail::SpatialGrid& grid)
        : points_(points), grid_(grid) {
        const Rect b = grid.box();
        const double pad = 1e-9 * std::max(1.0, std::max(b.xmax - b.xmin, b.ymax - b.ymin));
        box_ = Rect{b.xmin - pad, b.ymin - pad, b.xmax + pad, b.ymax + pad};
    }

    /// Fills `near` with visited points (sorted by distance from u) and
    /// returns the squared radius within which `near` is complete.
    double run(Vertex u, std::vector<Vertex>& near) {
        const Point& pu = points_[u];
        near.clear();
        poly_ = box_polygon(box_);
        const auto [cx, cy] = grid_.cell_coords(pu);
        double covered2 = std::numeric_limits<double>::infinity();
        for (int ring = 0;; ++ring) {
            const bool on_grid = grid_.visit_ring(cx, cy, ring, [&](std::uint32_t w) {
                if (w == u) return;
                near.push_back(w);
                const Point& pw = points_[w];
                const double a = pw.x() - pu.x();
                const double b = pw.y() - pu.y();
                // (v - w) . (w - u) <= 0
                clip(poly_, a, b, a * pw.x() + b * pw.y(), scratch_);
            });
            if (!on_grid) break;
            const double need = std::sqrt(max_dist2(poly_, pu)) * (1.0 + kSlack);
            const double have = covered_radius(ring, grid_.cell_side());
            if (have > need) {
                covered2 = have * have;
                break;
            }
        }
        std::sort(near.begin(), near.end(), [&](Vertex a, Vertex b) {
            const double da = dist2(pu, points_[a]);
            const double db = dist2(pu, points_[b]);
            return da < db || (da == db && a < b);
        });
        return covered2;
    }

private:
    const PointSet& points_;
    const detail::SpatialGrid& grid_;
    Rect box_;
    Polygon poly_;
    Polygon scratch_;
};

template <typename Blocks>
Graph empty_region_graph(const PointSet& points, Blocks blocks) {
    const std::size_t n = points.size();
    if (n < 2) return Graph(n);
    const detail::SpatialGrid grid(points, detail::default_cell_side(points));
    CandidateSearch search(points, grid);
    std::vector<Vertex> near;
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
        const double covered2 = search.run(u, near);
        const Point& pu = points[u];
        for (Vertex v : near) {
            if (v < u) continue;
            const Point& pv = points[v];
            if (dist2(pu, pv) >= covered2) break;
            bool empty = true;
            for (Vertex w : near) {
                if (w != v && blocks(points[w], pu, pv)) {
                    empty = false;
                    break;
                }
            }
            if (empty) edges.emplace_back(u, v);
        }
    }
    return Graph::from_edges(n, edges);
}

}  // namespace

Graph gabriel(const PointSet& points) {
    return empty_region_graph(points, [](const Point& w, const Point& u, const Point& v) {
        return in_gabriel_disk(w, u, v);
    });
}

Graph gabriel_naive(const PointSet& points) {
    const std::size_t n = points.size();
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) {
            bool empty = true;
            for (Vertex k = 0; k < n && empty; ++k) {
                if (k != i && k != j && in_gabriel_disk(points[k], points[i], points[j])) {
                    empty = false;
                }
            }
            if (empty) edges.emplace_back(i, j);
        }
    }
    return Graph::from_edges(n, edges);
}

Graph rng_graph(const PointSet& points) {
    // The open diameter disk lies inside the open lune, so the Gabriel
    // candidate region also bounds RNG neighbors.
    return empty_region_graph(points, [](const Point& w, const Point& u, const Point& v) {
        return in_lune(w, u, v);
    });
}

DiGraph yao(const PointSet& points, const ConeSpec& spec) {
    const std::size_t n = points.size();
    if (n < 2) return DiGraph(n);
    const detail::SpatialGrid grid(points, detail::default_cell_side(points));
    const int p = spec.p();
    const Rect b = grid.box();

    std::vector<double> best_d(p);
    std::vector<Vertex> best_v(p);
    std::vector<double> reach(p);  // farthest extent of cone within the box
    std::vector<Edge> arcs;
    Polygon poly;
    Polygon scratch;

    for (Vertex u = 0; u < n; ++u) {
        const Point& pu = points[u];
        std::fill(best_d.begin(), best_d.end(), std::numeric_limits<double>::infinity());
        std::fill(best_v.begin(), best_v.end(), Vertex{0});
        for (int i = 0; i < p; ++i) {
            const double a0 = spec.offset() + i * spec.theta();
            const double a1 = a0 + spec.theta();
            poly = box_polygon(b);
            if (spec.theta() <= std::numbers::pi + 1e-12) {
                // Cone = left of ray a0 and right of ray a1.
                const double s0 = std::sin(a0), c0 = std::cos(a0);
                const double s1 = std::sin(a1), c1 = std::cos(a1);
                clip(poly, s0, -c0, s0 * pu.x() - c0 * pu.y(), scratch);
                clip(poly, -s1, c1, -s1 * pu.x() + c1 * pu.y(), scratch);
            }
            reach[i] = std::sqrt(max_dist2(poly, pu)) * (1.0 + kSlack) + 1e-12;
        }

        const auto [cx, cy] = grid.cell_coords(pu);
        for (int ring = 0;; ++ring) {
            const bool on_grid = grid.visit_ring(cx, cy, ring, [&](std::uint32_t w) {
                if (w == u) return;
                const int c = cone_index(pu, points[w], spec) - 1;
                const double d = dist2(pu, points[w]);
                if (d < best_d[c] || (d == best_d[c] && w < best_v[c])) {
                    best_d[c] = d;
                    best_v[c] = w;
                }
            });
            if (!on_grid) break;
            const double have = covered_radius(ring, grid.cell_side());
            bool settled = true;
            for (int c = 0; c < p && settled; ++c) {
                settled = reach[c] < have || (std::isfinite(best_d[c]) && best_d[c] < have * have);
            }
            if (settled) break;
        }
        for (int c = 0; c < p; ++c) {
            if (std::isfinite(best_d[c])) arcs.emplace_back(u, best_v[c]);
        }
    }
    return DiGraph::from_arcs(n, arcs);
}

Graph unit_disk_graph(const PointSet& points, double radius) {
    if (!(radius > 0.0)) {
        throw ParameterError("unit disk radius must be positive");
    }
    const std::size_t n = points.size();
    if (n < 2) return Graph(n);
    const detail::SpatialGrid grid(points, std::max(radius, detail::default_cell_side(points)));
    const double r2 = radius * radius;
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
        const Point& pu = points[u];
        grid.visit_box(pu.x() - radius, pu.y() - radius, pu.x() + radius, pu.y() + radius,
                       [&](std::uint32_t v) {
                           if (v > u && dist2(pu, points[v]) <= r2) edges.emplace_back(u, v);
                       });
    }
    return Graph::from_edges(n, edges);
}

Graph intersect(const Graph& a, const Graph& b) {
    if (a.n() != b.n()) {
        throw ParameterError("intersect: vertex counts differ (" + std::to_string(a.n()) + " vs " +
                             std::to_string(b.n()) + ")");
    }
    std::vector<Edge> edges;
    for (Vertex i = 0; i < a.n(); ++i) {
        const auto na = a.neighbors(i);
        const auto nb = b.neighbors(i);
        std::vector<Vertex> common;
        std::set_intersection(na.begin(), na.end(), nb.begin(), nb.end(),
                              std::back_inserter(common));
        for (Vertex j : common) {
            if (i < j) edges.emplace_back(i, j);
        }
    }
    return Graph::from_edges(a.n(), edges);
}

Graph undirected_view(const DiGraph& d) {
    return Graph::from_edges(d.n(), d.arcs());
}

}  // namespace proxdeg
