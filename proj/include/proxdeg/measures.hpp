#pragma once

#include <cstddef>
#include <vector>

#include "proxdeg/graph.hpp"
#include "proxdeg/point_set.hpp"

namespace proxdeg {

/// Largest adjacency list; 0 for n == 0.
std::size_t max_degree(const Graph& g) noexcept;

/// histogram[d] = number of vertices of degree d.
std::vector<std::size_t> degree_histogram(const Graph& g);

/// Longest edge; 0 for edgeless graphs. Throws ParameterError if g.n() differs
/// from the number of points.
double max_edge_length(const Graph& g, const PointSet& points);

struct StretchReport {
    double stretch = 1.0;
    Vertex u = 0;
    Vertex v = 0;
};

/// Maximum over vertex pairs of (Euclidean shortest-path length) / |uv|, by
/// Dijkstra from every vertex. The worst pair is the lexicographically first
/// pair attaining the maximum. Throws DisconnectedGraphError naming the first
/// unreachable pair, ParameterError for n < 2 or size mismatch.
StretchReport stretch_report(const Graph& g, const PointSet& points);
double stretch_factor(const Graph& g, const PointSet& points);

/// 1 / (1 - 2 sin(theta/2)) with theta = 2*pi/p. Meaningful for p >= 7.
double yao_stretch_bound(int p);

}  // namespace proxdeg
