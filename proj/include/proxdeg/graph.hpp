#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "proxdeg/geometry.hpp"
#include "proxdeg/point_set.hpp"

namespace proxdeg {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Undirected simple graph over point indices 0..n-1. Adjacency lists are
/// sorted and symmetric.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n) : adj_(n) {}

    /// Builds from an arbitrary edge list: orientation and duplicates are
    /// ignored. Self-loops and out-of-range endpoints throw ParameterError.
    static Graph from_edges(std::size_t n, std::span<const Edge> edges);

    std::size_t n() const noexcept { return adj_.size(); }
    std::span<const Vertex> neighbors(std::size_t v) const noexcept { return adj_[v]; }
    std::size_t degree(std::size_t v) const noexcept { return adj_[v].size(); }
    std::size_t edge_count() const noexcept;
    bool has_edge(Vertex a, Vertex b) const noexcept;

    /// Edges as (i, j) with i < j in lexicographic order.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::vector<Vertex>> adj_;
};

/// Directed graph without self-loops; out-adjacency lists are sorted.
class DiGraph {
public:
    DiGraph() = default;
    explicit DiGraph(std::size_t n) : out_(n) {}

    static DiGraph from_arcs(std::size_t n, std::span<const Edge> arcs);

    std::size_t n() const noexcept { return out_.size(); }
    std::span<const Vertex> out_neighbors(std::size_t v) const noexcept { return out_[v]; }
    std::size_t out_degree(std::size_t v) const noexcept { return out_[v].size(); }
    std::size_t arc_count() const noexcept;
    std::size_t max_out_degree() const noexcept;

    /// Arcs as (tail, head) in lexicographic order.
    std::vector<Edge> arcs() const;

    friend bool operator==(const DiGraph&, const DiGraph&) = default;

private:
    std::vector<std::vector<Vertex>> out_;
};

/// Gabriel graph, using a uniform grid to bound the witness search.
Graph gabriel(const PointSet& points);

/// Gabriel graph by testing every pair against every other point.
Graph gabriel_naive(const PointSet& points);

/// theta-Yao graph: an arc from each point to its nearest neighbor in each
/// nonempty cone. Distance ties go to the smaller index.
DiGraph yao(const PointSet& points, const ConeSpec& spec);

/// Relative neighborhood graph (open lunes).
Graph rng_graph(const PointSet& points);

/// Pairs at distance <= radius. Throws ParameterError if radius <= 0.
Graph unit_disk_graph(const PointSet& points, double radius);

/// Edge-set intersection. Throws ParameterError on vertex count mismatch.
Graph intersect(const Graph& a, const Graph& b);

Graph undirected_view(const DiGraph& d);

}  // namespace proxdeg
