#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "proxdeg/geometry.hpp"
#include "proxdeg/point_set.hpp"

namespace proxdeg::detail {

/// Tight bounding box of the points; all zeros for an empty set.
inline Rect bounding_box(const PointSet& points) {
    if (points.empty()) return Rect{0.0, 0.0, 0.0, 0.0};
    Rect box{points[0].x(), points[0].y(), points[0].x(), points[0].y()};
    for (const auto& p : points) {
        box.xmin = std::min(box.xmin, p.x());
        box.ymin = std::min(box.ymin, p.y());
        box.xmax = std::max(box.xmax, p.x());
        box.ymax = std::max(box.ymax, p.y());
    }
    return box;
}

/// Bucket grid over the bounding box of a point set. Point indices are stored
/// cell by cell (CSR layout), in increasing index order within each cell.
class SpatialGrid {
public:
    SpatialGrid(const PointSet& points, double cell_side) : box_(bounding_box(points)) {
        if (points.empty()) {
            start_.assign(2, 0);
            return;
        }
        const double extent = std::max(box_.xmax - box_.xmin, box_.ymax - box_.ymin);
        cell_ = cell_side > 0.0 ? cell_side : 1.0;
        if (extent > 0.0) {
            // Keep the cell count within a small multiple of n.
            const double min_cell = extent / std::max(1.0, std::sqrt(4.0 * points.size()));
            cell_ = std::max(cell_, min_cell);
        }
        cols_ = static_cast<int>((box_.xmax - box_.xmin) / cell_) + 1;
        rows_ = static_cast<int>((box_.ymax - box_.ymin) / cell_) + 1;

        std::vector<std::uint32_t> cell_of(points.size());
        start_.assign(static_cast<std::size_t>(cols_) * rows_ + 1, 0);
        for (std::size_t i = 0; i < points.size(); ++i) {
            const auto [cx, cy] = cell_coords(points[i]);
            cell_of[i] = static_cast<std::uint32_t>(cy * cols_ + cx);
            ++start_[cell_of[i] + 1];
        }
        for (std::size_t c = 1; c < start_.size(); ++c) start_[c] += start_[c - 1];
        items_.resize(points.size());
        std::vector<std::uint32_t> fill(start_.begin(), start_.end() - 1);
        for (std::size_t i = 0; i < points.size(); ++i) {
            items_[fill[cell_of[i]]++] = static_cast<std::uint32_t>(i);
        }
    }

    double cell_side() const noexcept { return cell_; }
    int cols() const noexcept { return cols_; }
    int rows() const noexcept { return rows_; }
    const Rect& box() const noexcept { return box_; }

    std::pair<int, int> cell_coords(const Point& p) const noexcept {
        int cx = static_cast<int>((p.x() - box_.xmin) / cell_);
        int cy = static_cast<int>((p.y() - box_.ymin) / cell_);
        return {std::clamp(cx, 0, cols_ - 1), std::clamp(cy, 0, rows_ - 1)};
    }

    /// Visits every point in cells at Chebyshev cell distance exactly `ring`
    /// from (cx, cy). Returns false once the ring lies entirely off the grid.
    template <typename Fn>
    bool visit_ring(int cx, int cy, int ring, Fn&& fn) const {
        if (cx - ring < 0 && cy - ring < 0 && cx + ring >= cols_ && cy + ring >= rows_) {
            return false;
        }
        if (ring == 0) {
            visit_cell(cx, cy, fn);
            return true;
        }
        const int y0 = cy - ring;
        const int y1 = cy + ring;
        for (int x = cx - ring; x <= cx + ring; ++x) {
            visit_cell(x, y0, fn);
            visit_cell(x, y1, fn);
        }
        for (int y = y0 + 1; y <= y1 - 1; ++y) {
            visit_cell(cx - ring, y, fn);
            visit_cell(cx + ring, y, fn);
        }
        return true;
    }

    /// Visits every point in cells overlapping [xmin, xmax] x [ymin, ymax].
    template <typename Fn>
    void visit_box(double xmin, double ymin, double xmax, double ymax, Fn&& fn) const {
        const auto lo = cell_coords(Point(std::max(xmin, box_.xmin), std::max(ymin, box_.ymin)));
        const auto hi = cell_coords(Point(std::min(xmax, box_.xmax), std::min(ymax, box_.ymax)));
        for (int y = lo.second; y <= hi.second; ++y) {
            for (int x = lo.first; x <= hi.first; ++x) visit_cell(x, y, fn);
        }
    }

private:
    template <typename Fn>
    void visit_cell(int x, int y, Fn& fn) const {
        if (x < 0 || y < 0 || x >= cols_ || y >= rows_) return;
        const std::size_t c = static_cast<std::size_t>(y) * cols_ + x;
        for (std::uint32_t k = start_[c]; k < start_[c + 1]; ++k) fn(items_[k]);
    }

    Rect box_;
    double cell_ = 1.0;
    int cols_ = 1;
    int rows_ = 1;
    std::vector<std::uint32_t> start_;
    std::vector<std::uint32_t> items_;
};

/// Default cell side: about one point per cell on average.
inline double default_cell_side(const PointSet& points) {
    if (points.size() < 2) return 1.0;
    const auto b = bounding_box(points);
    const double w = b.xmax - b.xmin;
    const double h = b.ymax - b.ymin;
    const double n = static_cast<double>(points.size());
    if (w * h > 0.0) return std::sqrt(w * h / n);
    return std::max(w, h) / n;
}

}  // namespace proxdeg::detail
