#include "proxdeg/point_set.hpp"

#include <algorithm>
#include <numeric>

#include "proxdeg/errors.hpp"

namespace proxdeg {

PointSet::PointSet(std::vector<Point> points, Region support, std::optional<std::uint64_t> seed)
    : points_(std::move(points)), support_(std::move(support)), seed_(seed) {
    std::vector<std::size_t> order(points_.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return points_[a] < points_[b] || (points_[a] == points_[b] && a < b);
    });
    for (std::size_t i = 1; i < order.size(); ++i) {
        if (points_[order[i - 1]] == points_[order[i]]) {
            throw DuplicatePointError(order[i - 1], order[i]);
        }
    }
}

PointSet PointSet::without(std::size_t index) const {
    PointSet out = *this;
    out.points_.erase(out.points_.begin() + static_cast<std::ptrdiff_t>(index));
    return out;
}

PointSet concat(const PointSet& a, const PointSet& b) {
    std::vector<Point> pts(a.begin(), a.end());
    pts.insert(pts.end(), b.begin(), b.end());
    return PointSet(std::move(pts), a.support());
}

}  // namespace proxdeg
