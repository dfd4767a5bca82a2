#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "proxdeg/geometry.hpp"

namespace proxdeg {

/// An indexed collection of pairwise distinct points, tagged with the support
/// region they were drawn from and, when sampled, the generating seed.
class PointSet {
public:
    PointSet() : support_(Region::unit_square()) {}

    /// Throws DuplicatePointError if two points coincide.
    explicit PointSet(std::vector<Point> points, Region support = Region::unit_square(),
                      std::optional<std::uint64_t> seed = std::nullopt);

    std::size_t size() const noexcept { return points_.size(); }
    bool empty() const noexcept { return points_.empty(); }
    const Point& operator[](std::size_t i) const noexcept { return points_[i]; }
    std::span<const Point> points() const noexcept { return points_; }
    auto begin() const noexcept { return points_.begin(); }
    auto end() const noexcept { return points_.end(); }

    const Region& support() const noexcept { return support_; }
    std::optional<std::uint64_t> seed() const noexcept { return seed_; }

    /// The set with the point at `index` removed. Indices above shift down by one.
    PointSet without(std::size_t index) const;

    friend bool operator==(const PointSet& a, const PointSet& b) { return a.points_ == b.points_; }

private:
    std::vector<Point> points_;
    Region support_;
    std::optional<std::uint64_t> seed_;
};

/// Union of two point sets (a's points first). Duplicates are rejected.
PointSet concat(const PointSet& a, const PointSet& b);

}  // namespace proxdeg
