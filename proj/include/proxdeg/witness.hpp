#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "proxdeg/geometry.hpp"
#include "proxdeg/point_set.hpp"

namespace proxdeg {

/// Pearl configuration around a center: 3k sectors of angle xi = 2*pi/(3k),
/// numbered clockwise from the positive x ray, and an annulus r < |w| <= R
/// with r = R cos(xi). Pearl region j (1-based) is the annulus restricted to
/// sectors 3j-2 and 3j-1; sector 3j is a gap.
class PearlSpec {
public:
    /// Throws ParameterError unless k >= 3 and r > 0.
    PearlSpec(int k, double r);

    int k() const noexcept { return k_; }
    double r() const noexcept { return r_; }
    double R() const noexcept { return outer_; }
    double xi() const noexcept { return xi_; }

private:
    int k_;
    double r_;
    double outer_;
    double xi_;
};

/// k descending square steps of side r/k inside [0, r]^2; step i is
/// [(i-1)r/k, ir/k] x [r - ir/k, r - (i-1)r/k] relative to the center.
class StaircaseSpec {
public:
    /// Throws ParameterError unless k >= 1 and r > 0.
    StaircaseSpec(int k, double r);

    int k() const noexcept { return k_; }
    double r() const noexcept { return r_; }

private:
    int k_;
    double r_;
};

/// Pearl region (1..k) containing w relative to center x, if any.
/// Throws ContractViolation if w == x.
std::optional<int> pearl_region_index(const Point& x, const Point& w, const PearlSpec& spec);

/// Whether x is a tiara for `points`: exactly k points in the closed disk of
/// radius R about x and exactly one in each pearl region.
/// Throws ContractViolation if x is one of the points.
bool is_tiara(const Point& x, const PointSet& points, const PearlSpec& spec);

/// One point per pearl region, on the region's bisecting ray at radius (r+R)/2.
PointSet make_tiara(const PearlSpec& spec, const Point& x);

/// Steps (1..k) whose closed square contains w relative to x. Adjacent steps
/// share a corner, so a corner point belongs to two.
std::vector<int> staircase_steps(const Point& x, const Point& w, const StaircaseSpec& spec);

/// Whether x is a staircase for `points`: exactly k points in x + [-r, r]^2
/// and exactly one in each step. Throws ContractViolation if x is one of them.
bool is_staircase(const Point& x, const PointSet& points, const StaircaseSpec& spec);

/// One point at the center of each step.
PointSet make_staircase(const StaircaseSpec& spec, const Point& x);

/// Result of scanning every point of a sample as a witness candidate.
struct WitnessScan {
    std::size_t count = 0;
    int k = 0;
    double r = 0.0;
    std::vector<bool> per_index;
};

/// Jewel parameters for a sample of size n: k = max(3, floor(c log n / log log n)),
/// r = 1/sqrt(n). Throws ParameterError for n < 16.
PearlSpec jewel_spec(std::size_t n, double c);

/// Staircase parameters for a sample of size n: k = max(1, floor(c log n / log log n)),
/// r = sqrt(2/n). Throws ParameterError for n < 16.
StaircaseSpec staircase_spec(std::size_t n, double c);

/// Points that are tiaras for the remaining points and lie at distance >= 2r
/// from the perimeter of the unit square.
WitnessScan scan_jewels(const PointSet& points, double c, const Region& support);
std::size_t count_jewels(const PointSet& points, double c, const Region& support);

/// Points inside [r, 1-r]^2 that are staircases for the remaining points.
WitnessScan scan_staircases(const PointSet& points, double c, const Region& support);
std::size_t count_staircases(const PointSet& points, double c, const Region& support);

/// Points not strictly dominated (greater in both coordinates) by another.
std::size_t count_maxima(const PointSet& points);
/// Points not strictly dominating another.
std::size_t count_minima(const PointSet& points);

}  // namespace proxdeg
