#include "proxdeg/witness.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "proxdeg/errors.hpp"
#include "proxdeg/stats.hpp"
#include "spatial_grid.hpp"

namespace proxdeg {

PearlSpec::PearlSpec(int k, double r) : k_(k), r_(r), outer_(0.0), xi_(0.0) {
    if (k < 3) throw ParameterError("pearl spec needs k >= 3");
    if (!(r > 0.0)) throw ParameterError("pearl spec needs r > 0");
    xi_ = 2.0 * std::numbers::pi / (3.0 * k);
    outer_ = r / std::cos(xi_);
}

StaircaseSpec::StaircaseSpec(int k, double r) : k_(k), r_(r) {
    if (k < 1) throw ParameterError("staircase spec needs k >= 1");
    if (!(r > 0.0)) throw ParameterError("staircase spec needs r > 0");
}

std::optional<int> pearl_region_index(const Point& x, const Point& w, const PearlSpec& spec) {
    if (x == w) throw ContractViolation("pearl_region_index: w coincides with the center");
    const double d2 = dist2(x, w);
    if (!(d2 > spec.r() * spec.r() && d2 <= spec.R() * spec.R())) return std::nullopt;
    // Clockwise angle from the positive x ray.
    const double cw = normalize_angle(-std::atan2(w.y() - x.y(), w.x() - x.x()));
    const int sectors = 3 * spec.k();
    const int s = std::min(static_cast<int>(cw / spec.xi()), sectors - 1) + 1;
    if (s % 3 == 0) return std::nullopt;
    return s / 3 + 1;
}

namespace {

void require_absent(const Point& x, const PointSet& points, const char* what) {
    if (std::find(points.begin(), points.end(), x) != points.end()) {
        throw ContractViolation(std::string(what) + ": center is one of the points");
    }
}

// Per-candidate tests shared by is_tiara and the jewel scan. `nearby` yields
// every point that can possibly fall in the disk of radius R.
template <typename Range>
bool tiara_test(const Point& x, const Range& nearby, const PearlSpec& spec,
                std::vector<int>& hits) {
    hits.assign(static_cast<std::size_t>(spec.k()), 0);
    const double outer2 = spec.R() * spec.R();
    int inside = 0;
    for (const Point& w : nearby) {
        if (dist2(x, w) > outer2) continue;
        if (++inside > spec.k()) return false;
        if (const auto j = pearl_region_index(x, w, spec)) ++hits[*j - 1];
    }
    return inside == spec.k() &&
           std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

template <typename Range>
bool staircase_test(const Point& x, const Range& nearby, const StaircaseSpec& spec,
                    std::vector<int>& hits) {
    hits.assign(static_cast<std::size_t>(spec.k()), 0);
    const double r = spec.r();
    int inside = 0;
    for (const Point& w : nearby) {
        if (std::abs(w.x() - x.x()) > r || std::abs(w.y() - x.y()) > r) continue;
        if (++inside > spec.k()) return false;
        for (int step : staircase_steps(x, w, spec)) ++hits[step - 1];
    }
    return inside == spec.k() &&
           std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

int clamped_k(std::size_t n, double c, int floor_value) {
    const double k = std::floor(theoretical_k(n, c));
    return static_cast<int>(std::max(static_cast<double>(floor_value), k));
}

void require_unit_square(const Region& support) {
    if (support.kind() != RegionKind::UnitSquare) {
        throw ParameterError("witness counting is defined on the unit square support");
    }
}

// Runs `test(i, nearby)` for every candidate index with the points of the
// grid cells around it (excluding i itself).
template <typename Eligible, typename Test>
WitnessScan scan(const PointSet& points, double radius, Eligible eligible, Test test) {
    WitnessScan out;
    out.per_index.assign(points.size(), false);
    const detail::SpatialGrid grid(points, std::max(radius, detail::default_cell_side(points)));
    std::vector<Point> nearby;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const Point& x = points[i];
        if (!eligible(x)) continue;
        nearby.clear();
        grid.visit_box(x.x() - radius, x.y() - radius, x.x() + radius, x.y() + radius,
                       [&](std::uint32_t j) {
                           if (j != i) nearby.push_back(points[j]);
                       });
        if (test(x, nearby)) {
            out.per_index[i] = true;
            ++out.count;
        }
    }
    return out;
}

}  // namespace

bool is_tiara(const Point& x, const PointSet& points, const PearlSpec& spec) {
    require_absent(x, points, "is_tiara");
    std::vector<int> hits;
    return tiara_test(x, points, spec, hits);
}

PointSet make_tiara(const PearlSpec& spec, const Point& x) {
    std::vector<Point> out;
    out.reserve(static_cast<std::size_t>(spec.k()));
    const double radius = (spec.r() + spec.R()) / 2.0;
    for (int j = 1; j <= spec.k(); ++j) {
        // Region j spans clockwise angles [3(j-1) xi, (3(j-1)+2) xi).
        const double cw = (3.0 * (j - 1) + 1.0) * spec.xi();
        out.emplace_back(x.x() + radius * std::cos(cw), x.y() - radius * std::sin(cw));
    }
    return PointSet(std::move(out));
}

std::vector<int> staircase_steps(const Point& x, const Point& w, const StaircaseSpec& spec) {
    std::vector<int> steps;
    const double r = spec.r();
    const double side = r / spec.k();
    const double a = w.x() - x.x();
    const double b = w.y() - x.y();
    if (a < 0.0 || a > r) return steps;
    const int guess = static_cast<int>(a / side) + 1;
    for (int i = std::max(1, guess - 1); i <= std::min(spec.k(), guess + 1); ++i) {
        const double x0 = (i - 1) * r / spec.k();
        const double x1 = i * r / spec.k();
        const double y0 = r - i * r / spec.k();
        const double y1 = r - (i - 1) * r / spec.k();
        if (a >= x0 && a <= x1 && b >= y0 && b <= y1) steps.push_back(i);
    }
    return steps;
}

bool is_staircase(const Point& x, const PointSet& points, const StaircaseSpec& spec) {
    require_absent(x, points, "is_staircase");
    std::vector<int> hits;
    return staircase_test(x, points, spec, hits);
}

PointSet make_staircase(const StaircaseSpec& spec, const Point& x) {
    std::vector<Point> out;
    out.reserve(static_cast<std::size_t>(spec.k()));
    const double side = spec.r() / spec.k();
    for (int j = 1; j <= spec.k(); ++j) {
        out.emplace_back(x.x() + (j - 0.5) * side, x.y() + spec.r() - (j - 0.5) * side);
    }
    return PointSet(std::move(out));
}

PearlSpec jewel_spec(std::size_t n, double c) {
    return PearlSpec(clamped_k(n, c, 3), 1.0 / std::sqrt(static_cast<double>(n)));
}

StaircaseSpec staircase_spec(std::size_t n, double c) {
    return StaircaseSpec(clamped_k(n, c, 1), std::sqrt(2.0 / static_cast<double>(n)));
}

WitnessScan scan_jewels(const PointSet& points, double c, const Region& support) {
    require_unit_square(support);
    const PearlSpec spec = jewel_spec(points.size(), c);
    const double margin = 2.0 * spec.r();
    std::vector<int> hits;
    auto out = scan(
        points, spec.R(),
        [&](const Point& x) {
            return x.x() >= margin && x.x() <= 1.0 - margin && x.y() >= margin &&
                   x.y() <= 1.0 - margin;
        },
        [&](const Point& x, const std::vector<Point>& nearby) {
            return tiara_test(x, nearby, spec, hits);
        });
    out.k = spec.k();
    out.r = spec.r();
    return out;
}

std::size_t count_jewels(const PointSet& points, double c, const Region& support) {
    return scan_jewels(points, c, support).count;
}

WitnessScan scan_staircases(const PointSet& points, double c, const Region& support) {
    require_unit_square(support);
    const StaircaseSpec spec = staircase_spec(points.size(), c);
    const double r = spec.r();
    std::vector<int> hits;
    auto out = scan(
        points, r,
        [&](const Point& x) {
            return x.x() >= r && x.x() <= 1.0 - r && x.y() >= r && x.y() <= 1.0 - r;
        },
        [&](const Point& x, const std::vector<Point>& nearby) {
            return staircase_test(x, nearby, spec, hits);
        });
    out.k = spec.k();
    out.r = spec.r();
    return out;
}

std::size_t count_staircases(const PointSet& points, double c, const Region& support) {
    return scan_staircases(points, c, support).count;
}

namespace {

// Points whose y is not below the best y among points with strictly larger x.
std::size_t count_undominated(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) { return a.x() > b.x(); });
    std::size_t count = 0;
    double best_y = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < pts.size();) {
        std::size_t j = i;
        double group_best = best_y;
        while (j < pts.size() && pts[j].x() == pts[i].x()) {
            if (pts[j].y() >= best_y) ++count;
            group_best = std::max(group_best, pts[j].y());
            ++j;
        }
        best_y = group_best;
        i = j;
    }
    return count;
}

}  // namespace

std::size_t count_maxima(const PointSet& points) {
    return count_undominated(std::vector<Point>(points.begin(), points.end()));
}

std::size_t count_minima(const PointSet& points) {
    std::vector<Point> flipped;
    flipped.reserve(points.size());
    for (const auto& p : points) flipped.emplace_back(-p.x(), -p.y());
    return count_undominated(std::move(flipped));
}

}  // namespace proxdeg
