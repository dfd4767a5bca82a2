#include "proxdeg/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "proxdeg/errors.hpp"

namespace proxdeg {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
// Half-diagonal of the unit square; the rotated square is |x-c|+|y-c| <= this.
const double kDiamondRadius = std::sqrt(0.5);

}  // namespace

Point::Point(double x, double y) : x_(x), y_(y) {
    if (!std::isfinite(x) || !std::isfinite(y)) {
        throw ParameterError("point coordinates must be finite");
    }
}

double dist2(const Point& u, const Point& v) noexcept {
    const double dx = u.x() - v.x();
    const double dy = u.y() - v.y();
    return dx * dx + dy * dy;
}

double dist(const Point& u, const Point& v) noexcept {
    return std::sqrt(dist2(u, v));
}

Point midpoint(const Point& u, const Point& v) noexcept {
    return Point((u.x() + v.x()) / 2.0, (u.y() + v.y()) / 2.0);
}

bool in_gabriel_disk(const Point& w, const Point& u, const Point& v) {
    if (u == v) {
        throw ContractViolation("in_gabriel_disk: diameter endpoints coincide");
    }
    return dist2(w, midpoint(u, v)) < dist2(u, v) / 4.0;
}

bool in_lune(const Point& w, const Point& u, const Point& v) {
    if (u == v) {
        throw ContractViolation("in_lune: endpoints coincide");
    }
    const double d = dist2(u, v);
    return dist2(w, u) < d && dist2(w, v) < d;
}

Region Region::unit_square() {
    return Region(RegionKind::UnitSquare, {Rect{0.0, 0.0, 1.0, 1.0}});
}

Region Region::rotated_square() {
    return Region(RegionKind::RotatedSquare, {});
}

Region Region::rect_union(std::vector<Rect> rects) {
    if (rects.empty()) {
        throw ParameterError("rect union needs at least one rectangle");
    }
    for (const auto& r : rects) {
        if (!(r.xmax > r.xmin) || !(r.ymax > r.ymin)) {
            throw ParameterError("rect union: rectangle with non-positive area");
        }
    }
    for (std::size_t i = 0; i < rects.size(); ++i) {
        for (std::size_t j = i + 1; j < rects.size(); ++j) {
            const auto& a = rects[i];
            const auto& b = rects[j];
            const double ox = std::min(a.xmax, b.xmax) - std::max(a.xmin, b.xmin);
            const double oy = std::min(a.ymax, b.ymax) - std::max(a.ymin, b.ymin);
            if (ox > 0.0 && oy > 0.0) {
                throw ParameterError("rect union: rectangles " + std::to_string(i) + " and " +
                                     std::to_string(j) + " overlap");
            }
        }
    }
    return Region(RegionKind::RectUnion, std::move(rects));
}

Region Region::l_shape(double w, double h) {
    if (!(w > 0.0 && w < 1.0 && h > 0.0 && h < 1.0)) {
        throw ParameterError("l_shape: w and h must lie in (0, 1)");
    }
    return rect_union({Rect{0.0, 0.0, 1.0, h}, Rect{0.0, h, w, 1.0}});
}

double Region::area() const noexcept {
    if (kind_ == RegionKind::RotatedSquare) {
        return 1.0;
    }
    double a = 0.0;
    for (const auto& r : rects_) a += r.area();
    return a;
}

Rect Region::bounding_box() const noexcept {
    if (kind_ == RegionKind::RotatedSquare) {
        return Rect{0.5 - kDiamondRadius, 0.5 - kDiamondRadius, 0.5 + kDiamondRadius,
                    0.5 + kDiamondRadius};
    }
    Rect box{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity(),
             -std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
    for (const auto& r : rects_) {
        box.xmin = std::min(box.xmin, r.xmin);
        box.ymin = std::min(box.ymin, r.ymin);
        box.xmax = std::max(box.xmax, r.xmax);
        box.ymax = std::max(box.ymax, r.ymax);
    }
    return box;
}

bool Region::contains(const Point& w) const noexcept {
    if (kind_ == RegionKind::RotatedSquare) {
        return std::abs(w.x() - 0.5) + std::abs(w.y() - 0.5) <= kDiamondRadius;
    }
    return std::any_of(rects_.begin(), rects_.end(), [&](const Rect& r) { return r.contains(w); });
}

bool contains(const Region& region, const Point& w) noexcept {
    return region.contains(w);
}

ConeSpec::ConeSpec(int p, double offset) : p_(p), theta_(0.0), offset_(offset) {
    if (p < 2) {
        throw ParameterError("cone count p must be at least 2");
    }
    if (!(offset >= 0.0 && offset < kTwoPi)) {
        throw ParameterError("cone offset must lie in [0, 2*pi)");
    }
    theta_ = kTwoPi / p;
}

double normalize_angle(double a) noexcept {
    a = std::fmod(a, kTwoPi);
    if (a < 0.0) a += kTwoPi;
    // fmod of a tiny negative plus 2*pi can round up to exactly 2*pi.
    if (a >= kTwoPi) a = 0.0;
    return a;
}

int cone_index(const Point& u, const Point& w, const ConeSpec& spec) {
    if (u == w) {
        throw ContractViolation("cone_index: point coincides with apex");
    }
    const double a = normalize_angle(std::atan2(w.y() - u.y(), w.x() - u.x()) - spec.offset());
    const int i = static_cast<int>(a / spec.theta());
    return std::min(i, spec.p() - 1) + 1;
}

}  // namespace proxdeg
