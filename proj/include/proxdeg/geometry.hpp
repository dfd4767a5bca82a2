#pragma once

#include <compare>
#include <numbers>
#include <utility>
#include <vector>

namespace proxdeg {

/// A point in the plane. Coordinates must be finite.
class Point {
public:
    Point() = default;
    Point(double x, double y);

    double x() const noexcept { return x_; }
    double y() const noexcept { return y_; }

    friend bool operator==(const Point&, const Point&) = default;
    friend auto operator<=>(const Point&, const Point&) = default;

private:
    double x_ = 0.0;
    double y_ = 0.0;
};

double dist(const Point& u, const Point& v) noexcept;
double dist2(const Point& u, const Point& v) noexcept;
Point midpoint(const Point& u, const Point& v) noexcept;

/// Strict interior test for the disk having segment uv as diameter.
/// Squared quantities are compared as computed; boundary points are outside.
bool in_gabriel_disk(const Point& w, const Point& u, const Point& v);

/// Strict interior test for the lune of u and v: both |wu| and |wv| below |uv|.
bool in_lune(const Point& w, const Point& u, const Point& v);

struct Rect {
    double xmin = 0.0;
    double ymin = 0.0;
    double xmax = 1.0;
    double ymax = 1.0;

    double area() const noexcept { return (xmax - xmin) * (ymax - ymin); }
    bool contains(const Point& w) const noexcept {
        return w.x() >= xmin && w.x() <= xmax && w.y() >= ymin && w.y() <= ymax;
    }
};

enum class RegionKind { UnitSquare, RotatedSquare, RectUnion };

/// Support region for point sampling: the unit square, the unit square
/// rotated by pi/4 about (1/2, 1/2), or a union of interior-disjoint rectangles.
class Region {
public:
    static Region unit_square();
    static Region rotated_square();
    /// Throws ParameterError if the list is empty, some rectangle has
    /// non-positive area, or two rectangles overlap in their interiors.
    static Region rect_union(std::vector<Rect> rects);
    /// Two-rectangle L shape: [0,1]x[0,h] plus [0,w]x[h,1].
    static Region l_shape(double w = 0.5, double h = 0.5);

    RegionKind kind() const noexcept { return kind_; }
    const std::vector<Rect>& rects() const noexcept { return rects_; }

    double area() const noexcept;
    Rect bounding_box() const noexcept;
    bool contains(const Point& w) const noexcept;

private:
    Region(RegionKind kind, std::vector<Rect> rects) : kind_(kind), rects_(std::move(rects)) {}

    RegionKind kind_;
    std::vector<Rect> rects_;
};

bool contains(const Region& region, const Point& w) noexcept;

/// p angular sectors of width 2*pi/p, counted counterclockwise from the ray
/// at angle `offset`.
class ConeSpec {
public:
    explicit ConeSpec(int p, double offset = 0.0);

    int p() const noexcept { return p_; }
    double theta() const noexcept { return theta_; }
    double offset() const noexcept { return offset_; }

private:
    int p_;
    double theta_;
    double offset_;
};

/// Reduces an angle into [0, 2*pi).
double normalize_angle(double a) noexcept;

/// 1-based cone of w as seen from u. Cones are half-open: [(i-1)theta, i*theta).
int cone_index(const Point& u, const Point& w, const ConeSpec& spec);

}  // namespace proxdeg
