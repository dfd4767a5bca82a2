#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "proxdeg/errors.hpp"
#include "proxdeg/geometry.hpp"
#include "proxdeg/point_set.hpp"
#include "proxdeg/random.hpp"

using namespace proxdeg;

namespace {

// Integer evaluation of "w strictly inside the disk with diameter uv":
// |2w - (u+v)|^2 < |u - v|^2.
bool in_disk_exact(long wx, long wy, long ux, long uy, long vx, long vy) {
    const long cx = 2 * wx - ux - vx;
    const long cy = 2 * wy - uy - vy;
    const long dx = ux - vx;
    const long dy = uy - vy;
    return cx * cx + cy * cy < dx * dx + dy * dy;
}

}  // namespace

TEST(Point, RejectsNonFinite) {
    EXPECT_THROW(Point(std::nan(""), 0.0), ParameterError);
    EXPECT_THROW(Point(0.0, INFINITY), ParameterError);
    EXPECT_NO_THROW(Point(-1e300, 1e300));
}

TEST(Dist, Examples) {
    EXPECT_DOUBLE_EQ(dist(Point(0, 0), Point(3, 4)), 5.0);
    EXPECT_EQ(dist(Point(0, 0), Point(0, 0)), 0.0);
    EXPECT_NEAR(dist(Point(1, 1), Point(2, 2)), 1.41421356, 1e-8);
}

TEST(Dist, SymmetricOnRandomPairs) {
    const auto pts = oracle::random_points(500, 1);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        EXPECT_EQ(dist(pts[i], pts[i + 1]), dist(pts[i + 1], pts[i]));
        EXPECT_GT(dist(pts[i], pts[i + 1]), 0.0);
    }
}

TEST(GabrielDisk, Examples) {
    EXPECT_TRUE(in_gabriel_disk(Point(1, 0), Point(0, 0), Point(2, 0)));
    // On the circle centred at (0.5, 0.5): the exact integer check agrees.
    EXPECT_FALSE(in_disk_exact(1, 0, 0, 0, 1, 1));
    EXPECT_FALSE(in_gabriel_disk(Point(1, 0), Point(0, 0), Point(1, 1)));
    EXPECT_FALSE(in_gabriel_disk(Point(5, 5), Point(0, 0), Point(1, 0)));
}

TEST(GabrielDisk, CoincidentEndpointsAreAContractViolation) {
    EXPECT_THROW(in_gabriel_disk(Point(1, 1), Point(0, 0), Point(0, 0)), ContractViolation);
    EXPECT_THROW(in_lune(Point(1, 1), Point(0, 0), Point(0, 0)), ContractViolation);
}

TEST(GabrielDisk, AgreesWithIntegerEvaluationOnLatticeTriples) {
    RandomStream s(99);
    for (int t = 0; t < 20000; ++t) {
        long c[6];
        for (long& v : c) v = static_cast<long>(s() % 21) - 10;
        if (c[2] == c[4] && c[3] == c[5]) continue;
        const Point w(c[0], c[1]), u(c[2], c[3]), v(c[4], c[5]);
        ASSERT_EQ(in_gabriel_disk(w, u, v), in_disk_exact(c[0], c[1], c[2], c[3], c[4], c[5]));
    }
}

TEST(GabrielDisk, SymmetricAndInsideLune) {
    RandomStream s(5);
    int inside = 0;
    for (int t = 0; t < 50000; ++t) {
        const Point w(s.uniform(), s.uniform());
        const Point u(s.uniform(), s.uniform());
        const Point v(s.uniform(), s.uniform());
        const bool a = in_gabriel_disk(w, u, v);
        ASSERT_EQ(a, in_gabriel_disk(w, v, u));
        if (a) {
            ++inside;
            ASSERT_TRUE(in_lune(w, u, v));
        }
    }
    EXPECT_GT(inside, 1000);
}

TEST(Lune, Examples) {
    const Point u(0, 0), v(1, 0);
    // Both distances are sqrt(0.26) ~ 0.5099.
    EXPECT_NEAR(dist(Point(0.5, 0.1), u), std::sqrt(0.26), 1e-15);
    EXPECT_LT(dist(Point(0.5, 0.1), v), 1.0);
    EXPECT_TRUE(in_lune(Point(0.5, 0.1), u, v));
    EXPECT_FALSE(in_lune(Point(0, 1), u, v));
    RandomStream s(8);
    for (int t = 0; t < 1000; ++t) {
        const Point a(s.uniform(), s.uniform()), b(s.uniform(), s.uniform());
        EXPECT_TRUE(in_lune(midpoint(a, b), a, b));
    }
}

TEST(ConeIndex, Examples) {
    const ConeSpec four(4);
    EXPECT_EQ(cone_index(Point(0, 0), Point(1, 0), four), 1);
    EXPECT_EQ(cone_index(Point(0, 0), Point(0, 1), four), 2);
    // atan2(-1,-1) = -3pi/4 -> 5pi/4 in [pi, 3pi/2).
    EXPECT_NEAR(normalize_angle(std::atan2(-1.0, -1.0)), 5 * std::numbers::pi / 4, 1e-15);
    EXPECT_EQ(cone_index(Point(0, 0), Point(-1, -1), four), 3);
    EXPECT_EQ(cone_index(Point(0, 0), Point(1, -1e-9), four), 4);
}

TEST(ConeIndex, OffsetShiftsTheReferenceRay) {
    const ConeSpec shifted(4, std::numbers::pi / 4);
    EXPECT_EQ(cone_index(Point(0, 0), Point(1, 0), shifted), 4);
    EXPECT_EQ(cone_index(Point(0, 0), Point(1, 1.01), shifted), 1);
}

TEST(ConeIndex, RotationByThetaAdvancesTheIndex) {
    RandomStream s(17);
    for (int p : {2, 3, 4, 6, 8, 13}) {
        const ConeSpec spec(p, 0.3);
        for (int t = 0; t < 2000; ++t) {
            // Keep the angle away from cone boundaries.
            const int cone = static_cast<int>(s() % p);
            const double frac = 0.05 + 0.9 * s.uniform();
            const double a = spec.offset() + (cone + frac) * spec.theta();
            const double r = 0.1 + s.uniform();
            const Point u(s.uniform(), s.uniform());
            const Point w(u.x() + r * std::cos(a), u.y() + r * std::sin(a));
            const Point w2(u.x() + r * std::cos(a + spec.theta()),
                           u.y() + r * std::sin(a + spec.theta()));
            const int i = cone_index(u, w, spec);
            ASSERT_EQ(i, cone + 1);
            ASSERT_EQ(cone_index(u, w2, spec), i % p + 1);
        }
    }
}

TEST(ConeIndex, Errors) {
    EXPECT_THROW(cone_index(Point(1, 1), Point(1, 1), ConeSpec(4)), ContractViolation);
    EXPECT_THROW(ConeSpec(1), ParameterError);
    EXPECT_THROW(ConeSpec(4, -0.1), ParameterError);
    EXPECT_THROW(ConeSpec(4, 2 * std::numbers::pi), ParameterError);
    EXPECT_NEAR(ConeSpec(7).theta() * 7, 2 * std::numbers::pi, 1e-15);
}

TEST(Region, UnitSquare) {
    const auto sq = Region::unit_square();
    EXPECT_TRUE(contains(sq, Point(0.5, 0.5)));
    EXPECT_TRUE(contains(sq, Point(1.0, 0.0)));
    EXPECT_FALSE(contains(sq, Point(1.0001, 0.5)));
    EXPECT_DOUBLE_EQ(sq.area(), 1.0);
}

TEST(Region, RotatedSquare) {
    const auto d = Region::rotated_square();
    // Half-plane form: |x - 1/2| + |y - 1/2| <= sqrt(2)/2 ~ 0.7071; a corner gives 1.
    for (const Point corner : {Point(0, 0), Point(1, 0), Point(1, 1), Point(0, 1)}) {
        EXPECT_FALSE(contains(d, corner));
    }
    EXPECT_TRUE(contains(d, Point(0.5, 0.5)));
    EXPECT_TRUE(contains(d, Point(0.5 + 0.7, 0.5)));
    EXPECT_FALSE(contains(d, Point(0.5 + 0.71, 0.5)));
    EXPECT_DOUBLE_EQ(d.area(), 1.0);
}

TEST(Region, RectUnionValidation) {
    EXPECT_THROW(Region::rect_union({}), ParameterError);
    EXPECT_THROW(Region::rect_union({Rect{0, 0, 0, 1}}), ParameterError);
    EXPECT_THROW(Region::rect_union({Rect{0, 0, 1, 1}, Rect{0.5, 0.5, 2, 2}}), ParameterError);
    const auto l = Region::l_shape(0.5, 0.5);
    EXPECT_DOUBLE_EQ(l.area(), 0.75);
    EXPECT_TRUE(contains(l, Point(0.9, 0.1)));
    EXPECT_TRUE(contains(l, Point(0.1, 0.9)));
    EXPECT_FALSE(contains(l, Point(0.9, 0.9)));
}

TEST(PointSet, RejectsDuplicates) {
    try {
        PointSet({Point(0, 0), Point(1, 1), Point(0, 0)});
        FAIL() << "expected DuplicatePointError";
    } catch (const DuplicatePointError& e) {
        EXPECT_EQ(e.first(), 0u);
        EXPECT_EQ(e.second(), 2u);
    }
    EXPECT_NO_THROW(PointSet({Point(0, 0), Point(0, 1)}));
}

TEST(PointSet, Without) {
    const PointSet ps({Point(0, 0), Point(1, 1), Point(2, 2)});
    const auto rest = ps.without(1);
    ASSERT_EQ(rest.size(), 2u);
    EXPECT_EQ(rest[1], Point(2, 2));
}
