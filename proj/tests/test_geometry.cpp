#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <vector>

#include "gkcover/geometry.hpp"

using namespace gk;

namespace {

ConvexBody unit_square() {
    return ConvexBody({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
}

ConvexBody make_ngon(int n, double radius, double phase, Vec2 center = {}) {
    std::vector<Vec2> pts;
    pts.reserve(n);
    for (int i = 0; i < n; ++i)
        pts.push_back(center + radius * unit_dir(phase + 2 * kPi * i / n));
    return ConvexBody(pts);
}

}  // namespace

TEST_CASE("hull drops interior, duplicate and collinear points") {
    ConvexBody b({{0, 0}, {1, 0}, {0.5, 0.0}, {1, 1}, {0, 1},
                  {0.5, 0.5}, {0, 0}, {1, 0}});
    CHECK(b.size() == 4);
    CHECK(b.area() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(b.vertices()[0].x == doctest::Approx(0.0));
    CHECK(b.vertices()[0].y == doctest::Approx(0.0));
    double cr = cross(b.vertices()[1] - b.vertices()[0],
                      b.vertices()[2] - b.vertices()[1]);
    CHECK(cr > 0);  // counterclockwise
}

TEST_CASE("degenerate bodies: point and segment") {
    ConvexBody pt({{2, 3}, {2, 3}});
    CHECK(pt.is_point());
    CHECK(pt.perimeter() == 0.0);
    CHECK(pt.area() == 0.0);

    ConvexBody seg({{0, 0}, {3, 4}});
    CHECK(seg.is_segment());
    CHECK(seg.perimeter() == doctest::Approx(10.0).epsilon(1e-15));
    CHECK(seg.area() == 0.0);
    CHECK(seg.diameter() == doctest::Approx(5.0).epsilon(1e-15));
}

TEST_CASE("support function of the unit square") {
    auto b = unit_square();
    CHECK(b.support(Vec2{1, 0}) == doctest::Approx(1.0));
    CHECK(b.support(Vec2{-1, 0}) == doctest::Approx(0.0));
    CHECK(b.support(unit_dir(kPi / 4)) ==
          doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
    CHECK(b.support(kPi / 4) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
}

TEST_CASE("width_at produces a bounding slab with the exact width") {
    auto b = unit_square();
    Slab s0 = b.width_at(0.0);
    CHECK(s0.width == doctest::Approx(1.0).epsilon(1e-14));
    Slab s45 = b.width_at(kPi / 4);
    CHECK(s45.width == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));

    Vec2 n = unit_dir(s45.orientation + kPi / 2);
    double lo = 1e300, hi = -1e300;
    for (Vec2 v : b.vertices()) {
        lo = std::min(lo, dot(v, n));
        hi = std::max(hi, dot(v, n));
    }
    CHECK(s45.offset == doctest::Approx(lo).epsilon(1e-12));
    CHECK(s45.offset + s45.width == doctest::Approx(hi).epsilon(1e-12));
}

TEST_CASE("perimeter, area, centroid, diameter") {
    auto b = unit_square();
    CHECK(b.perimeter() == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(b.area() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(b.centroid().x == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(b.centroid().y == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(b.diameter() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("rigid motions and reflection act on supports as expected") {
    auto b = unit_square();
    auto r = b.rotated(kPi / 2);
    CHECK(r.support(Vec2{1, 0}) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(r.support(Vec2{-1, 0}) == doctest::Approx(1.0).epsilon(1e-12));

    auto t = b.translated({2, -1});
    CHECK(t.support(Vec2{1, 0}) == doctest::Approx(3.0));
    CHECK(t.support(Vec2{0, 1}) == doctest::Approx(0.0));

    auto f = b.reflected({0, 0}, 0.0);  // across the x-axis
    CHECK(f.support(Vec2{0, 1}) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(f.support(Vec2{0, -1}) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(f.area() == doctest::Approx(1.0).epsilon(1e-12));

    auto s = ConvexBody({{0, 0}, {2, 0}, {2, 2}, {0, 2}}).scaled(0.5, {1, 1});
    CHECK(s.support(Vec2{1, 0}) == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(s.support(Vec2{-1, 0}) == doctest::Approx(-0.5).epsilon(1e-12));
}

TEST_CASE("intersection of convex bodies") {
    ConvexBody a({{0, 0}, {2, 0}, {2, 2}, {0, 2}});
    ConvexBody b({{1, 1}, {3, 1}, {3, 3}, {1, 3}});
    std::vector<ConvexBody> both = {a, b};
    ConvexBody c = intersect(both);
    CHECK(c.size() == 4);
    CHECK(c.area() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(c.support(Vec2{1, 0}) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(c.support(Vec2{-1, 0}) == doctest::Approx(-1.0).epsilon(1e-12));

    ConvexBody d({{5, 5}, {6, 5}, {6, 6}});
    std::vector<ConvexBody> apart = {a, d};
    CHECK(intersect(apart).empty());
}

TEST_CASE("containment margin is signed") {
    ConvexBody big({{0, 0}, {10, 0}, {10, 10}, {0, 10}});
    ConvexBody inside({{2, 2}, {3, 2}, {3, 3}, {2, 3}});
    CHECK(containment_violation(big, inside) == doctest::Approx(-2.0).epsilon(1e-9));
    CHECK(contains(big, inside, 0.0));

    ConvexBody poking({{9, 0}, {11, 0}, {11, 1}, {9, 1}});
    CHECK(containment_violation(big, poking) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK_FALSE(contains(big, poking, 1e-7));
    CHECK(contains(big, poking, 1.1));
}

TEST_CASE("minimal triangle homothet: exact scales on known bodies") {
    ConvexBody tri({{0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2}});

    HomothetFit self = min_homothet(tri, tri);
    CHECK(self.scale == doctest::Approx(1.0).epsilon(1e-12));

    ConvexBody small = tri.scaled(0.4, tri.centroid()).translated({0.3, 0.1});
    HomothetFit fit = min_homothet(tri, small);
    CHECK(fit.scale == doctest::Approx(0.4).epsilon(1e-12));
    ConvexBody placed = tri.scaled(fit.scale, {}).translated(fit.translation);
    CHECK(contains(placed, small, 1e-9));

    CHECK(min_homothet(tri, ConvexBody({{5, 5}})).scale ==
          doctest::Approx(0.0).epsilon(1e-12));

    // 360-gon with a vertex along each inward side normal of the triangle:
    // its support there equals the radius, so the scale is radius/inradius.
    double inradius = std::sqrt(3.0) / 6;
    ConvexBody disk = make_ngon(360, 0.2, -kPi / 2, {0.4, 0.3});
    CHECK(min_homothet(tri, disk).scale ==
          doctest::Approx(0.2 / inradius).epsilon(1e-12));

    CHECK_THROWS_AS(min_homothet(ConvexBody({{0, 0}, {1, 0}}), tri),
                    std::invalid_argument);
}

TEST_CASE("minkowski sum and symmetrization") {
    ConvexBody a = unit_square();
    ConvexBody b({{0, 0}, {2, 0}, {2, 2}, {0, 2}});
    ConvexBody s = minkowski_sum(a, b);
    CHECK(s.size() == 4);
    CHECK(s.area() == doctest::Approx(9.0).epsilon(1e-12));

    ConvexBody tri({{0, 0}, {1, 0}, {0, 1}});
    ConvexBody sym = minkowski_symmetrize(tri);
    CHECK(sym.size() == 6);
    CHECK(sym.area() == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(containment_violation(sym, sym.rotated(kPi)) <= 1e-12);
}

TEST_CASE("point to segment distance") {
    CHECK(point_segment_distance({0, 1}, {-1, 0}, {1, 0}) ==
          doctest::Approx(1.0).epsilon(1e-15));
    CHECK(point_segment_distance({3, 4}, {-1, 0}, {1, 0}) ==
          doctest::Approx(std::sqrt(20.0)).epsilon(1e-15));
    CHECK(point_segment_distance({0.5, 0}, {-1, 0}, {1, 0}) == 0.0);
}
