#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace gk {

inline constexpr double kPi = 3.141592653589793238462643383279502884;

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator-() const { return {-x, -y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    Vec2& operator+=(Vec2 o) { x += o.x; y += o.y; return *this; }
    Vec2& operator-=(Vec2 o) { x -= o.x; y -= o.y; return *this; }
};

inline Vec2 operator*(double s, Vec2 v) { return v * s; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline double norm2(Vec2 a) { return a.x * a.x + a.y * a.y; }
inline Vec2 unit_dir(double angle) { return {std::cos(angle), std::sin(angle)}; }
inline Vec2 rotated(Vec2 v, double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    return {c * v.x - s * v.y, s * v.x + c * v.y};
}
inline Vec2 perp(Vec2 v) { return {-v.y, v.x}; }

double point_segment_distance(Vec2 p, Vec2 a, Vec2 b);

/// A slab is the region between two parallel bounding lines of a fixed
/// orientation (the angle of the lines, in [0, pi)).  `offset` is the signed
/// position of the lower line along the slab normal unit_dir(orientation + pi/2),
/// so the slab is { p : offset <= dot(p, normal) <= offset + width }.
struct Slab {
    double orientation = 0.0;
    double width = 0.0;
    double offset = 0.0;
};

struct HomothetFit {
    double scale = 0.0;
    Vec2 translation{};
    int rotation_index = 0;
};

/// Closed convex region given by its extreme points in CCW order.
/// Degenerate bodies are allowed: a single point, or a segment stored as its
/// two endpoints.  The perimeter of a segment counts both traversals, i.e.
/// twice its length, so a perimeter-2 "curve" may be a unit segment.
/// Construction canonicalizes: convex hull, CCW orientation, no collinear
/// vertices, first vertex lexicographically smallest.
class ConvexBody {
public:
    ConvexBody() = default;  // empty body (e.g. an empty intersection)
    explicit ConvexBody(std::vector<Vec2> points);

    static ConvexBody hull(std::span<const Vec2> points);

    const std::vector<Vec2>& vertices() const { return v_; }
    std::size_t size() const { return v_.size(); }
    bool empty() const { return v_.empty(); }
    bool is_point() const { return v_.size() == 1; }
    bool is_segment() const { return v_.size() == 2; }
    bool is_polygon() const { return v_.size() >= 3; }

    double support(Vec2 dir) const;
    double support(double angle) const { return support(unit_dir(angle)); }
    Slab width_at(double orientation) const;

    double perimeter() const;
    double area() const;
    Vec2 centroid() const;
    double diameter() const;

    ConvexBody transformed(double angle, Vec2 translation) const;
    ConvexBody translated(Vec2 t) const { return transformed(0.0, t); }
    ConvexBody rotated(double angle) const { return transformed(angle, {}); }
    ConvexBody scaled(double factor, Vec2 center = {}) const;
    /// Mirror image about the line through `line_point` at angle `line_angle`.
    ConvexBody reflected(Vec2 line_point, double line_angle) const;

private:
    std::vector<Vec2> v_;
};

ConvexBody intersect(std::span<const ConvexBody> bodies);

/// Greatest distance by which any vertex of `body` pokes outside `container`.
/// Negative values mean every vertex is strictly inside by that margin.
/// For degenerate containers this is the largest vertex distance to the
/// point/segment.  Returns +inf for an empty container with nonempty body.
double containment_violation(const ConvexBody& container, const ConvexBody& body);

inline bool contains(const ConvexBody& container, const ConvexBody& body,
                     double tol) {
    return containment_violation(container, body) <= tol;
}

/// Smallest scale a >= 0 such that some translate of a*T contains `body`,
/// where T is a nondegenerate triangle.  All three side constraints are tight
/// at the optimum, which reduces the LP to one 3x3 linear solve on the side
/// normals.  Throws std::invalid_argument unless T is a proper triangle.
HomothetFit min_homothet(const ConvexBody& triangle, const ConvexBody& body);

ConvexBody minkowski_sum(const ConvexBody& a, const ConvexBody& b);

/// Central symmetrization (1/2)(a + (-a)); centrally symmetric about origin.
ConvexBody minkowski_symmetrize(const ConvexBody& a);

}  // namespace gk
