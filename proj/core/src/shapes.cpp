#include "gkcover/shapes.hpp"

#include <cmath>
#include <stdexcept>

namespace gk {
namespace {

const double kSqrt3 = std::sqrt(3.0);
const double kGammaTXCornerAbs = 1.0 / kSqrt3 - 4.0 / 9.0;  // |x| of the top corners

std::vector<double> chebyshev_nodes(double a, double b, int m) {
    std::vector<double> xs;
    xs.reserve(m + 1);
    for (int j = 0; j <= m; ++j)
        xs.push_back(a + (b - a) * 0.5 * (1.0 - std::cos(kPi * j / m)));
    return xs;
}

double polygon_clearance(const ConvexBody& poly, Vec2 p) {
    const auto& v = poly.vertices();
    double depth = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Vec2 a = v[i];
        const Vec2 e = v[(i + 1) % v.size()] - a;
        const Vec2 n_in = perp(e) * (1.0 / norm(e));
        depth = std::min(depth, dot(n_in, p - a));
    }
    return depth;
}

// x-coordinate of the right parabola y^2 = 1 - 2x at height y.
double parabola_x(double y) { return 0.5 * (1.0 - y * y); }

// Slack of p against the two parabola constraints and the floor, scaled to
// approximate Euclidean distance.
double window_clearance(Vec2 p) {
    const double g = 2.0 * std::sqrt(1.0 + p.y * p.y);
    const double right = (1.0 - 2.0 * p.x - p.y * p.y) / g;
    const double left = (1.0 + 2.0 * p.x - p.y * p.y) / g;
    return std::min({p.y, right, left});
}

struct Line {
    Vec2 point;
    Vec2 dir;  // along the boundary, CCW
};

Vec2 line_intersection(const Line& a, const Line& b) {
    const double den = cross(a.dir, b.dir);
    const Vec2 d = b.point - a.point;
    return a.point + a.dir * (cross(d, b.dir) / den);
}

// Tangent of the right parabola at height y, oriented upward (CCW side).
Line parabola_tangent(double y) {
    return {{parabola_x(y), y}, {-y, 1.0}};
}

std::vector<Vec2> outer_chain(const std::vector<Line>& lines) {
    std::vector<Vec2> pts;
    pts.reserve(lines.size());
    for (std::size_t i = 0; i < lines.size(); ++i)
        pts.push_back(line_intersection(lines[i], lines[(i + 1) % lines.size()]));
    return pts;
}

void append_mirrored(std::vector<Vec2>& pts) {
    const std::size_t n = pts.size();
    for (std::size_t i = 0; i < n; ++i) pts.push_back({-pts[i].x, pts[i].y});
}

void check_gamma_t_param(double t) {
    if (t < -4.0 / 9.0 - 1e-12 || t > -1.0 / 3.0 + 1e-12)
        throw std::invalid_argument(
            "trajectory parameter must lie in [-4/9, -1/3]");
}

// Concave roof over the right half: the trajectory arc extended by its end
// tangents (horizontal at the top corner, slope -sqrt(3) at the parabola
// junction).  GammaT is exactly Gamma3 intersected with y <= roof(x) and the
// mirrored constraint, and each piece is concave, so clipping against it
// preserves convexity of feasibility problems.
double right_roof(double x, double* slope_out) {
    if (x <= kGammaTXCornerAbs) {
        if (slope_out) *slope_out = 0.0;
        return 2.0 / 3.0;
    }
    if (x >= 1.0 / 3.0) {
        if (slope_out) *slope_out = -kSqrt3;
        return kSqrt3 / 3.0 - kSqrt3 * (x - 1.0 / 3.0);
    }
    const double t = gamma_t_t_from_x(x);
    if (slope_out) *slope_out = gamma_t_slope(t);
    return gamma_t_point(t).y;
}

double gamma_t_clearance(Vec2 p) {
    double c = std::min(window_clearance(p), 2.0 / 3.0 - p.y);
    double s = 0.0;
    const double roof_r = right_roof(p.x, &s);
    c = std::min(c, (roof_r - p.y) / std::sqrt(1.0 + s * s));
    const double roof_l = right_roof(-p.x, &s);
    c = std::min(c, (roof_l - p.y) / std::sqrt(1.0 + s * s));
    return c;
}

}  // namespace

CoveringShape build_delta1() {
    CoveringShape s;
    s.kind = ShapeKind::Delta1;
    const double half = 1.0 / kSqrt3;
    s.inner = ConvexBody({{-half, 0}, {half, 0}, {0, 1}});
    s.outer = s.inner;
    s.analytic_area = kDelta1Area;
    s.analytic_perimeter = 6.0 / kSqrt3;
    s.frame_note = "apex up at (0,1), bottom side on the x-axis";
    return s;
}

CoveringShape build_delta_beta() {
    CoveringShape s;
    s.kind = ShapeKind::DeltaBeta;
    const double half = kDeltaBetaSide / 2;
    s.inner = ConvexBody({{-half, 0}, {half, 0}, {0, kBeta}});
    s.outer = s.inner;
    s.analytic_area = kDeltaBetaArea;
    s.analytic_perimeter = 3 * kDeltaBetaSide;
    s.frame_note = "apex up at (0, cos(pi/12)), bottom side on the x-axis";
    return s;
}

CoveringShape build_right_isosceles() {
    CoveringShape s;
    s.kind = ShapeKind::RightIsosceles;
    s.inner = ConvexBody({{0, 0}, {1, 0}, {1, 1}});
    s.outer = s.inner;
    s.analytic_area = 0.5;
    s.analytic_perimeter = 2 + std::sqrt(2.0);
    s.frame_note = "legs 1 along (0,0)-(1,0)-(1,1), hypotenuse slope pi/4";
    return s;
}

CoveringShape build_gk_segment_triangle(int k, double apex_angle) {
    if (k < 3) throw std::invalid_argument("segment triangle needs k >= 3");
    const bool odd = (k % 2 != 0);
    const double height = odd ? std::sin(kPi / k) : std::sin(2 * kPi / k);
    const double apex_max = odd ? (k - 1) * kPi / k : (k - 2) * kPi / k;
    if (apex_angle < kPi / 2 - 1e-12 || apex_angle > apex_max + 1e-12)
        throw std::invalid_argument(
            odd ? "apex angle must lie in [pi/2, (k-1)pi/k]"
                : "apex angle must lie in [pi/2, (k-2)pi/k]");
    CoveringShape s;
    s.kind = ShapeKind::SegmentTriangle;
    // Y at the origin, X at (1,0); the apex leans right of X when obtuse.
    const double xz = 1.0 - height / std::tan(apex_angle);
    s.inner = ConvexBody({{0, 0}, {1, 0}, {xz, height}});
    s.outer = s.inner;
    s.analytic_area = height / 2;
    s.analytic_perimeter = s.inner.perimeter();
    s.frame_note = "bottom side XY on the x-axis, Y at the origin, X at (1,0)";
    s.segment_params = SegmentTriangleParams{k, apex_angle};
    return s;
}

CoveringShape build_church_window(int samples_per_arc) {
    if (samples_per_arc < 16)
        throw std::invalid_argument("need at least 16 samples per arc");
    CoveringShape s;
    s.kind = ShapeKind::ChurchWindow;

    const auto ys = chebyshev_nodes(0.0, 1.0, samples_per_arc);
    std::vector<Vec2> in_pts = {{-0.5, 0}, {0.5, 0}};
    for (double y : ys) in_pts.push_back({parabola_x(y), y});
    for (double y : ys) in_pts.push_back({-parabola_x(y), y});
    s.inner = ConvexBody(std::move(in_pts));

    std::vector<Line> lines;
    lines.push_back({{0, 0}, {1, 0}});  // floor
    for (double y : ys) lines.push_back(parabola_tangent(y));
    for (auto it = ys.rbegin(); it != ys.rend(); ++it) {
        const Line t = parabola_tangent(*it);
        lines.push_back({{-t.point.x, t.point.y}, {t.dir.x, -t.dir.y}});
    }
    s.outer = ConvexBody(outer_chain(lines));

    s.analytic_area = 2.0 / 3.0;
    s.analytic_perimeter = 1.0 + std::sqrt(2.0) + std::log(1.0 + std::sqrt(2.0));
    s.frame_note =
        "bottom side from (-1/2,0) to (1/2,0), apex (0,1); between the "
        "parabolas y^2 = 1 +- 2x";
    return s;
}

CoveringShape build_gamma3(int samples_per_arc) {
    if (samples_per_arc < 16)
        throw std::invalid_argument("need at least 16 samples per arc");
    CoveringShape s;
    s.kind = ShapeKind::Gamma3;

    const auto ys = chebyshev_nodes(0.0, 2.0 / 3.0, samples_per_arc);
    std::vector<Vec2> in_pts;
    for (double y : ys) in_pts.push_back({parabola_x(y), y});
    append_mirrored(in_pts);
    s.inner = ConvexBody(std::move(in_pts));

    std::vector<Line> lines;
    lines.push_back({{0, 0}, {1, 0}});
    for (double y : ys) lines.push_back(parabola_tangent(y));
    lines.push_back({{0, 2.0 / 3.0}, {-1, 0}});  // roof
    for (auto it = ys.rbegin(); it != ys.rend(); ++it) {
        const Line t = parabola_tangent(*it);
        lines.push_back({{-t.point.x, t.point.y}, {t.dir.x, -t.dir.y}});
    }
    s.outer = ConvexBody(outer_chain(lines));

    s.analytic_area = kGamma3Area;
    const double a = 2.0 / 3.0;
    const double arc =
        0.5 * (a * std::sqrt(1 + a * a) + std::asinh(a));
    s.analytic_perimeter = 1.0 + 2.0 * parabola_x(a) + 2.0 * arc;
    s.frame_note = "church window capped at y = 2/3; top corners (+-5/18, 2/3)";
    return s;
}

Vec2 gamma_t_point(double t) {
    check_gamma_t_param(t);
    const double x =
        0.5 * (std::sqrt(6 * t + 3) + std::sqrt(-2 * t - 5.0 / 9.0) + 2 * t);
    const double y =
        0.5 * (std::sqrt(-6 * t - 5.0 / 3.0) + std::sqrt(2 * t + 1));
    return {x, y};
}

double gamma_t_slope(double t) {
    check_gamma_t_param(t);
    const double dy =
        0.5 * (-3.0 / std::sqrt(-6 * t - 5.0 / 3.0) + 1.0 / std::sqrt(2 * t + 1));
    const double dx =
        0.5 * (3.0 / std::sqrt(6 * t + 3) - 1.0 / std::sqrt(-2 * t - 5.0 / 9.0) + 2.0);
    return dy / dx;
}

double gamma_t_tan_angle(double t) {
    check_gamma_t_param(t);
    return std::sqrt((2 * t + 1) / (-2 * t - 5.0 / 9.0));
}

double gamma_t_slope_derivative_numerator(double t) {
    check_gamma_t_param(t);
    const double a = -6 * t - 5.0 / 3.0;  // under the first y radical
    const double b = 2 * t + 1;
    const double c = 6 * t + 3;
    const double d = -2 * t - 5.0 / 9.0;
    const double num = -3.0 / std::sqrt(a) + 1.0 / std::sqrt(b);
    const double den = 3.0 / std::sqrt(c) - 1.0 / std::sqrt(d) + 2.0;
    const double dnum = -9.0 * std::pow(a, -1.5) - std::pow(b, -1.5);
    const double dden = -9.0 * std::pow(c, -1.5) - std::pow(d, -1.5);
    return dnum * den - num * dden;
}

double gamma_t_t_from_x(double x) {
    double lo = -4.0 / 9.0, hi = -1.0 / 3.0;
    if (x <= gamma_t_point(lo).x) return lo;
    if (x >= gamma_t_point(hi).x) return hi;
    for (int i = 0; i < 80; ++i) {
        const double mid = 0.5 * (lo + hi);
        (gamma_t_point(mid).x < x ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

GammaTLandmarks gamma_t_landmarks() {
    GammaTLandmarks lm;
    lm.O = {0, 0};
    lm.A = {-0.5, 0};
    lm.B = {-1.0 / 3.0, kSqrt3 / 3};
    lm.C = {-kGammaTXCornerAbs, 2.0 / 3.0};
    lm.D = {kGammaTXCornerAbs, 2.0 / 3.0};
    lm.E = {1.0 / 3.0, kSqrt3 / 3};
    lm.F = {0.5, 0};
    lm.H = {0, 2.0 / 3.0};
    return lm;
}

CoveringShape build_gamma_t(int samples_per_arc) {
    if (samples_per_arc < 64)
        throw std::invalid_argument("need at least 64 samples per trajectory arc");
    CoveringShape s;
    s.kind = ShapeKind::GammaT;

    const auto ys = chebyshev_nodes(0.0, kSqrt3 / 3, samples_per_arc);
    const auto ts = chebyshev_nodes(-4.0 / 9.0, -1.0 / 3.0, samples_per_arc);
    std::vector<Vec2> in_pts;
    for (double y : ys) in_pts.push_back({parabola_x(y), y});
    for (double t : ts) in_pts.push_back(gamma_t_point(t));
    append_mirrored(in_pts);
    s.inner = ConvexBody(std::move(in_pts));

    std::vector<Line> right;  // CCW from the bottom-right corner up to the roof
    for (double y : ys) right.push_back(parabola_tangent(y));
    for (std::size_t i = ts.size() - 1; i-- > 1;) {  // skip both shared end tangents
        const Vec2 p = gamma_t_point(ts[i]);
        const double m = gamma_t_slope(ts[i]);
        right.push_back({p, {-1.0, -m}});
    }
    std::vector<Line> lines;
    lines.push_back({{0, 0}, {1, 0}});
    for (const Line& l : right) lines.push_back(l);
    lines.push_back({{0, 2.0 / 3.0}, {-1, 0}});
    for (auto it = right.rbegin(); it != right.rend(); ++it)
        lines.push_back({{-it->point.x, it->point.y}, {it->dir.x, -it->dir.y}});
    s.outer = ConvexBody(outer_chain(lines));

    s.analytic_area = kGammaTArea;
    s.frame_note =
        "Gamma3 with both top corners shaved along the rotating-triangle "
        "trajectory between (+-(1/sqrt(3)-4/9), 2/3) and (+-1/3, sqrt(3)/3)";
    return s;
}

ConvexBody orthogonal_cross_hull() {
    const double half = kDeltaBetaSide / 2;
    const double r = std::sqrt(2.0) / 2;
    const Vec2 p1{-half, 0}, p2{half, 0};
    return ConvexBody({p1, p2, p1 + Vec2{r, r}, p2 + Vec2{-r, r}});
}

double CoveringShape::clearance(Vec2 p) const {
    switch (kind) {
        case ShapeKind::Delta1:
        case ShapeKind::DeltaBeta:
        case ShapeKind::RightIsosceles:
        case ShapeKind::SegmentTriangle:
            return polygon_clearance(outer, p);
        case ShapeKind::ChurchWindow:
            return window_clearance(p);
        case ShapeKind::Gamma3:
            return std::min(window_clearance(p), 2.0 / 3.0 - p.y);
        case ShapeKind::GammaT:
            return gamma_t_clearance(p);
    }
    return -std::numeric_limits<double>::infinity();
}

}  // namespace gk
