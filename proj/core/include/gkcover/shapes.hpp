#pragma once

#include <optional>
#include <string>

#include "gkcover/geometry.hpp"

namespace gk {

// Closed-form constants of the covering shapes.
inline const double kBeta = std::cos(kPi / 12);            // height of the k=4 triangle
inline const double kDeltaBetaSide = 2 * kBeta / std::sqrt(3.0);
inline const double kDelta1Area = std::sqrt(3.0) / 3;
inline const double kDeltaBetaArea = (2 * std::sqrt(3.0) + 3) / 12;
inline const double kGamma3Area = 46.0 / 81;
inline const double kGammaTShavedArea =
    (86 - 44 * std::sqrt(3.0) - 3 * kPi) / 81;
inline const double kGammaTArea = kGamma3Area - kGammaTShavedArea;

enum class ShapeKind {
    Delta1,          // equilateral, height 1
    DeltaBeta,       // equilateral, height cos(pi/12)
    RightIsosceles,  // legs 1, hypotenuse slope pi/4
    SegmentTriangle, // segment-covering triangle for Z_k rotations
    ChurchWindow,    // between parabolas y^2 = 1 +- 2x, above y = 0
    Gamma3,          // church window capped at y = 2/3
    GammaT,          // Gamma3 with top corners shaved by the rotating triangle
};

struct SegmentTriangleParams {
    int k = 3;
    double apex_angle = kPi / 2;  // interior angle at X, in [pi/2, upper bound]
};

/// A covering shape with polygonal inner/outer approximations (equal for
/// polygonal shapes) and an exact boundary-clearance function.
struct CoveringShape {
    ShapeKind kind = ShapeKind::Delta1;
    ConvexBody inner;
    ConvexBody outer;
    std::optional<double> analytic_area;
    std::optional<double> analytic_perimeter;
    std::string frame_note;
    std::optional<SegmentTriangleParams> segment_params;

    /// Approximate signed distance to the boundary, positive inside,
    /// exact up to curvature effects of order clearance^2.
    double clearance(Vec2 p) const;
    bool contains_point(Vec2 p, double tol) const { return clearance(p) >= -tol; }
};

CoveringShape build_delta1();
CoveringShape build_delta_beta();
CoveringShape build_right_isosceles();

/// Triangle with bottom side XY of length 1 on the x-axis (Y at the origin,
/// X at (1,0)) and apex Z at height sin(pi/k) (k odd) or sin(2*pi/k) (k even).
/// apex_angle is the interior angle at X; admissible range [pi/2, (k-1)pi/k]
/// for odd k and [pi/2, (k-2)pi/k] for even k.
CoveringShape build_gk_segment_triangle(int k, double apex_angle);

CoveringShape build_church_window(int samples_per_arc = 4096);
CoveringShape build_gamma3(int samples_per_arc = 4096);
CoveringShape build_gamma_t(int samples_per_arc = 4096);

/// Corner-shaving trajectory traced by the vertex Z of the rotating
/// equilateral triangle with side 2/3; t in [-4/9, -1/3] is the x-coordinate
/// of the triangle vertex sliding on the left parabola.
Vec2 gamma_t_point(double t);
double gamma_t_slope(double t);      // dy/dx along the trajectory
double gamma_t_tan_angle(double t);  // tan of the triangle tilt angle
/// Numerator sign of d/dt (dy/dx); <= 0 on the open interval keeps the
/// shaved region convex.
double gamma_t_slope_derivative_numerator(double t);
/// Inverse of the trajectory x-coordinate (monotone increasing in t).
double gamma_t_t_from_x(double x);

/// Boundary landmarks of GammaT in its construction frame (bottom side on
/// the x-axis, symmetric in x).  Clockwise from the origin: O bottom middle,
/// A bottom left corner, B upper end of the lower-left parabola piece,
/// C/D left/right top corners, E right end of the top-right parabola piece,
/// F bottom right corner; H is the top middle.
struct GammaTLandmarks {
    Vec2 O, A, B, C, D, E, F, H;
};
GammaTLandmarks gamma_t_landmarks();

/// Hull of two crossed unit segments of slopes pi/4 and 3*pi/4 starting at
/// the bottom corners of DeltaBeta; every Z_4 rotation of it needs the full
/// size triangle, which makes it the shape's tightness witness.
ConvexBody orthogonal_cross_hull();

}  // namespace gk
