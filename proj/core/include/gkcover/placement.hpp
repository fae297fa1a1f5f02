#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gkcover/geometry.hpp"
#include "gkcover/shapes.hpp"

namespace gk {

inline constexpr double kPlacementTol = 1e-7;

/// Group element of G_k = translations x Z_k applied to a curve: rotation by
/// 2*pi*rotation_index/group_order about the origin, then the translation.
struct Placement {
    int group_order = 1;
    int rotation_index = 0;
    Vec2 translation{};
};

struct PlacementResult {
    bool success = false;
    std::optional<Placement> placement;
    ConvexBody witness;  // curve after the placing motion
    std::vector<HomothetFit> diagnostics;
    std::string note;
};

/// Place a closed convex curve of perimeter <= 2 into the equilateral
/// triangle of height 1 using only a translation or the half turn: bound the
/// curve by its slope pi/3 and 2pi/3 slabs and move the top corner of that
/// parallelogram to the apex; if the curve then dips below the base, the half
/// turn works instead.  Throws std::invalid_argument when the perimeter
/// exceeds 2 + tol.
PlacementResult place_g2(const ConvexBody& curve, double tol = kPlacementTol);

/// Fit by the smallest homothet of the (triangular) shape over all k
/// rotations; succeeds when the best scale is at most 1 + tol.  Ties prefer
/// the smallest rotation index.  Curves of any perimeter are accepted since
/// the scales themselves are the diagnostic; the covering guarantee only
/// applies at perimeter <= 2.
PlacementResult place_gk_homothet(const ConvexBody& curve,
                                  const CoveringShape& shape, int k,
                                  double tol = kPlacementTol);

/// Place a unit segment of the given slope into the segment-covering triangle
/// for Z_k: reduce the slope modulo the rotation group, then pivot the
/// segment at corner Y (small reduced slopes) or hang it from the apex Z.
PlacementResult place_segment_gk(double slope, int k,
                                 const CoveringShape& shape,
                                 double tol = kPlacementTol);

/// Translate-only placement into the church window: drop the curve onto the
/// floor, then slide horizontally into the interval allowed by the two
/// parabola constraints (the feasible offsets form a closed interval whose
/// endpoints come from vertex constraints, so the search is exact).
PlacementResult place_in_church_window(const ConvexBody& curve,
                                       const CoveringShape& window,
                                       double tol = kPlacementTol);
PlacementResult place_in_church_window(const ConvexBody& curve,
                                       double tol = kPlacementTol);

/// G_3 placement into Gamma3: try the three rotations in index order, each
/// with the floor-touching translation rule of the church window plus the
/// roof test y_max <= 2/3.
PlacementResult place_g3(const ConvexBody& curve, const CoveringShape& gamma3,
                         double tol = kPlacementTol);
PlacementResult place_g3(const ConvexBody& curve, double tol = kPlacementTol);

/// G_3 placement of a triangle into GammaT.  Per rotation the curve touches
/// the floor and the worst constraint violation is a convex function of the
/// horizontal offset, minimized by golden-section search.
PlacementResult place_triangle_gt(const ConvexBody& triangle,
                                  const CoveringShape& gamma_t,
                                  double tol = kPlacementTol);
PlacementResult place_triangle_gt(const ConvexBody& triangle,
                                  double tol = kPlacementTol);

}  // namespace gk
