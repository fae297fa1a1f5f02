#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gkcover/geometry.hpp"
#include "gkcover/placement.hpp"
#include "gkcover/shapes.hpp"

namespace gk {

enum class BoundKind { TwoSided, AtLeast, AtMost };

/// Outcome of one verification: a measured quantity against its reference,
/// with the bound direction, sample budget and (on interesting outcomes) the
/// geometry that produced the extreme value.
struct LemmaReport {
    std::string lemma_id;
    double measured = 0.0;
    double reference = 0.0;
    double tolerance = 0.0;
    BoundKind direction = BoundKind::TwoSided;
    bool pass = false;
    long long samples = 1;
    std::vector<std::pair<std::string, std::vector<Vec2>>> witness;
    std::string note;
};

bool bound_holds(double measured, double reference, double tolerance,
                 BoundKind direction);

// --- slab tiling bound -----------------------------------------------------

/// Width sum d_0 + d_{pi/3} + d_{2pi/3} <= perimeter for one curve.
LemmaReport check_tiling(const ConvexBody& curve);
LemmaReport tiling_sweep(std::uint64_t seed, long long budget);

// --- circumscribed 12-gon perimeter identity -------------------------------

/// Intersect the four rotated minimal homothets of DeltaBeta around the
/// curve and compare the 12-gon perimeter with sum(a_i) / (2 cos(pi/12)).
LemmaReport h_polygon_perimeter(const ConvexBody& curve);
LemmaReport h_perimeter_sweep(std::uint64_t seed, long long budget);

// --- unfolding bound for circumscribed 12-gons -----------------------------

/// Convex 12-gon with edge slopes k*pi/6, represented by its 12 support
/// offsets; edges may degenerate to points.
struct TwelveGon {
    std::array<double, 12> offsets{};

    static TwelveGon circumscribe(const ConvexBody& b);
    /// Start vertex of edge k (corner between edges k-1 and k).
    std::array<Vec2, 12> corners() const;
    std::array<double, 12> edge_lengths() const;
    Vec2 touchpoint(int edge, double lambda) const;
    double perimeter() const;
};

struct UnfoldTrace {
    double circuit_length = 0.0;
    Vec2 displacement{};          // endpoint offset of the unfolded path
    double horizontal_part = 0.0; // decomposition onto (1,0)
    double oblique_part = 0.0;    // and onto unit_dir(pi/6)
};

/// Unfold the inscribed 12-segment circuit by reflecting the tail across
/// each touched edge line in turn; the displacement decomposes into a
/// horizontal and a slope pi/6 part whose absolute sum is the 12-gon
/// perimeter, giving circuit >= perimeter * cos(pi/12).
UnfoldTrace unfold_circuit(const TwelveGon& p,
                           const std::array<double, 12>& lambdas);
LemmaReport unfold_bound(const TwelveGon& p,
                         const std::array<double, 12>& lambdas);
LemmaReport unfold_sweep(std::uint64_t seed, long long budget);

// --- extremal inscribed triangles in the church window ---------------------

/// Minimum perimeter over triangles with X on the left parabola, Y on the
/// floor, Z on the right parabola; checks the minimum is 2 and the found
/// minimizer is isosceles with horizontal XZ and Y at the origin.
LemmaReport min_inscribed_triangle(std::uint64_t seed = 1, int restarts = 10,
                                   bool apex_constrained = false);

// --- hull perimeter of translated symmetric figures ------------------------

/// For centrally symmetric figures, concentric placement minimizes the hull
/// perimeter; sampled translations must never beat it, and the perimeter is
/// midpoint-convex along random translation segments.
LemmaReport hull_perimeter_convexity(const std::vector<ConvexBody>& figures,
                                     int trials, std::uint64_t seed);
LemmaReport hull_centering_sweep(std::uint64_t seed, int sets, int trials);

// --- area lower bounds from segment stars ----------------------------------

/// Hull of unit segments at slopes pi/4, 3pi/4, pi/3, 5pi/6 with common
/// midpoints has area sqrt(6)/4; slope variants and the numeric ordering
/// against 46/81 come along as side checks.
LemmaReport regular_lower_bounds();

// --- shaved-corner trajectory ----------------------------------------------

/// d/dt(dy/dx) <= 0 along the trajectory plus exact end slopes 0 and
/// -sqrt(3): the shaved corner stays convex.
LemmaReport gt_convexity(int grid = 10000);

/// Inner/outer polygon bracket around the closed-form GammaT area, and the
/// bound area < 0.5634.
LemmaReport gt_area(int samples_per_arc = 4096);

// --- isosceles families inside GammaT --------------------------------------

enum class IsoSweepKind {
    Rotate1,  // X pivots at the floor while Y slides to the bottom corner
    LxLine,   // line through X parallel to YZ meets the lower-left boundary
    Rotate2,  // apex stays under the equilateral apex line
};
LemmaReport iso_rotation_sweep(IsoSweepKind kind, int base_grid = 24,
                               int angle_grid = 1000);

// --- worm closure ----------------------------------------------------------

/// Close an open arc with its half-turn copy, hull it, and place the result
/// in the height-1 triangle by translation only.
LemmaReport worm_closure(const std::vector<Vec2>& worm);
LemmaReport worm_sweep(std::uint64_t seed, long long budget);

/// Two-leg paths between contact points on the three sides of the height-1
/// triangle have length >= 1: reflecting the last contact across the middle
/// side puts the endpoints on opposite sides of a height-1 rhombus.
LemmaReport two_leg_sweep(int contact_grid = 24);

// --- central symmetrization of DeltaBeta -----------------------------------

/// The symmetrization is a regular hexagon: six edges of equal length (half
/// the triangle side) at equal turning angles.
LemmaReport hexagon_symmetrization();

// --- disk + triangle hull minimum ------------------------------------------

/// Minimal hull area of the legs-1 right isosceles triangle and a translating
/// disk of radius 1/pi stays above 0.543.
LemmaReport disk_triangle_hull_min();

// --- brimful gallery --------------------------------------------------------

/// Curves needing the full DeltaBeta at every rotation (minimal homothet
/// scale 1), plus negative controls (the disk; a 0.999-scaled cross).
std::vector<LemmaReport> brimful_gallery();

/// The whole battery at a common seed; budgets scale linearly.
std::vector<LemmaReport> run_all_checks(std::uint64_t seed, int budget_scale);

}  // namespace gk
