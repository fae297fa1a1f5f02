#include "gkcover/placement.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace gk {
namespace {

const double kSqrt3 = std::sqrt(3.0);

void check_perimeter(const ConvexBody& curve, double tol) {
    const double p = curve.perimeter();
    if (p > 2.0 + tol) {
        std::ostringstream os;
        os << "curve perimeter " << p << " exceeds 2";
        throw std::invalid_argument(os.str());
    }
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

// Top corner of the parallelogram bounded by the slope pi/3 and slope 2pi/3
// slabs of the body: intersection of the slab lines seen from directions
// 5pi/6 and pi/6.
Vec2 slab_top_corner(const ConvexBody& b) {
    const double hi1 = b.support(unit_dir(5 * kPi / 6));
    const double lo2 = -b.support(unit_dir(kPi / 6));
    return {-(hi1 + lo2) / kSqrt3, hi1 - lo2};
}

const CoveringShape& default_gamma3() {
    static const CoveringShape s = build_gamma3(2048);
    return s;
}

const CoveringShape& default_gamma_t() {
    static const CoveringShape s = build_gamma_t(2048);
    return s;
}

}  // namespace

PlacementResult place_g2(const ConvexBody& curve, double tol) {
    check_perimeter(curve, tol);
    static const CoveringShape delta1 = build_delta1();
    PlacementResult res;
    for (int rot = 0; rot < 2; ++rot) {
        const ConvexBody body = rot == 0 ? curve : curve.rotated(kPi);
        const Vec2 top = slab_top_corner(body);
        const double y_min = -body.support(unit_dir(-kPi / 2));
        // The needed homothet scale of the height-1 triangle at this rotation.
        res.diagnostics.push_back({top.y - y_min, {}, rot});
        if (y_min < top.y - 1.0 - tol) continue;
        const Vec2 t = Vec2{0, 1} - top;
        const ConvexBody witness = body.translated(t);
        const double viol = containment_violation(delta1.outer, witness);
        if (viol > tol) {
            res.note = "slab rule broke containment by " + fmt(viol);
            continue;
        }
        res.success = true;
        res.placement = Placement{2, rot, t};
        res.witness = witness;
        res.note = rot == 0 ? "translation only" : "half turn";
        return res;
    }
    res.note = "both rotations leave the curve below the base: scales " +
               fmt(res.diagnostics[0].scale) + ", " + fmt(res.diagnostics[1].scale);
    return res;
}

PlacementResult place_gk_homothet(const ConvexBody& curve,
                                  const CoveringShape& shape, int k,
                                  double tol) {
    if (k < 1) throw std::invalid_argument("group order must be positive");
    if (shape.outer.size() != 3)
        throw std::invalid_argument("homothet placement needs a triangular shape");
    const ConvexBody& tmpl = shape.outer;
    PlacementResult res;
    int best = 0;
    for (int i = 0; i < k; ++i) {
        const ConvexBody ti = tmpl.rotated(2 * kPi * i / k);
        HomothetFit fit = min_homothet(ti, curve);
        fit.rotation_index = i;
        res.diagnostics.push_back(fit);
        if (fit.scale < res.diagnostics[best].scale) best = i;
    }
    const HomothetFit& fit = res.diagnostics[best];
    res.note = "best rotation " + std::to_string(best) + " scale " + fmt(fit.scale);
    if (curve.perimeter() > 2.0 + tol) res.note += "; perimeter above 2";
    if (fit.scale > 1.0 + tol) return res;

    // curve is inside scale * R_phi(template) + t; pull it back into the
    // canonical template, shrinking about the centroid to absorb scale < 1.
    const double phi = 2 * kPi * best / k;
    const Vec2 c = tmpl.centroid();
    const Vec2 u = (1.0 - fit.scale) * c - rotated(fit.translation, -phi);
    const ConvexBody witness = curve.transformed(-phi, u);
    const double viol = containment_violation(tmpl, witness);
    if (viol > 2 * tol) {
        res.note += "; pullback broke containment by " + fmt(viol);
        return res;
    }
    res.success = true;
    res.placement = Placement{k, (k - best) % k, u};
    res.witness = witness;
    return res;
}

PlacementResult place_segment_gk(double slope, int k,
                                 const CoveringShape& shape, double tol) {
    if (!shape.segment_params || shape.outer.size() != 3)
        throw std::invalid_argument("shape is not a segment-covering triangle");
    if (shape.segment_params->k != k)
        throw std::invalid_argument("group order does not match the shape");
    const auto& v = shape.outer.vertices();
    // Canonical frame: Y at the origin, X at (1,0), apex Z above.
    const Vec2 z = *std::max_element(
        v.begin(), v.end(), [](Vec2 a, Vec2 b) { return a.y < b.y; });
    const double window = (k % 2 != 0) ? kPi / k : 2 * kPi / k;

    double reduced = std::numeric_limits<double>::infinity();
    int best = 0;
    for (int i = 0; i < k; ++i) {
        double th = std::fmod(slope + 2 * kPi * i / k, kPi);
        if (th < 0) th += kPi;
        if (th < reduced - 1e-15) { reduced = th; best = i; }
    }
    PlacementResult res;
    res.note = "reduced slope " + fmt(reduced) + " by rotation " +
               std::to_string(best);
    if (reduced > window + 1e-9) {
        res.note += "; reduction failed to reach the admissible window";
        return res;
    }

    const double angle_y = std::atan2(z.y, z.x);
    const Vec2 d = unit_dir(reduced);
    const auto at_y = std::make_pair(std::string("pivot at Y"),
                                     ConvexBody({{0, 0}, d}));
    const auto at_z = std::make_pair(std::string("hang from Z"),
                                     ConvexBody({z, z - d}));
    std::vector<std::pair<std::string, ConvexBody>> tries;
    if (reduced <= angle_y + 1e-12)
        tries = {at_y, at_z};
    else
        tries = {at_z, at_y};
    for (const auto& [how, seg] : tries) {
        if (containment_violation(shape.outer, seg) > tol) continue;
        res.success = true;
        // The abstract unit segment is centered at the origin; rotation
        // `best` takes its slope to the reduced one, the translation drops
        // its midpoint onto the placed midpoint.
        res.placement =
            Placement{k, best, (seg.vertices()[0] + seg.vertices()[1]) * 0.5};
        res.witness = seg;
        res.note += "; " + how;
        return res;
    }
    res.note += "; no pivot placement fits";
    return res;
}

namespace {

struct WindowInterval {
    double ty = 0;       // floor-touching lift
    double lo = 0, hi = 0;  // feasible horizontal offsets
    double y_max = 0;
};

WindowInterval window_interval(const ConvexBody& body) {
    WindowInterval w;
    w.ty = body.support(unit_dir(-kPi / 2));  // = -y_min
    w.lo = -std::numeric_limits<double>::infinity();
    w.hi = std::numeric_limits<double>::infinity();
    w.y_max = body.support(unit_dir(kPi / 2)) + w.ty;
    for (const Vec2& p : body.vertices()) {
        const double y = p.y + w.ty;
        w.lo = std::max(w.lo, (y * y - 1) / 2 - p.x);
        w.hi = std::min(w.hi, (1 - y * y) / 2 - p.x);
    }
    return w;
}

PlacementResult window_failure(const WindowInterval& w) {
    PlacementResult res;
    res.note = "feasible offsets empty: [" + fmt(w.lo) + ", " + fmt(w.hi) + "]";
    return res;
}

}  // namespace

PlacementResult place_in_church_window(const ConvexBody& curve,
                                       const CoveringShape& window,
                                       double tol) {
    if (window.kind != ShapeKind::ChurchWindow)
        throw std::invalid_argument("shape is not the church window");
    check_perimeter(curve, tol);
    const WindowInterval w = window_interval(curve);
    if (w.lo > w.hi + tol) return window_failure(w);
    const Vec2 t{0.5 * (w.lo + w.hi), w.ty};
    PlacementResult res;
    res.success = true;
    res.placement = Placement{1, 0, t};
    res.witness = curve.translated(t);
    res.note = "offsets [" + fmt(w.lo) + ", " + fmt(w.hi) + "]";
    return res;
}

PlacementResult place_in_church_window(const ConvexBody& curve, double tol) {
    static const CoveringShape window = build_church_window(2048);
    return place_in_church_window(curve, window, tol);
}

PlacementResult place_g3(const ConvexBody& curve, const CoveringShape& gamma3,
                         double tol) {
    if (gamma3.kind != ShapeKind::Gamma3)
        throw std::invalid_argument("shape is not Gamma3");
    check_perimeter(curve, tol);
    PlacementResult res;
    std::string why;
    for (int i = 0; i < 3; ++i) {
        const ConvexBody body = i == 0 ? curve : curve.rotated(2 * kPi * i / 3);
        const WindowInterval w = window_interval(body);
        if (w.y_max > 2.0 / 3.0 + tol) {
            why += " r" + std::to_string(i) + ": height " + fmt(w.y_max);
            continue;
        }
        if (w.lo > w.hi + tol) {
            why += " r" + std::to_string(i) + ": offsets empty";
            continue;
        }
        const Vec2 t{0.5 * (w.lo + w.hi), w.ty};
        res.success = true;
        res.placement = Placement{3, i, t};
        res.witness = body.translated(t);
        res.note = "rotation " + std::to_string(i);
        return res;
    }
    res.note = "all rotations fail:" + why;
    return res;
}

PlacementResult place_g3(const ConvexBody& curve, double tol) {
    return place_g3(curve, default_gamma3(), tol);
}

namespace {

// Piecewise-linear cache of the corner roof y(x) over the trajectory span,
// refined by Newton steps on the exact parametrization; keeps the inner
// loop of the GammaT search free of per-evaluation bisections.
class RoofTable {
public:
    static const RoofTable& get() {
        static const RoofTable table;
        return table;
    }

    double operator()(double x) const {
        if (x <= x_lo_) return 2.0 / 3.0;
        if (x >= x_hi_) return kSqrt3 / 3 - kSqrt3 * (x - x_hi_);
        const double u = (x - x_lo_) / step_;
        const std::size_t i = std::min<std::size_t>(
            static_cast<std::size_t>(u), y_.size() - 2);
        const double w = u - static_cast<double>(i);
        return y_[i] * (1 - w) + y_[i + 1] * w;
    }

private:
    RoofTable() {
        x_lo_ = 1.0 / kSqrt3 - 4.0 / 9.0;
        x_hi_ = 1.0 / 3.0;
        const int n = 4096;
        step_ = (x_hi_ - x_lo_) / n;
        y_.resize(n + 1);
        double t = -4.0 / 9.0;
        for (int i = 0; i <= n; ++i) {
            const double x = x_lo_ + step_ * i;
            for (int it = 0; it < 4; ++it) {  // Newton on x(t) = x
                const double dx =
                    0.5 * (3.0 / std::sqrt(6 * t + 3) -
                           1.0 / std::sqrt(-2 * t - 5.0 / 9.0) + 2.0);
                t -= (gamma_t_point(t).x - x) / dx;
                t = std::clamp(t, -4.0 / 9.0, -1.0 / 3.0);
            }
            y_[i] = gamma_t_point(t).y;
        }
    }

    double x_lo_, x_hi_, step_;
    std::vector<double> y_;
};

// Worst constraint violation of the lifted vertex set at horizontal offset
// tx; every term is convex in tx (the roof is concave), so the minimum over
// tx is found by golden-section search.
double gt_violation(const std::vector<Vec2>& lifted, double tx) {
    const RoofTable& roof = RoofTable::get();
    double g = -std::numeric_limits<double>::infinity();
    for (const Vec2& p : lifted) {
        const double x = p.x + tx;
        g = std::max(g, p.y * p.y - 1 + 2 * x);
        g = std::max(g, p.y * p.y - 1 - 2 * x);
        g = std::max(g, p.y - roof(x));
        g = std::max(g, p.y - roof(-x));
    }
    return g;
}

}  // namespace

PlacementResult place_triangle_gt(const ConvexBody& triangle,
                                  const CoveringShape& gamma_t, double tol) {
    if (gamma_t.kind != ShapeKind::GammaT)
        throw std::invalid_argument("shape is not GammaT");
    check_perimeter(triangle, tol);
    PlacementResult res;
    std::string why;
    for (int i = 0; i < 3; ++i) {
        const ConvexBody body =
            i == 0 ? triangle : triangle.rotated(2 * kPi * i / 3);
        const WindowInterval w = window_interval(body);
        std::vector<Vec2> lifted = body.vertices();
        for (Vec2& p : lifted) p.y += w.ty;

        double lo = std::min(w.lo, w.hi) - 0.05;
        double hi = std::max(w.lo, w.hi) + 0.05;
        const double gr = (std::sqrt(5.0) - 1) / 2;
        double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
        double f1 = gt_violation(lifted, x1), f2 = gt_violation(lifted, x2);
        for (int it = 0; it < 80; ++it) {
            if (f1 <= f2) {
                hi = x2; x2 = x1; f2 = f1;
                x1 = hi - gr * (hi - lo);
                f1 = gt_violation(lifted, x1);
            } else {
                lo = x1; x1 = x2; f1 = f2;
                x2 = lo + gr * (hi - lo);
                f2 = gt_violation(lifted, x2);
            }
        }
        const double tx = f1 <= f2 ? x1 : x2;
        const Vec2 t{tx, w.ty};
        const ConvexBody witness = body.translated(t);
        double clearance = std::numeric_limits<double>::infinity();
        for (const Vec2& p : witness.vertices())
            clearance = std::min(clearance, gamma_t.clearance(p));
        if (clearance < -tol) {
            why += " r" + std::to_string(i) + ": short by " + fmt(-clearance);
            continue;
        }
        res.success = true;
        res.placement = Placement{3, i, t};
        res.witness = witness;
        res.note = "rotation " + std::to_string(i) + " clearance " + fmt(clearance);
        return res;
    }
    res.note = "all rotations fail:" + why;
    return res;
}

PlacementResult place_triangle_gt(const ConvexBody& triangle, double tol) {
    return place_triangle_gt(triangle, default_gamma_t(), tol);
}

}  // namespace gk
