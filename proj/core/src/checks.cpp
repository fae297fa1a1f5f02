#include "gkcover/checks.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gkcover/optimize.hpp"
#include "gkcover/placement.hpp"
#include "gkcover/sampler.hpp"
#include "gkcover/shapes.hpp"

namespace gk {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

const CoveringShape& delta1_shape() {
    static const CoveringShape s = build_delta1();
    return s;
}

const CoveringShape& delta_beta_shape() {
    static const CoveringShape s = build_delta_beta();
    return s;
}

const CoveringShape& gamma_t_shape() {
    static const CoveringShape s = build_gamma_t(512);
    return s;
}

ConvexBody regular_gon(int n, double radius, double phase = 0.0) {
    std::vector<Vec2> pts;
    pts.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        pts.push_back(radius * unit_dir(phase + 2.0 * kPi * i / n));
    return ConvexBody(std::move(pts));
}

ConvexBody segment_body(double angle, double length, Vec2 center = {}) {
    const Vec2 half = 0.5 * length * unit_dir(angle);
    return ConvexBody({center - half, center + half});
}

Vec2 reflect_point(Vec2 p, Vec2 anchor, Vec2 axis_dir) {
    const Vec2 v = p - anchor;
    return anchor + 2.0 * dot(v, axis_dir) * axis_dir - v;
}

std::string num(double v) {
    std::ostringstream os;
    os.precision(10);
    os << v;
    return os.str();
}

void add_witness(LemmaReport& r, const std::string& label,
                 std::vector<Vec2> pts) {
    r.witness.emplace_back(label, std::move(pts));
}

// Minimal scaled copies of the four quarter-turn rotations of DeltaBeta
// around one curve, their intersection, and the scale sum.
struct HIdentity {
    std::array<double, 4> a{};
    double scale_sum = 0.0;
    ConvexBody hull12;
    double hull_perimeter = 0.0;
};

HIdentity h_identity(const ConvexBody& curve) {
    const ConvexBody& tri = delta_beta_shape().outer;
    HIdentity out;
    std::vector<ConvexBody> homothets;
    homothets.reserve(4);
    for (int i = 0; i < 4; ++i) {
        const ConvexBody rot = tri.rotated(i * kPi / 2);
        const HomothetFit fit = min_homothet(rot, curve);
        out.a[static_cast<std::size_t>(i)] = fit.scale;
        out.scale_sum += fit.scale;
        homothets.push_back(rot.scaled(fit.scale).translated(fit.translation));
    }
    out.hull12 = intersect(homothets);
    out.hull_perimeter = out.hull12.perimeter();
    return out;
}

}  // namespace

bool bound_holds(double measured, double reference, double tolerance,
                 BoundKind direction) {
    switch (direction) {
        case BoundKind::TwoSided:
            return std::abs(measured - reference) <= tolerance;
        case BoundKind::AtLeast:
            return measured >= reference - tolerance;
        case BoundKind::AtMost:
            return measured <= reference + tolerance;
    }
    return false;
}

// --- slab tiling ------------------------------------------------------------

LemmaReport check_tiling(const ConvexBody& curve) {
    LemmaReport r;
    r.lemma_id = "slab-tiling-bound";
    const double d0 = curve.width_at(0.0).width;
    const double d60 = curve.width_at(kPi / 3).width;
    const double d120 = curve.width_at(2 * kPi / 3).width;
    r.measured = d0 + d60 + d120;
    r.reference = curve.perimeter();
    r.tolerance = 1e-9;
    r.direction = BoundKind::AtMost;
    r.pass = bound_holds(r.measured, r.reference, r.tolerance, r.direction);
    r.note = "widths " + num(d0) + ", " + num(d60) + ", " + num(d120);
    if (!r.pass) add_witness(r, "curve", curve.vertices());
    return r;
}

LemmaReport tiling_sweep(std::uint64_t seed, long long budget) {
    LemmaReport r;
    r.lemma_id = "slab-tiling-sweep";
    SampleConfig cfg;
    cfg.seed = seed;
    cfg.perimeter_target = 2.0;

    double worst_margin = -kInf;  // width sum minus perimeter, wants <= 0
    ConvexBody worst;
    long long failures = 0;
    for (long long i = 0; i < budget; ++i) {
        ConvexBody curve;
        if (i % 16 == 15) {
            curve = random_segment(cfg, static_cast<std::uint64_t>(i));
        } else {
            cfg.vertex_count = 3 + static_cast<int>(i % 62);
            curve = random_convex_curve(cfg, static_cast<std::uint64_t>(i));
        }
        const double sum = curve.width_at(0.0).width +
                           curve.width_at(kPi / 3).width +
                           curve.width_at(2 * kPi / 3).width;
        const double margin = sum - curve.perimeter();
        if (margin > worst_margin) {
            worst_margin = margin;
            worst = curve;
        }
        if (margin > 1e-9) ++failures;
    }
    r.measured = worst_margin;
    r.reference = 0.0;
    r.tolerance = 1e-9;
    r.direction = BoundKind::AtMost;
    r.samples = budget;
    r.pass = failures == 0;
    r.note = "worst width-sum excess over the perimeter; " +
             std::to_string(failures) + " violations";
    if (!r.pass) add_witness(r, "worst curve", worst.vertices());
    return r;
}

// --- H polygon perimeter identity -------------------------------------------

LemmaReport h_polygon_perimeter(const ConvexBody& curve) {
    LemmaReport r;
    r.lemma_id = "h-perimeter-identity";
    const HIdentity h = h_identity(curve);
    r.measured = h.hull_perimeter;
    r.reference = h.scale_sum / (2.0 * kBeta);
    r.tolerance = std::max(1e-6 * r.reference, 1e-12);
    r.direction = BoundKind::TwoSided;
    const double chain = h.scale_sum / 2.0 - curve.perimeter();
    r.pass = bound_holds(r.measured, r.reference, r.tolerance, r.direction) &&
             chain <= 1e-6;
    r.note = "scales " + num(h.a[0]) + ", " + num(h.a[1]) + ", " + num(h.a[2]) +
             ", " + num(h.a[3]) + "; sum(a)/2 - len = " + num(chain);
    add_witness(r, "intersection", h.hull12.vertices());
    if (!r.pass) add_witness(r, "curve", curve.vertices());
    return r;
}

LemmaReport h_perimeter_sweep(std::uint64_t seed, long long budget) {
    LemmaReport r;
    r.lemma_id = "h-perimeter-sweep";
    SampleConfig cfg;
    cfg.seed = seed;
    cfg.perimeter_target = 2.0;

    double max_rel = 0.0;      // identity residual, relative
    double worst_chain = -kInf;  // sum(a)/2 - len, wants <= 0
    double max_min_scale = -kInf;  // min_i a_i, wants <= 1 for perimeter 2
    ConvexBody worst;
    for (long long i = 0; i < budget; ++i) {
        ConvexBody curve;
        if (i % 11 == 10) {
            curve = random_segment(cfg, static_cast<std::uint64_t>(i));
        } else {
            cfg.vertex_count = 3 + static_cast<int>(i % 48);
            curve = random_convex_curve(cfg, static_cast<std::uint64_t>(i));
        }
        const HIdentity h = h_identity(curve);
        const double ref = h.scale_sum / (2.0 * kBeta);
        const double rel =
            std::abs(h.hull_perimeter - ref) / std::max(ref, 1e-30);
        const double chain = h.scale_sum / 2.0 - curve.perimeter();
        const double min_scale =
            *std::min_element(h.a.begin(), h.a.end());
        if (rel > max_rel) {
            max_rel = rel;
            worst = curve;
        }
        worst_chain = std::max(worst_chain, chain);
        max_min_scale = std::max(max_min_scale, min_scale);
    }
    r.measured = max_rel;
    r.reference = 0.0;
    r.tolerance = 1e-6;
    r.direction = BoundKind::AtMost;
    r.samples = budget;
    r.pass = max_rel <= 1e-6 && worst_chain <= 1e-6 &&
             max_min_scale <= 1.0 + 1e-7;
    r.note = "max relative identity residual; worst sum(a)/2 - len = " +
             num(worst_chain) + "; max over samples of min scale = " +
             num(max_min_scale);
    if (!r.pass) add_witness(r, "worst curve", worst.vertices());
    return r;
}

// --- circumscribed 12-gon ---------------------------------------------------

TwelveGon TwelveGon::circumscribe(const ConvexBody& b) {
    TwelveGon p;
    for (int k = 0; k < 12; ++k)
        p.offsets[static_cast<std::size_t>(k)] =
            b.support(unit_dir(k * kPi / 6 - kPi / 2));
    return p;
}

std::array<Vec2, 12> TwelveGon::corners() const {
    std::array<Vec2, 12> c;
    for (int k = 0; k < 12; ++k) {
        const int prev = (k + 11) % 12;
        const Vec2 n1 = unit_dir(prev * kPi / 6 - kPi / 2);
        const Vec2 n2 = unit_dir(k * kPi / 6 - kPi / 2);
        const double h1 = offsets[static_cast<std::size_t>(prev)];
        const double h2 = offsets[static_cast<std::size_t>(k)];
        const double det = cross(n1, n2);  // sin(pi/6) = 1/2 up to sign
        c[static_cast<std::size_t>(k)] = {(h1 * n2.y - h2 * n1.y) / det,
                                          (n1.x * h2 - n2.x * h1) / det};
    }
    return c;
}

std::array<double, 12> TwelveGon::edge_lengths() const {
    std::array<double, 12> len;
    const double c = std::cos(kPi / 6);
    const double s = std::sin(kPi / 6);
    for (int k = 0; k < 12; ++k) {
        const double hp = offsets[static_cast<std::size_t>((k + 11) % 12)];
        const double hn = offsets[static_cast<std::size_t>((k + 1) % 12)];
        len[static_cast<std::size_t>(k)] =
            (hp + hn - 2.0 * offsets[static_cast<std::size_t>(k)] * c) / s;
    }
    return len;
}

Vec2 TwelveGon::touchpoint(int edge, double lambda) const {
    const int k = ((edge % 12) + 12) % 12;
    const double lam = std::clamp(lambda, 0.0, 1.0);
    const double len =
        std::max(edge_lengths()[static_cast<std::size_t>(k)], 0.0);
    return corners()[static_cast<std::size_t>(k)] +
           lam * len * unit_dir(k * kPi / 6);
}

double TwelveGon::perimeter() const {
    double p = 0.0;
    for (double len : edge_lengths()) p += std::max(len, 0.0);
    return p;
}

// --- unfolded inscribed circuit ---------------------------------------------

UnfoldTrace unfold_circuit(const TwelveGon& p,
                           const std::array<double, 12>& lambdas) {
    const auto corners = p.corners();
    const auto lengths = p.edge_lengths();
    std::array<Vec2, 13> pts;
    for (int k = 0; k < 12; ++k) {
        const double len = std::max(lengths[static_cast<std::size_t>(k)], 0.0);
        pts[static_cast<std::size_t>(k)] =
            corners[static_cast<std::size_t>(k)] +
            std::clamp(lambdas[static_cast<std::size_t>(k)], 0.0, 1.0) * len *
                unit_dir(k * kPi / 6);
    }
    pts[12] = pts[0];

    UnfoldTrace trace;
    for (int k = 0; k < 12; ++k)
        trace.circuit_length += norm(pts[static_cast<std::size_t>(k + 1)] -
                                     pts[static_cast<std::size_t>(k)]);

    // Straighten: reflect the tail across each touched edge line in turn.
    std::array<double, 12> ang;
    for (int k = 0; k < 12; ++k)
        ang[static_cast<std::size_t>(k)] = k * kPi / 6;
    for (int k = 1; k < 12; ++k) {
        const Vec2 anchor = pts[static_cast<std::size_t>(k)];
        const Vec2 axis = unit_dir(ang[static_cast<std::size_t>(k)]);
        for (int j = k + 1; j <= 12; ++j)
            pts[static_cast<std::size_t>(j)] =
                reflect_point(pts[static_cast<std::size_t>(j)], anchor, axis);
        for (int j = k + 1; j < 12; ++j)
            ang[static_cast<std::size_t>(j)] =
                2.0 * ang[static_cast<std::size_t>(k)] -
                ang[static_cast<std::size_t>(j)];
    }
    trace.displacement = pts[12] - pts[0];
    // displacement = alpha*(1,0) + beta*unit_dir(pi/6)
    trace.oblique_part = 2.0 * trace.displacement.y;
    trace.horizontal_part =
        trace.displacement.x - trace.oblique_part * std::cos(kPi / 6);
    return trace;
}

LemmaReport unfold_bound(const TwelveGon& p,
                         const std::array<double, 12>& lambdas) {
    for (double lam : lambdas)
        if (!(lam >= 0.0 && lam <= 1.0))
            throw std::invalid_argument(
                "touchpoint parameter outside [0, 1]");
    LemmaReport r;
    r.lemma_id = "unfold-reflection-bound";
    const UnfoldTrace trace = unfold_circuit(p, lambdas);
    const double perim = p.perimeter();
    r.measured = trace.circuit_length;
    r.reference = perim * std::cos(kPi / 12);
    r.tolerance = 1e-9;
    r.direction = BoundKind::AtLeast;
    // The straightened displacement satisfies a + b = sum of raw edge
    // lengths for every touch configuration; the parts are compared against
    // the raw sum, not the clamped perimeter, so degenerate gons still
    // satisfy it exactly.
    const auto lens = p.edge_lengths();
    double raw_len_sum = 0.0;
    for (double len : lens) raw_len_sum += len;
    const double decomposition_residual = std::abs(
        trace.horizontal_part + trace.oblique_part - raw_len_sum);
    const double min_edge = *std::min_element(lens.begin(), lens.end());
    r.pass = bound_holds(r.measured, r.reference, r.tolerance, r.direction) &&
             decomposition_residual <= 1e-9 * std::max(1.0, perim) &&
             trace.circuit_length >= norm(trace.displacement) - 1e-12 &&
             min_edge >= -1e-9;
    r.note = "displacement parts " + num(trace.horizontal_part) + ", " +
             num(trace.oblique_part) + "; a + b residual " +
             num(decomposition_residual);
    std::vector<Vec2> circuit;
    for (int k = 0; k < 12; ++k)
        circuit.push_back(
            p.touchpoint(k, lambdas[static_cast<std::size_t>(k)]));
    add_witness(r, "circuit", std::move(circuit));
    return r;
}

LemmaReport unfold_sweep(std::uint64_t seed, long long budget) {
    LemmaReport r;
    r.lemma_id = "unfold-reflection-sweep";
    SampleConfig cfg;
    cfg.seed = seed;
    cfg.perimeter_target = 2.0;
    SubstreamRng rng(seed, 771);

    double min_margin = kInf;       // circuit - perim*cos(pi/12), wants >= 0
    double max_residual = 0.0;      // decomposition defect
    double max_inscribed_excess = -kInf;  // circuit - body perimeter at touches
    double equality_residual = kInf;
    long long failures = 0;
    std::array<double, 12> worst_lambdas{};
    TwelveGon worst_gon;

    for (long long i = 0; i < budget; ++i) {
        TwelveGon gon;
        ConvexBody body;
        bool have_body = false;
        if (i == 0) {
            gon.offsets.fill(0.45);  // regular 12-gon: the equality case
        } else {
            switch (i % 5) {
                case 0:
                    cfg.vertex_count = 3 + static_cast<int>(i % 40);
                    body = random_convex_curve(cfg,
                                               static_cast<std::uint64_t>(i));
                    break;
                case 1:
                    body = regular_gon(12 + static_cast<int>(i % 24),
                                       rng.uniform(0.2, 0.5),
                                       rng.uniform(0.0, kPi));
                    break;
                case 2:
                    cfg.vertex_count = 3 + static_cast<int>(i % 5);
                    body = random_convex_curve(cfg,
                                               static_cast<std::uint64_t>(i));
                    break;
                case 3:
                    body = random_segment(cfg, static_cast<std::uint64_t>(i));
                    break;
                default:
                    cfg.vertex_count = 24;
                    body = random_triangle(cfg, static_cast<std::uint64_t>(i));
                    break;
            }
            have_body = true;
            gon = TwelveGon::circumscribe(body);
        }

        std::array<double, 12> lambdas{};
        bool touch_config = false;
        if (i == 0 || i % 3 == 1) {
            lambdas.fill(0.5);
        } else if (have_body && i % 3 == 0) {
            // Put each touchpoint where the body attains the edge support.
            touch_config = true;
            const auto corners = gon.corners();
            const auto lengths = gon.edge_lengths();
            for (int k = 0; k < 12; ++k) {
                const Vec2 n = unit_dir(k * kPi / 6 - kPi / 2);
                Vec2 best = body.vertices().front();
                double best_dot = -kInf;
                for (Vec2 v : body.vertices()) {
                    const double d = dot(v, n);
                    if (d > best_dot) {
                        best_dot = d;
                        best = v;
                    }
                }
                const double len =
                    std::max(lengths[static_cast<std::size_t>(k)], 0.0);
                lambdas[static_cast<std::size_t>(k)] =
                    len > 1e-12
                        ? std::clamp(
                              dot(best - corners[static_cast<std::size_t>(k)],
                                  unit_dir(k * kPi / 6)) /
                                  len,
                              0.0, 1.0)
                        : 0.5;
            }
        } else {
            for (auto& lam : lambdas) lam = rng.uniform(0.0, 1.0);
        }

        const UnfoldTrace trace = unfold_circuit(gon, lambdas);
        const double perim = gon.perimeter();
        const double margin =
            trace.circuit_length - perim * std::cos(kPi / 12);
        const double residual = std::abs(trace.horizontal_part +
                                         trace.oblique_part - perim);
        if (margin < min_margin) {
            min_margin = margin;
            worst_gon = gon;
            worst_lambdas = lambdas;
        }
        max_residual = std::max(max_residual, residual);
        if (margin < -1e-9 || residual > 1e-9 * std::max(1.0, perim))
            ++failures;
        if (touch_config)
            max_inscribed_excess =
                std::max(max_inscribed_excess,
                         trace.circuit_length - body.perimeter());
        if (i == 0) equality_residual = std::abs(margin);
    }

    r.measured = min_margin;
    r.reference = 0.0;
    r.tolerance = 1e-9;
    r.direction = BoundKind::AtLeast;
    r.samples = budget;
    r.pass = failures == 0 && equality_residual <= 1e-12 &&
             max_inscribed_excess <= 1e-9;
    r.note = "min circuit margin; regular-midpoint residual " +
             num(equality_residual) + "; max decomposition residual " +
             num(max_residual) + "; max inscribed excess " +
             num(max_inscribed_excess);
    if (!r.pass) {
        std::vector<Vec2> circuit;
        for (int k = 0; k < 12; ++k)
            circuit.push_back(worst_gon.touchpoint(
                k, worst_lambdas[static_cast<std::size_t>(k)]));
        add_witness(r, "worst circuit", std::move(circuit));
    }
    return r;
}

// --- smallest inscribed triangle of the church window ------------------------

LemmaReport min_inscribed_triangle(std::uint64_t seed, int restarts,
                                   bool apex_constrained) {
    LemmaReport r;
    r.lemma_id = apex_constrained ? "window-min-triangle-apex"
                                  : "window-min-triangle";

    const auto left_arc = [](double y) { return Vec2{(y * y - 1) / 2, y}; };
    const auto right_arc = [](double y) { return Vec2{(1 - y * y) / 2, y}; };
    const auto perim3 = [](Vec2 x, Vec2 y, Vec2 z) {
        return norm(x - y) + norm(y - z) + norm(z - x);
    };
    const auto box = [](double v, double lo, double hi, double& penalty) {
        const double c = std::clamp(v, lo, hi);
        penalty += 10.0 * std::abs(v - c);
        return c;
    };

    const auto objective = [&](const std::vector<double>& v) {
        double penalty = 0.0;
        Vec2 x, y, z;
        if (apex_constrained) {
            x = {0.0, 1.0};
            y = {box(v[0], -0.45, 0.45, penalty), 0.0};
            z = right_arc(box(v[1], 0.0, 1.0, penalty));
        } else {
            x = left_arc(box(v[0], 0.0, 1.0, penalty));
            y = {box(v[1], -0.45, 0.45, penalty), 0.0};
            z = right_arc(box(v[2], 0.0, 1.0, penalty));
        }
        return perim3(x, y, z) + penalty;
    };

    SubstreamRng rng(seed, 41);
    double best = kInf;
    std::vector<double> best_x;
    double spread = 0.0;
    std::vector<std::pair<double, std::vector<double>>> runs;
    for (int run = 0; run < restarts; ++run) {
        std::vector<double> x0;
        if (apex_constrained) {
            x0 = {rng.uniform(-0.25, 0.25), rng.uniform(0.15, 0.95)};
        } else {
            x0 = {rng.uniform(0.15, 0.95), rng.uniform(-0.25, 0.25),
                  rng.uniform(0.15, 0.95)};
        }
        const NelderMeadResult res =
            nelder_mead(objective, x0, 0.07, 4000, 1e-14);
        runs.emplace_back(res.value, res.x);
        if (res.value < best) {
            best = res.value;
            best_x = res.x;
        }
    }
    for (const auto& [value, x] : runs)
        spread = std::max(spread, std::abs(value - best));

    // The flat valley at the bottom (both arcs at height 0) also reaches the
    // minimum; prefer an interior representative for the shape checks.
    std::vector<double> rep = best_x;
    if (!apex_constrained) {
        for (const auto& [value, x] : runs)
            if (value <= best + 1e-7 && x[0] >= 0.05 && x[2] >= 0.05) {
                rep = x;
                break;
            }
    }

    r.measured = best;
    r.reference = 2.0;
    r.tolerance = 1e-6;
    r.direction = BoundKind::TwoSided;
    r.samples = restarts;

    bool shape_ok = true;
    Vec2 wx, wy, wz;
    if (apex_constrained) {
        wx = {0.0, 1.0};
        wy = {rep[0], 0.0};
        wz = right_arc(std::clamp(rep[1], 0.0, 1.0));
        const double leg_down = norm(wx - wy);
        const double leg_back = norm(wy - wz) + norm(wz - wx);
        shape_ok = leg_down >= 1.0 - 1e-6 && leg_back >= 1.0 - 1e-6;
        r.note = "legs " + num(leg_down) + " down, " + num(leg_back) +
                 " back; restart spread " + num(spread);
    } else {
        wx = left_arc(std::clamp(rep[0], 0.0, 1.0));
        wy = {rep[1], 0.0};
        wz = right_arc(std::clamp(rep[2], 0.0, 1.0));
        shape_ok = std::abs(wx.y - wz.y) <= 1e-4 && std::abs(wy.x) <= 1e-4 &&
                   std::abs(norm(wx - wy) - norm(wz - wy)) <= 1e-4;
        r.note = "minimizer heights " + num(wx.y) + ", " + num(wz.y) +
                 "; floor contact x = " + num(wy.x) + "; restart spread " +
                 num(spread);
    }
    r.pass = bound_holds(r.measured, r.reference, r.tolerance, r.direction) &&
             shape_ok && spread <= 1e-6;
    add_witness(r, "triangle", {wx, wy, wz});
    return r;
}

// --- hull perimeter under translations --------------------------------------

LemmaReport hull_perimeter_convexity(const std::vector<ConvexBody>& figures,
                                     int trials, std::uint64_t seed) {
    if (figures.empty())
        throw std::invalid_argument("no figures given");
    std::vector<ConvexBody> centered;
    centered.reserve(figures.size());
    for (const ConvexBody& f : figures) {
        ConvexBody c = f.translated(-f.centroid());
        if (containment_violation(c, c.rotated(kPi)) > 1e-9)
            throw std::invalid_argument("figure is not centrally symmetric");
        centered.push_back(std::move(c));
    }

    const auto hull_perimeter = [&](const std::vector<Vec2>& offsets) {
        std::vector<Vec2> pts;
        for (std::size_t i = 0; i < centered.size(); ++i)
            for (Vec2 v : centered[i].vertices())
                pts.push_back(v + offsets[i]);
        return ConvexBody(std::move(pts)).perimeter();
    };

    const std::vector<Vec2> zeros(centered.size(), Vec2{});
    const double base = hull_perimeter(zeros);

    SubstreamRng rng(seed, 613);
    const auto random_offsets = [&] {
        std::vector<Vec2> off(centered.size());
        for (Vec2& o : off)
            o = rng.uniform(0.0, 0.75) * unit_dir(rng.uniform(0.0, 2 * kPi));
        return off;
    };

    double min_seen = kInf;
    double max_midpoint_violation = -kInf;
    std::vector<Vec2> worst_offsets = zeros;
    for (int t = 0; t < trials; ++t) {
        const std::vector<Vec2> s = random_offsets();
        const double ps = hull_perimeter(s);
        if (ps < min_seen) {
            min_seen = ps;
            worst_offsets = s;
        }
        if (t % 8 == 0) {
            const std::vector<Vec2> q = random_offsets();
            std::vector<Vec2> mid(centered.size());
            for (std::size_t i = 0; i < mid.size(); ++i)
                mid[i] = 0.5 * (s[i] + q[i]);
            const double violation =
                hull_perimeter(mid) - 0.5 * (ps + hull_perimeter(q));
            max_midpoint_violation =
                std::max(max_midpoint_violation, violation);
        }
    }

    LemmaReport r;
    r.lemma_id = "hull-centering";
    r.measured = min_seen;
    r.reference = base;
    r.tolerance = 1e-9;
    r.direction = BoundKind::AtLeast;
    r.samples = trials;
    r.pass = bound_holds(r.measured, r.reference, r.tolerance, r.direction) &&
             max_midpoint_violation <= 1e-9;
    r.note = "concentric perimeter " + num(base) +
             "; max midpoint convexity violation " +
             num(max_midpoint_violation);
    if (!r.pass) {
        for (std::size_t i = 0; i < centered.size(); ++i)
            add_witness(r, "figure " + std::to_string(i),
                        centered[i].translated(worst_offsets[i]).vertices());
    }
    return r;
}

LemmaReport hull_centering_sweep(std::uint64_t seed, int sets, int trials) {
    LemmaReport r;
    r.lemma_id = "hull-centering-sweep";
    SubstreamRng rng(seed, 907);
    SampleConfig cfg;
    cfg.seed = seed;
    cfg.perimeter_target = 2.0;

    double min_margin = kInf;
    double max_known_base_error = 0.0;
    bool all_pass = true;
    for (int s = 0; s < sets; ++s) {
        std::vector<ConvexBody> figures;
        const double phi = rng.uniform(0.0, kPi);
        switch (s % 5) {
            case 0:
                figures = {segment_body(phi, 1.0),
                           segment_body(phi + kPi / 2, 1.0)};
                break;
            case 1:
                figures = {segment_body(phi, 1.0),
                           segment_body(phi + kPi / 3, 1.0),
                           segment_body(phi + 2 * kPi / 3, 1.0)};
                break;
            case 2: {
                cfg.vertex_count = 16 + s % 16;
                figures = {
                    minkowski_symmetrize(random_convex_curve(
                        cfg, static_cast<std::uint64_t>(2 * s))),
                    minkowski_symmetrize(random_convex_curve(
                        cfg, static_cast<std::uint64_t>(2 * s + 1)))};
                break;
            }
            case 3:
                figures = {
                    regular_gon(8 + 2 * (s % 8), rng.uniform(0.15, 0.4), phi),
                    segment_body(rng.uniform(0.0, kPi),
                                 rng.uniform(0.5, 1.0))};
                break;
            default: {
                const double a = rng.uniform(0.1, 0.4);
                const double b = rng.uniform(0.1, 0.4);
                ConvexBody rect(
                    {Vec2{a, b}, Vec2{-a, b}, Vec2{-a, -b}, Vec2{a, -b}});
                cfg.vertex_count = 24;
                figures = {rect.rotated(phi),
                           minkowski_symmetrize(random_convex_curve(
                               cfg, static_cast<std::uint64_t>(3 * s)))};
                break;
            }
        }
        const LemmaReport sub = hull_perimeter_convexity(
            figures, trials, seed + static_cast<std::uint64_t>(s) * 1009 + 1);
        min_margin = std::min(min_margin, sub.measured - sub.reference);
        all_pass = all_pass && sub.pass;
        if (s % 5 == 0)
            max_known_base_error =
                std::max(max_known_base_error,
                         std::abs(sub.reference - 2.0 * std::sqrt(2.0)));
        if (s % 5 == 1)
            max_known_base_error = std::max(
                max_known_base_error, std::abs(sub.reference - 3.0));
    }

    r.measured = min_margin;
    r.reference = 0.0;
    r.tolerance = 1e-9;
    r.direction = BoundKind::AtLeast;
    r.samples = static_cast<long long>(sets) * trials;
    r.pass = all_pass &&
             bound_holds(r.measured, r.reference, r.tolerance, r.direction) &&
             max_known_base_error <= 1e-12;
    r.note = "min translation margin over " + std::to_string(sets) +
             " families; closed-form base residual " +
             num(max_known_base_error);
    return r;
}

// --- segment stars and the resulting area floor ------------------------------

LemmaReport regular_lower_bounds() {
    LemmaReport r;
    r.lemma_id = "segment-star-areas";

    const auto star = [](std::initializer_list<double> slopes) {
        std::vector<Vec2> pts;
        for (double a : slopes) {
            pts.push_back(0.5 * unit_dir(a));
            pts.push_back(-0.5 * unit_dir(a));
        }
        return ConvexBody(std::move(pts));
    };

    const ConvexBody phi = star({kPi / 4, 3 * kPi / 4, kPi / 3, 5 * kPi / 6});
    const double area_horizontal =
        star({kPi / 4, 3 * kPi / 4, 0.0, kPi / 2}).area();
    const double area_tilted =
        star({kPi / 4, 3 * kPi / 4, 2 * kPi / 3, kPi / 6}).area();

    r.measured = phi.area();
    r.reference = std::sqrt(6.0) / 4;
    r.tolerance = 1e-9;
    r.direction = BoundKind::TwoSided;

    const bool variants_ok =
        std::abs(area_horizontal - std::sqrt(2.0) / 2) <= 1e-12 &&
        std::abs(area_tilted - std::sqrt(6.0) / 4) <= 1e-12;
    const bool ordering_ok = std::sqrt(6.0) / 4 > 0.6 &&
                             0.6 > kGamma3Area &&
                             kGamma3Area > kGammaTArea &&
                             kDelta1Area > kGamma3Area;
    r.pass = bound_holds(r.measured, r.reference, r.tolerance, r.direction) &&
             variants_ok && ordering_ok;
    r.note = "variant areas " + num(area_horizontal) + " (axis pair), " +
             num(area_tilted) + " (tilted pair); floor chain sqrt(6)/4 > 0.6 > " +
             num(kGamma3Area) + " > " + num(kGammaTArea);
    add_witness(r, "hull", phi.vertices());
    return r;
}

// --- convexity of the shaved corner trajectory -------------------------------

LemmaReport gt_convexity(int grid) {
    LemmaReport r;
    r.lemma_id = "roof-convexity";
    const double t0 = -4.0 / 9;
    const double t1 = -1.0 / 3;

    double max_numerator = -kInf;
    double min_denominator = kInf;
    double worst_t = t0;
    for (int i = 0; i < grid; ++i) {
        const double t = t0 + (t1 - t0) * i / (grid - 1);
        const double numerator = gamma_t_slope_derivative_numerator(t);
        const double denominator = 3.0 / std::sqrt(6 * t + 3) -
                                   1.0 / std::sqrt(-2 * t - 5.0 / 9) + 2.0;
        if (numerator > max_numerator) {
            max_numerator = numerator;
            worst_t = t;
        }
        min_denominator = std::min(min_denominator, denominator);
    }

    const double slope_start = gamma_t_slope(t0);
    const double slope_end = gamma_t_slope(t1);

    r.measured = max_numerator;
    r.reference = 0.0;
    r.tolerance = 1e-12;
    r.direction = BoundKind::AtMost;
    r.samples = grid;
    r.pass = bound_holds(r.measured, r.reference, r.tolerance, r.direction) &&
             std::abs(slope_start) <= 1e-9 &&
             std::abs(slope_end + std::sqrt(3.0)) <= 1e-9 &&
             min_denominator >= 2.0 - 1e-9;
    r.note = "end slopes " + num(slope_start) + " and " + num(slope_end) +
             "; min slope denominator " + num(min_denominator);
    add_witness(r, "flattest point", {gamma_t_point(worst_t)});
    return r;
}

// --- area of the shaved window ----------------------------------------------

LemmaReport gt_area(int samples_per_arc) {
    LemmaReport r;
    r.lemma_id = "roof-area";
    const CoveringShape shape = build_gamma_t(samples_per_arc);
    const double inner = shape.inner.area();
    const double outer = shape.outer.area();

    // Area under one trajectory arc by Simpson in the parameter.
    const auto height = [](double t) {
        return (std::sqrt(-6 * t - 5.0 / 3) + std::sqrt(2 * t + 1)) / 2;
    };
    const auto x_rate = [](double t) {
        return (3.0 / std::sqrt(6 * t + 3) -
                1.0 / std::sqrt(-2 * t - 5.0 / 9) + 2.0) /
               2;
    };
    const double t0 = -4.0 / 9;
    const double t1 = -1.0 / 3;
    int n = std::max(samples_per_arc, 16);
    if (n % 2 == 1) ++n;
    const double h = (t1 - t0) / n;
    double integral = height(t0) * x_rate(t0) + height(t1) * x_rate(t1);
    for (int i = 1; i < n; ++i) {
        const double t = t0 + h * i;
        integral += (i % 2 == 1 ? 4.0 : 2.0) * height(t) * x_rate(t);
    }
    integral *= h / 3;

    const double corner_x = 1.0 / std::sqrt(3.0) - 4.0 / 9;
    const double corner_area =
        (2.0 / 3) * (5.0 / 18 - corner_x) +
        (std::pow(4.0 / 9, 1.5) - std::pow(1.0 / 3, 1.5)) / 3 - integral;

    r.measured = kGamma3Area - 2.0 * corner_area;
    r.reference = kGammaTArea;
    r.tolerance = 1e-10;
    r.direction = BoundKind::TwoSided;
    r.samples = samples_per_arc;
    r.pass = bound_holds(r.measured, r.reference, r.tolerance, r.direction) &&
             inner <= r.reference + 1e-12 && r.reference <= outer + 1e-12 &&
             outer < 0.5634 && outer - inner <= 1e-5;
    r.note = "polygon bracket [" + num(inner) + ", " + num(outer) +
             "], width " + num(outer - inner) + "; shaved area " +
             num(2.0 * corner_area) + " vs closed form " +
             num(kGammaTShavedArea);
    return r;
}

// --- isosceles triangle rotation sweeps --------------------------------------

namespace {

LemmaReport iso_rotate_floor_contact(int base_grid, int angle_grid) {
    LemmaReport r;
    r.lemma_id = "iso-rotate-floor-contact";
    const CoveringShape& gt = gamma_t_shape();

    double worst = kInf;
    std::array<Vec2, 3> worst_triangle{};
    for (int ib = 0; ib < base_grid; ++ib) {
        const double base =
            2.0 / 3 + (0.999 - 2.0 / 3) * ib / (base_grid - 1);
        const double apex_h = std::sqrt(1.0 - base);
        const double final_angle = std::atan2(2.0 * apex_h, base);
        for (int ia = 0; ia < angle_grid; ++ia) {
            const double theta = final_angle * ia / (angle_grid - 1);
            const double c = std::cos(theta);
            const double s = std::sin(theta);
            const Vec2 y_rot{base / 2 * c + apex_h * s,
                             apex_h * c - base / 2 * s};
            const Vec2 z_rot{-base / 2 * c + apex_h * s,
                             apex_h * c + base / 2 * s};
            const double tx = (1.0 - y_rot.y * y_rot.y) / 2 - y_rot.x;
            const Vec2 x{tx, 0.0};
            const Vec2 y = y_rot + Vec2{tx, 0.0};
            const Vec2 z = z_rot + Vec2{tx, 0.0};
            double clearance = std::min(
                {gt.clearance(x), gt.clearance(y), gt.clearance(z)});
            // X must stay on the left half of the floor.
            clearance = std::min({clearance, tx + 0.5, -tx});
            if (clearance < worst) {
                worst = clearance;
                worst_triangle = {x, y, z};
            }
        }
    }

    r.measured = worst;
    r.reference = 0.0;
    r.tolerance = 1e-9;
    r.direction = BoundKind::AtLeast;
    r.samples = static_cast<long long>(base_grid) * angle_grid;
    r.pass = bound_holds(r.measured, r.reference, r.tolerance, r.direction);
    r.note = "min clearance while rotating onto the floor";
    add_witness(r, "tightest triangle",
                {worst_triangle[0], worst_triangle[1], worst_triangle[2]});
    return r;
}

LemmaReport iso_apex_line_crossing(int base_grid, int angle_grid) {
    LemmaReport r;
    r.lemma_id = "iso-apex-line-crossing";

    const double arc_top = std::sqrt(3.0) / 3;
    double worst_f = kInf;
    long long misses = 0;
    double anchor_error = kInf;
    std::array<Vec2, 3> worst_triangle{};
    for (int ia = 1; ia <= angle_grid; ++ia) {
        const double theta = kPi / 3 * ia / angle_grid;
        const double st = std::sin(theta);
        const double ct = std::cos(theta);
        const double y_lo = 2.0 * st / 3;
        const double y_hi = std::min(arc_top, st);
        for (int iy = 0; iy < base_grid; ++iy) {
            const double y = y_lo + (y_hi - y_lo) * iy / (base_grid - 1);
            const double base_len = y / st;
            const Vec2 z{(1.0 - y * y) / 2, y};
            const Vec2 yv = z - base_len * unit_dir(theta);
            if (yv.x < -0.5 - 1e-9 || yv.x > 1e-9) continue;
            const double apex_h = std::sqrt(std::max(0.0, 1.0 - base_len));
            const Vec2 x =
                0.5 * (yv + z) + apex_h * Vec2{-st, ct};

            const double f = (arc_top - y) * ct +
                             (5.0 - 3.0 * y * y) / 6 * st - apex_h;
            if (f < worst_f) {
                worst_f = f;
                worst_triangle = {x, yv, z};
            }

            // Oracle: the line through X parallel to YZ hits the floor in
            // [-1/2, 0] or crosses the left parabola below B.
            bool hit = false;
            if (st > 1e-12) {
                const double floor_x = x.x - x.y * ct / st;
                hit = floor_x >= -0.5 - 1e-7 && floor_x <= 1e-7;
            }
            if (!hit) {
                const auto line_gap = [&](double u) {
                    return st * ((u * u - 1) / 2 - x.x) - ct * (u - x.y);
                };
                double prev = line_gap(0.0);
                for (int j = 1; j <= 64 && !hit; ++j) {
                    const double u = arc_top * j / 64;
                    const double cur = line_gap(u);
                    if (prev == 0.0 || cur == 0.0 || (prev < 0) != (cur < 0) ||
                        std::abs(cur) <= 1e-7)
                        hit = true;
                    prev = cur;
                }
            }
            if (!hit) ++misses;
        }
    }

    {
        const double theta = kPi / 6;
        const double y = 2.0 * std::sin(theta) / 3;
        const double f = (arc_top - y) * std::cos(theta) +
                         (5.0 - 3.0 * y * y) / 6 * std::sin(theta) -
                         std::sqrt(1.0 - y / std::sin(theta));
        anchor_error = std::abs(f - (8.0 / 9 - std::sqrt(3.0) / 2));
    }

    r.measured = worst_f;
    r.reference = 0.0;
    r.tolerance = 1e-9;
    r.direction = BoundKind::AtLeast;
    r.samples = static_cast<long long>(base_grid) * angle_grid;
    r.pass = bound_holds(r.measured, r.reference, r.tolerance, r.direction) &&
             misses == 0 && anchor_error <= 1e-12;
    r.note = "min line margin; " + std::to_string(misses) +
             " crossing misses; midpoint-angle residual " + num(anchor_error);
    add_witness(r, "tightest triangle",
                {worst_triangle[0], worst_triangle[1], worst_triangle[2]});
    return r;
}

LemmaReport iso_apex_containment(int base_grid, int angle_grid) {
    LemmaReport r;
    r.lemma_id = "iso-apex-containment";
    const CoveringShape& gt = gamma_t_shape();

    const double arc_top = std::sqrt(3.0) / 3;
    double worst = kInf;
    long long monotonicity_failures = 0;
    long long apex_cap_failures = 0;
    long long skipped = 0;
    std::array<Vec2, 3> worst_triangle{};
    for (int ia = 0; ia < angle_grid; ++ia) {
        const double theta = kPi / 3 * ia / (angle_grid - 1);
        const double apex_cap = 2.0 / 3 * std::sin(theta + kPi / 3);
        double prev_apex_y = -kInf;
        for (int ip = 0; ip < base_grid; ++ip) {
            const double phi = kPi / 3 * ip / (base_grid - 1);
            const double base_len = 2.0 * std::cos(phi) / (1.0 + std::cos(phi));
            const double leg_len = 1.0 / (1.0 + std::cos(phi));
            const double zy = base_len * std::sin(theta);
            if (zy > arc_top + 1e-12) {
                ++skipped;
                continue;
            }
            const Vec2 z{(1.0 - zy * zy) / 2, zy};
            const Vec2 yv = z - base_len * unit_dir(theta);
            if (yv.x < -0.5 - 1e-9 || yv.x > 1e-9) {
                ++skipped;
                continue;
            }
            const Vec2 x = yv + leg_len * unit_dir(theta + phi);
            const double clearance = std::min(
                {gt.clearance(x), gt.clearance(yv), gt.clearance(z)});
            if (clearance < worst) {
                worst = clearance;
                worst_triangle = {x, yv, z};
            }
            if (x.y < prev_apex_y - 1e-12) ++monotonicity_failures;
            prev_apex_y = x.y;
            if (x.y > apex_cap + 1e-9) ++apex_cap_failures;
        }
    }

    r.measured = worst;
    r.reference = 0.0;
    r.tolerance = 1e-9;
    r.direction = BoundKind::AtLeast;
    r.samples = static_cast<long long>(base_grid) * angle_grid;
    r.pass = bound_holds(r.measured, r.reference, r.tolerance, r.direction) &&
             monotonicity_failures == 0 && apex_cap_failures == 0;
    r.note = "min clearance; " + std::to_string(monotonicity_failures) +
             " apex monotonicity failures, " +
             std::to_string(apex_cap_failures) + " apex cap failures, " +
             std::to_string(skipped) + " nodes skipped";
    add_witness(r, "tightest triangle",
                {worst_triangle[0], worst_triangle[1], worst_triangle[2]});
    return r;
}

}  // namespace

LemmaReport iso_rotation_sweep(IsoSweepKind kind, int base_grid,
                               int angle_grid) {
    switch (kind) {
        case IsoSweepKind::Rotate1:
            return iso_rotate_floor_contact(base_grid, angle_grid);
        case IsoSweepKind::LxLine:
            return iso_apex_line_crossing(base_grid, angle_grid);
        case IsoSweepKind::Rotate2:
            return iso_apex_containment(base_grid, angle_grid);
    }
    throw std::invalid_argument("unknown sweep kind");
}

// --- worm closure ------------------------------------------------------------

namespace {

struct WormClosure {
    ConvexBody hull;
    double hull_perimeter = 0.0;
    double symmetry_violation = 0.0;
    bool placed = false;
    double violation = kInf;
    Vec2 shift;
};

WormClosure close_and_place(const std::vector<Vec2>& worm) {
    if (worm.size() < 2)
        throw std::invalid_argument("worm needs at least two points");
    WormClosure out;
    const Vec2 mid = 0.5 * (worm.front() + worm.back());
    std::vector<Vec2> pts = worm;
    for (Vec2 v : worm) pts.push_back(2.0 * mid - v);
    out.hull = ConvexBody(std::move(pts));
    out.hull_perimeter = out.hull.perimeter();
    out.symmetry_violation = containment_violation(
        out.hull, out.hull.transformed(kPi, 2.0 * mid));

    const PlacementResult res = place_g2(out.hull);
    out.placed = res.success && res.placement.has_value();
    if (out.placed) {
        out.shift = res.placement->translation;
        if (res.placement->rotation_index != 0) out.shift -= 2.0 * mid;
        out.violation = containment_violation(
            delta1_shape().outer, out.hull.translated(out.shift));
    }
    return out;
}

}  // namespace

LemmaReport worm_closure(const std::vector<Vec2>& worm) {
    LemmaReport r;
    r.lemma_id = "worm-closure";
    const WormClosure c = close_and_place(worm);
    r.measured = c.violation;
    r.reference = 0.0;
    r.tolerance = kPlacementTol;
    r.direction = BoundKind::AtMost;
    r.pass = c.placed &&
             bound_holds(r.measured, r.reference, r.tolerance, r.direction) &&
             c.hull_perimeter <= 2.0 + 1e-9 && c.symmetry_violation <= 1e-9;
    r.note = "hull perimeter " + num(c.hull_perimeter) +
             "; symmetry violation " + num(c.symmetry_violation) +
             "; translation (" + num(c.shift.x) + ", " + num(c.shift.y) + ")";
    add_witness(r, "worm", worm);
    add_witness(r, "closed hull", c.hull.vertices());
    return r;
}

LemmaReport worm_sweep(std::uint64_t seed, long long budget) {
    LemmaReport r;
    r.lemma_id = "worm-closure-sweep";
    SampleConfig cfg;
    cfg.seed = seed;
    cfg.perimeter_target = 2.0;  // closures of length-1 arcs

    double max_violation = -kInf;
    double max_perimeter = 0.0;
    long long failures = 0;
    std::vector<Vec2> worst;
    for (long long i = 0; i < budget; ++i) {
        std::vector<Vec2> worm;
        if (i == 0) {
            worm = {{0.0, 0.0}, {0.5, 0.0}, {0.5, 0.5}};
        } else if (i == 1) {
            worm = {{-0.5, 0.0}, {0.5, 0.0}};
        } else {
            cfg.vertex_count = 1 + static_cast<int>(i % 12);
            worm = random_worm(cfg, static_cast<std::uint64_t>(i));
        }
        const WormClosure c = close_and_place(worm);
        const bool ok = c.placed && c.violation <= kPlacementTol &&
                        c.hull_perimeter <= 2.0 + 1e-9 &&
                        c.symmetry_violation <= 1e-9;
        if (!ok) ++failures;
        max_perimeter = std::max(max_perimeter, c.hull_perimeter);
        const double v = c.placed ? c.violation : kInf;
        if (v > max_violation) {
            max_violation = v;
            worst = worm;
        }
    }

    r.measured = max_violation;
    r.reference = 0.0;
    r.tolerance = kPlacementTol;
    r.direction = BoundKind::AtMost;
    r.samples = budget;
    r.pass = failures == 0;
    r.note = "max containment violation after pure translation; " +
             std::to_string(failures) + " failures; max hull perimeter " +
             num(max_perimeter);
    if (!r.pass) add_witness(r, "worst worm", worst);
    return r;
}

LemmaReport two_leg_sweep(int contact_grid) {
    LemmaReport r;
    r.lemma_id = "two-leg-reflection-bound";
    const ConvexBody& tri = delta1_shape().outer;
    const auto& v = tri.vertices();
    Vec2 apex = v[0], bl = v[0], br = v[0];
    for (Vec2 p : v) {
        if (p.y > apex.y) apex = p;
        if (p.x < bl.x) bl = p;
        if (p.x > br.x) br = p;
    }
    const Vec2 mirror_dir = (1.0 / norm(apex - br)) * (apex - br);

    double min_length = kInf;
    double max_identity_residual = 0.0;
    double max_image_height_error = 0.0;
    std::array<Vec2, 3> worst_path{};
    for (int is = 0; is < contact_grid; ++is) {
        const double s = (is + 0.5) / contact_grid;
        const Vec2 a = bl + s * (br - bl);
        for (int iu = 0; iu < contact_grid; ++iu) {
            const double u = (iu + 0.5) / contact_grid;
            const Vec2 b = br + u * (apex - br);
            for (int iw = 0; iw < contact_grid; ++iw) {
                const double w = (iw + 0.5) / contact_grid;
                const Vec2 c = apex + w * (bl - apex);
                const Vec2 c_image = reflect_point(c, br, mirror_dir);
                const double direct = norm(a - b) + norm(b - c);
                const double reflected = norm(a - b) + norm(b - c_image);
                max_identity_residual = std::max(max_identity_residual,
                                                 std::abs(direct - reflected));
                max_image_height_error =
                    std::max(max_image_height_error,
                             std::abs(c_image.y - (bl.y + 1.0)));
                if (direct < min_length) {
                    min_length = direct;
                    worst_path = {a, b, c};
                }
            }
        }
    }

    r.measured = min_length;
    r.reference = 1.0;
    r.tolerance = 1e-12;
    r.direction = BoundKind::AtLeast;
    r.samples = static_cast<long long>(contact_grid) * contact_grid *
                contact_grid;
    r.pass = bound_holds(r.measured, r.reference, r.tolerance, r.direction) &&
             max_identity_residual <= 1e-12 &&
             max_image_height_error <= 1e-9;
    r.note = "shortest two-leg path over side contacts; reflection residual " +
             num(max_identity_residual);
    add_witness(r, "shortest path",
                {worst_path[0], worst_path[1], worst_path[2]});
    return r;
}

// --- symmetrization of DeltaBeta ---------------------------------------------

LemmaReport hexagon_symmetrization() {
    LemmaReport r;
    r.lemma_id = "symmetrization-hexagon";
    const ConvexBody hex = minkowski_symmetrize(delta_beta_shape().outer);
    const auto& v = hex.vertices();

    double min_edge = kInf, max_edge = -kInf;
    double max_angle_error = kInf;
    if (v.size() == 6) {
        max_angle_error = 0.0;
        for (std::size_t i = 0; i < 6; ++i) {
            const Vec2 e0 = v[(i + 1) % 6] - v[i];
            const Vec2 e1 = v[(i + 2) % 6] - v[(i + 1) % 6];
            min_edge = std::min(min_edge, norm(e0));
            max_edge = std::max(max_edge, norm(e0));
            const double turn = std::atan2(cross(e0, e1), dot(e0, e1));
            max_angle_error =
                std::max(max_angle_error, std::abs(turn - kPi / 3));
        }
    }

    r.measured = v.size() == 6 ? max_edge - min_edge : kInf;
    r.reference = 0.0;
    r.tolerance = 1e-9;
    r.direction = BoundKind::AtMost;
    const double expected_edge = kDeltaBetaSide / 2;
    r.pass = v.size() == 6 &&
             bound_holds(r.measured, r.reference, r.tolerance, r.direction) &&
             max_angle_error <= 1e-9 &&
             std::abs(min_edge - expected_edge) <= 1e-9;
    r.note = "vertices " + std::to_string(v.size()) + "; edge length " +
             num(min_edge) + " vs half side " + num(expected_edge) +
             "; max turning error " + num(max_angle_error);
    add_witness(r, "hexagon", v);
    return r;
}

// --- hull of triangle plus translating disk ----------------------------------

LemmaReport disk_triangle_hull_min() {
    LemmaReport r;
    r.lemma_id = "disk-triangle-hull-min";
    const ConvexBody tri = build_right_isosceles().outer;
    const ConvexBody disk = regular_gon(512, 1.0 / kPi);

    const auto hull_area = [&](Vec2 t) {
        std::vector<Vec2> pts = tri.vertices();
        for (Vec2 v : disk.vertices()) pts.push_back(v + t);
        return ConvexBody(std::move(pts)).area();
    };
    const auto objective = [&](const std::vector<double>& v) {
        return hull_area({v[0], v[1]});
    };

    const Vec2 center = tri.centroid();
    const std::array<Vec2, 9> starts = {
        Vec2{0.0, 0.0},   Vec2{0.35, 0.0},   Vec2{-0.35, 0.0},
        Vec2{0.0, 0.35},  Vec2{0.0, -0.35},  Vec2{0.25, 0.25},
        Vec2{-0.25, 0.25}, Vec2{0.25, -0.25}, Vec2{-0.25, -0.25}};
    double best = kInf;
    Vec2 best_t{};
    for (Vec2 offset : starts) {
        const Vec2 s = center + offset;
        const NelderMeadResult res =
            nelder_mead(objective, {s.x, s.y}, 0.1, 2000, 1e-13);
        if (res.value < best) {
            best = res.value;
            best_t = {res.x[0], res.x[1]};
        }
    }

    r.measured = best;
    r.reference = 0.543;
    r.tolerance = 1e-3;
    r.direction = BoundKind::AtLeast;
    r.samples = static_cast<long long>(starts.size());
    r.pass = bound_holds(r.measured, r.reference, r.tolerance, r.direction) &&
             best >= tri.area() - 1e-12;
    r.note = "min hull area at disk center (" + num(best_t.x) + ", " +
             num(best_t.y) + "); triangle alone " + num(tri.area());
    add_witness(r, "triangle", tri.vertices());
    return r;
}

// --- brimful figures ---------------------------------------------------------

namespace {

std::array<double, 4> rotation_scales(const ConvexBody& curve) {
    const ConvexBody& tri = delta_beta_shape().outer;
    std::array<double, 4> a{};
    for (int i = 0; i < 4; ++i)
        a[static_cast<std::size_t>(i)] =
            min_homothet(tri.rotated(i * kPi / 2), curve).scale;
    return a;
}

std::string scales_note(const std::array<double, 4>& a) {
    return "scales " + num(a[0]) + ", " + num(a[1]) + ", " + num(a[2]) + ", " +
           num(a[3]);
}

}  // namespace

std::vector<LemmaReport> brimful_gallery() {
    std::vector<LemmaReport> out;

    {
        LemmaReport r;
        r.lemma_id = "brimful-cross";
        const ConvexBody cross = orthogonal_cross_hull();
        const auto a = rotation_scales(cross);
        r.measured = *std::min_element(a.begin(), a.end());
        r.reference = 1.0;
        r.tolerance = 1e-4;
        r.direction = BoundKind::TwoSided;
        const bool all_full =
            *std::min_element(a.begin(), a.end()) >= 1.0 - 1e-4;
        r.pass =
            bound_holds(r.measured, r.reference, r.tolerance, r.direction) &&
            all_full && cross.perimeter() >= 2.0 - 1e-12;
        r.note = scales_note(a) + "; hull perimeter " +
                 num(cross.perimeter()) +
                 " (the two generating unit segments measure 2)";
        add_witness(r, "cross hull", cross.vertices());
        out.push_back(std::move(r));
    }

    for (const double slope : {kPi / 12, kPi / 4}) {
        LemmaReport r;
        r.lemma_id =
            slope == kPi / 12 ? "brimful-segment-15" : "brimful-segment-45";
        const ConvexBody seg = segment_body(slope, 1.0);
        const auto a = rotation_scales(seg);
        r.measured = *std::min_element(a.begin(), a.end());
        r.reference = 1.0;
        r.tolerance = 1e-9;
        r.direction = BoundKind::TwoSided;
        const double max_scale = *std::max_element(a.begin(), a.end());
        r.pass =
            bound_holds(r.measured, r.reference, r.tolerance, r.direction) &&
            std::abs(max_scale - 1.0) <= 1e-9 &&
            std::abs(seg.perimeter() - 2.0) <= 1e-12;
        r.note = scales_note(a) + "; all four rotations are tight";
        add_witness(r, "segment", seg.vertices());
        out.push_back(std::move(r));
    }

    {
        LemmaReport r;
        r.lemma_id = "brimful-control-disk";
        const ConvexBody disk = regular_gon(720, 1.0 / kPi);
        const auto a = rotation_scales(disk);
        r.measured = *std::min_element(a.begin(), a.end());
        r.reference = 1.0;
        r.tolerance = -1e-3;  // must fall strictly short of a full fit
        r.direction = BoundKind::AtMost;
        r.pass = bound_holds(r.measured, r.reference, r.tolerance, r.direction);
        r.note = scales_note(a) + "; expected 3/(pi*cos(pi/12)) = " +
                 num(3.0 / (kPi * kBeta));
        out.push_back(std::move(r));
    }

    {
        LemmaReport r;
        r.lemma_id = "brimful-control-shrunk-cross";
        const ConvexBody cross = orthogonal_cross_hull().scaled(0.999);
        const auto a = rotation_scales(cross);
        r.measured = *std::min_element(a.begin(), a.end());
        r.reference = 1.0;
        r.tolerance = -1e-4;  // must fall strictly short of a full fit
        r.direction = BoundKind::AtMost;
        r.pass = bound_holds(r.measured, r.reference, r.tolerance, r.direction);
        r.note = scales_note(a) + "; cross scaled by 0.999";
        out.push_back(std::move(r));
    }

    return out;
}

// --- the whole battery -------------------------------------------------------

std::vector<LemmaReport> run_all_checks(std::uint64_t seed, int budget_scale) {
    const int scale = std::max(budget_scale, 1);
    std::vector<LemmaReport> all;
    all.push_back(tiling_sweep(seed, 1000LL * scale));
    all.push_back(h_perimeter_sweep(seed + 1, 200LL * scale));
    all.push_back(unfold_sweep(seed + 2, 500LL * scale));
    all.push_back(min_inscribed_triangle(seed + 3, 10, false));
    all.push_back(min_inscribed_triangle(seed + 4, 6, true));
    all.push_back(hull_centering_sweep(seed + 5, 10 * scale, 40));
    all.push_back(regular_lower_bounds());
    all.push_back(gt_convexity(10000));
    all.push_back(gt_area(4096));
    all.push_back(iso_rotation_sweep(IsoSweepKind::Rotate1, 16, 250));
    all.push_back(iso_rotation_sweep(IsoSweepKind::LxLine, 16, 250));
    all.push_back(iso_rotation_sweep(IsoSweepKind::Rotate2, 16, 250));
    all.push_back(worm_sweep(seed + 6, 250LL * scale));
    all.push_back(two_leg_sweep(16));
    all.push_back(hexagon_symmetrization());
    all.push_back(disk_triangle_hull_min());
    for (LemmaReport& r : brimful_gallery()) all.push_back(std::move(r));
    return all;
}

}  // namespace gk
