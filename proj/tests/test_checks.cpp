#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "gkcover/checks.hpp"
#include "gkcover/sampler.hpp"
#include "gkcover/shapes.hpp"

using namespace gk;

namespace {

ConvexBody polygon_disk(int n, double radius, double phase = 0.0,
                        Vec2 center = {}) {
    std::vector<Vec2> pts;
    for (int i = 0; i < n; ++i)
        pts.push_back(center + radius * unit_dir(phase + 2 * kPi * i / n));
    return ConvexBody(pts);
}

}  // namespace

TEST_CASE("bound_holds truth table, including strict-shortfall tolerances") {
    CHECK(bound_holds(1.0, 1.0, 1e-9, BoundKind::TwoSided));
    CHECK(bound_holds(1.0 + 5e-10, 1.0, 1e-9, BoundKind::TwoSided));
    CHECK_FALSE(bound_holds(1.0 + 2e-9, 1.0, 1e-9, BoundKind::TwoSided));

    CHECK(bound_holds(0.9999999995, 1.0, 1e-9, BoundKind::AtLeast));
    CHECK_FALSE(bound_holds(0.999, 1.0, 1e-9, BoundKind::AtLeast));
    CHECK(bound_holds(5.0, 1.0, 1e-9, BoundKind::AtLeast));

    CHECK(bound_holds(1.0000000005, 1.0, 1e-9, BoundKind::AtMost));
    CHECK_FALSE(bound_holds(1.001, 1.0, 1e-9, BoundKind::AtMost));

    // Negative tolerance demands a strict margin, used by negative controls.
    CHECK_FALSE(bound_holds(1.0, 1.0, -1e-3, BoundKind::AtMost));
    CHECK(bound_holds(0.99, 1.0, -1e-3, BoundKind::AtMost));
    CHECK_FALSE(bound_holds(1.0, 1.0, -1e-3, BoundKind::AtLeast));
    CHECK(bound_holds(1.01, 1.0, -1e-3, BoundKind::AtLeast));
}

TEST_CASE("slab width sum: closed forms for a segment and a disk") {
    LemmaReport seg = check_tiling(ConvexBody({{-0.5, 0}, {0.5, 0}}));
    CHECK(seg.pass);
    CHECK(seg.measured == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
    CHECK(seg.reference == doctest::Approx(2.0).epsilon(1e-12));

    LemmaReport disk = check_tiling(polygon_disk(720, 1 / kPi));
    CHECK(disk.pass);
    CHECK(disk.measured == doctest::Approx(6 / kPi).epsilon(1e-3));

    LemmaReport sweep = tiling_sweep(1, 2000);
    CHECK(sweep.pass);
    CHECK(sweep.samples == 2000);
}

TEST_CASE("homothet scale identity on the disk, with closed-form hull") {
    const double r = 1 / kPi;
    const double exact = 24 * (2 - std::sqrt(3.0)) * r;

    LemmaReport rep = h_polygon_perimeter(polygon_disk(720, r, 0.001));
    CHECK(rep.pass);
    CHECK(rep.measured == doctest::Approx(exact).epsilon(1e-4));
    CHECK(rep.measured == doctest::Approx(rep.reference).epsilon(1e-9));

    // Independent scale oracle: every rotated triangle needs 3r/beta.
    auto db = build_delta_beta();
    for (int i = 0; i < 4; ++i) {
        ConvexBody tmpl = db.inner.rotated(i * kPi / 2);
        double a = min_homothet(tmpl, polygon_disk(720, r, 0.001)).scale;
        CHECK(a == doctest::Approx(3 * r / kBeta).epsilon(1e-4));
    }

    LemmaReport sweep = h_perimeter_sweep(21, 300);
    CHECK(sweep.pass);
}

TEST_CASE("polygon-disk hull perimeter converges at second order") {
    // Vertex count divisible by 12 with a half-step phase puts every fit
    // direction mid-edge, so the support deficit is the clean 1 - cos(pi/n)
    // and halving the step divides the error by four.
    const double r = 1 / kPi;
    const double exact = 24 * (2 - std::sqrt(3.0)) * r;
    double prev_err = -1;
    for (int n : {96, 192, 384}) {
        ConvexBody disk = polygon_disk(n, r, -kPi / 2 + kPi / n);
        double err = std::abs(h_polygon_perimeter(disk).measured - exact);
        CHECK(err == doctest::Approx(exact * (1 - std::cos(kPi / n)))
                         .epsilon(1e-6));
        if (prev_err > 0) CHECK(err <= prev_err / 3);
        prev_err = err;
    }
}

TEST_CASE("support 12-gon of a disk and of its own slope triangle") {
    const double R = 0.4;
    TwelveGon p = TwelveGon::circumscribe(polygon_disk(360, R, -kPi / 2));
    for (double h : p.offsets) CHECK(h == doctest::Approx(R).epsilon(1e-12));
    for (double l : p.edge_lengths())
        CHECK(l == doctest::Approx(2 * R * std::tan(kPi / 12)).epsilon(1e-9));
    CHECK(p.perimeter() ==
          doctest::Approx(24 * R * std::tan(kPi / 12)).epsilon(1e-9));
    for (int k = 0; k < 12; ++k)
        CHECK(norm(p.touchpoint(k, 0.5)) == doctest::Approx(R).epsilon(1e-9));
    for (Vec2 c : p.corners())
        CHECK(norm(c) == doctest::Approx(R / std::cos(kPi / 12)).epsilon(1e-9));

    // A triangle whose sides already have slopes that are multiples of
    // pi/6 collapses nine of the twelve edges.
    auto db = build_delta_beta();
    TwelveGon t = TwelveGon::circumscribe(db.inner);
    int positive = 0;
    for (double l : t.edge_lengths())
        if (l > 1e-9) ++positive;
    CHECK(positive == 3);
    CHECK(t.perimeter() ==
          doctest::Approx(db.inner.perimeter()).epsilon(1e-12));
}

TEST_CASE("unfolded circuit: equality case, decomposition, bad lambda") {
    TwelveGon reg;
    reg.offsets.fill(0.45);
    std::array<double, 12> mid{};
    mid.fill(0.5);

    UnfoldTrace tr = unfold_circuit(reg, mid);
    CHECK(tr.circuit_length ==
          doctest::Approx(reg.perimeter() * std::cos(kPi / 12)).epsilon(1e-12));
    CHECK(tr.horizontal_part + tr.oblique_part ==
          doctest::Approx(reg.perimeter()).epsilon(1e-12));

    SubstreamRng rng(17, 0);
    for (int trial = 0; trial < 50; ++trial) {
        TwelveGon p;
        // Offsets within a 2/sqrt(3) ratio band form a valid support vector:
        // every raw edge length stays nonnegative.
        for (double& h : p.offsets) h = rng.uniform(0.4, 0.46);
        std::array<double, 12> lam{};
        for (double& l : lam) l = rng.uniform(0.0, 1.0);
        LemmaReport rep = unfold_bound(p, lam);
        CHECK(rep.pass);
        UnfoldTrace t = unfold_circuit(p, lam);
        CHECK(t.circuit_length >= p.perimeter() * std::cos(kPi / 12) - 1e-9);
        CHECK(t.horizontal_part + t.oblique_part ==
              doctest::Approx(p.perimeter()).epsilon(1e-9));
    }

    std::array<double, 12> bad{};
    bad.fill(0.5);
    bad[3] = 1.2;
    CHECK_THROWS_AS(unfold_bound(reg, bad), std::invalid_argument);

    CHECK(unfold_sweep(4, 500).pass);
}

TEST_CASE("circuit through actual touch points is between the two bounds") {
    SampleConfig cfg;
    cfg.seed = 23;
    cfg.vertex_count = 48;
    for (std::uint64_t idx = 0; idx < 20; ++idx) {
        ConvexBody curve = random_convex_curve(cfg, idx);
        TwelveGon p = TwelveGon::circumscribe(curve);
        auto corners = p.corners();
        auto lengths = p.edge_lengths();
        std::array<double, 12> lam{};
        for (int k = 0; k < 12; ++k) {
            if (lengths[k] <= 1e-12) continue;
            Vec2 n = unit_dir(k * kPi / 6 - kPi / 2);
            Vec2 best = curve.vertices()[0];
            for (Vec2 v : curve.vertices())
                if (dot(v, n) > dot(best, n)) best = v;
            lam[k] = std::clamp(
                dot(best - corners[k], unit_dir(k * kPi / 6)) / lengths[k], 0.0,
                1.0);
        }
        UnfoldTrace t = unfold_circuit(p, lam);
        CHECK(t.circuit_length >= p.perimeter() * std::cos(kPi / 12) - 1e-9);
        CHECK(t.circuit_length <= curve.perimeter() + 1e-9);
    }
}

TEST_CASE("extremal inscribed triangles of the window") {
    LemmaReport rep = min_inscribed_triangle(1, 6);
    CHECK(rep.pass);
    CHECK(rep.measured == doctest::Approx(2.0).epsilon(1e-6));

    LemmaReport apex = min_inscribed_triangle(1, 4, true);
    CHECK(apex.pass);

    // Focal property: a triangle with a vertex at the bottom middle and the
    // other two on the parabolas at equal height always has perimeter 2.
    for (double y = 0.0; y <= 0.9; y += 0.05) {
        Vec2 o{0, 0};
        Vec2 xl{-(1 - y * y) / 2, y};
        Vec2 zr{(1 - y * y) / 2, y};
        double per = norm(xl - o) + norm(zr - xl) + norm(o - zr);
        CHECK(per == doctest::Approx(2.0).epsilon(1e-12));
    }
}

TEST_CASE("joint hull perimeter is minimized by aligning the centers") {
    ConvexBody tri({{0, 0}, {1, 0}, {0.2, 0.9}});
    std::vector<ConvexBody> figs = {minkowski_symmetrize(tri),
                                    minkowski_symmetrize(tri.rotated(1.0))};
    LemmaReport rep = hull_perimeter_convexity(figs, 200, 5);
    CHECK(rep.pass);

    std::vector<ConvexBody> bad = {minkowski_symmetrize(tri), tri};
    CHECK_THROWS_AS(hull_perimeter_convexity(bad, 10, 1),
                    std::invalid_argument);

    CHECK(hull_centering_sweep(3, 5, 60).pass);
}

TEST_CASE("segment stars pin the lower area bound at sqrt(6)/4") {
    LemmaReport rep = regular_lower_bounds();
    CHECK(rep.pass);
    CHECK(rep.measured == doctest::Approx(std::sqrt(6.0) / 4).epsilon(1e-12));
    CHECK(rep.measured > 0.6);
    CHECK(rep.measured > 46.0 / 81.0);
}

TEST_CASE("shaved corner: convexity grid and quadrature vs closed form") {
    CHECK(gt_convexity(2000).pass);

    LemmaReport area = gt_area(2048);
    CHECK(area.pass);
    CHECK(area.measured == doctest::Approx(kGammaTArea).epsilon(1e-9));
    CHECK(area.reference == doctest::Approx(kGammaTArea).epsilon(1e-15));
}

TEST_CASE("isosceles triangle rotation sweeps stay inside, with contact") {
    for (IsoSweepKind kind :
         {IsoSweepKind::Rotate1, IsoSweepKind::LxLine, IsoSweepKind::Rotate2}) {
        LemmaReport rep = iso_rotation_sweep(kind, 12, 200);
        CHECK(rep.pass);
        CHECK(std::abs(rep.measured) <= 1e-9);
    }
}

namespace {

const std::vector<Vec2>* find_witness(const LemmaReport& r,
                                      const std::string& name) {
    for (const auto& w : r.witness)
        if (w.first == name) return &w.second;
    return nullptr;
}

}  // namespace

TEST_CASE("open curves close up into the half-turn placement") {
    LemmaReport straight = worm_closure({{0, 0}, {1, 0}});
    CHECK(straight.pass);
    CHECK(straight.measured <= 1e-9);
    const std::vector<Vec2>* hull = find_witness(straight, "closed hull");
    REQUIRE(hull != nullptr);
    CHECK(ConvexBody(*hull).perimeter() ==
          doctest::Approx(2.0).epsilon(1e-12));

    LemmaReport elbow = worm_closure({{0, 0}, {0.5, 0}, {0.8, 0.4}});
    CHECK(elbow.pass);
    const std::vector<Vec2>* elbow_hull = find_witness(elbow, "closed hull");
    REQUIRE(elbow_hull != nullptr);
    CHECK(ConvexBody(*elbow_hull).perimeter() <= 2.0 + 1e-9);

    CHECK(worm_sweep(9, 300).pass);
}

TEST_CASE("reflected contact forces two legs to measure at least 1") {
    LemmaReport rep = two_leg_sweep(16);
    CHECK(rep.pass);
    CHECK(rep.measured >= 1.0 - 1e-9);
}

TEST_CASE("symmetrized triangle cover is a regular-edged hexagon") {
    LemmaReport rep = hexagon_symmetrization();
    CHECK(rep.pass);
    CHECK(rep.measured <= 1e-9);
}

TEST_CASE("disk plus triangle joint hull never drops below 0.543") {
    LemmaReport rep = disk_triangle_hull_min();
    CHECK(rep.pass);
    CHECK(rep.measured >= 0.543 - 1e-3);
    CHECK(rep.measured == doctest::Approx(0.5439189).epsilon(1e-4));
}

TEST_CASE("brimful gallery: tight shapes ask for the full cover") {
    auto reports = brimful_gallery();
    REQUIRE(reports.size() == 5);
    for (const auto& r : reports) CHECK(r.pass);

    CHECK(reports[0].lemma_id == "brimful-cross");
    CHECK(reports[0].measured == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(reports[1].measured == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(reports[2].measured == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(reports[3].lemma_id == "brimful-control-disk");
    CHECK(reports[3].measured ==
          doctest::Approx(3 / (kPi * kBeta)).epsilon(1e-6));
    CHECK(reports[4].measured == doctest::Approx(0.999).epsilon(1e-6));
}

TEST_CASE("full battery passes with unique ids") {
    auto reports = run_all_checks(7, 1);
    CHECK(reports.size() == 21);
    std::set<std::string> ids;
    for (const auto& r : reports) {
        CHECK(r.pass);
        ids.insert(r.lemma_id);
    }
    CHECK(ids.size() == reports.size());
}
