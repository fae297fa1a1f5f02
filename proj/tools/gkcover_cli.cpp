#include <atomic>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "gkcover/checks.hpp"
#include "gkcover/geometry.hpp"
#include "gkcover/jsonio.hpp"
#include "gkcover/placement.hpp"
#include "gkcover/sampler.hpp"
#include "gkcover/shapes.hpp"
#include "gkcover/svg.hpp"

namespace {

using namespace gk;
namespace fs = std::filesystem;

template <typename Fn>
void parallel_for(long long count, int jobs, Fn&& fn) {
    jobs = std::max(1, jobs);
    if (jobs == 1 || count < 2) {
        for (long long i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<long long> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(jobs));
    for (int t = 0; t < jobs; ++t)
        pool.emplace_back([&] {
            constexpr long long chunk = 64;
            for (long long base; (base = next.fetch_add(chunk)) < count;)
                for (long long i = base; i < std::min(count, base + chunk);
                     ++i)
                    fn(i);
        });
    for (auto& th : pool) th.join();
}

fs::path ensure_out_dir(const std::string& out) {
    fs::path dir = out.empty() ? fs::path("out") : fs::path(out);
    fs::create_directories(dir);
    return dir;
}

void write_manifest(const fs::path& dir, const std::string& stem,
                    RunManifest m) {
    m.results_path = (dir / (stem + ".json")).string();
    write_text_file((dir / (stem + ".manifest.json")).string(),
                    manifest_to_json(m));
}

// ---------------------------------------------------------------- shapes ---

CoveringShape build_shape(const std::string& name, int n, int k,
                          double apex) {
    if (name == "delta1") return build_delta1();
    if (name == "delta-beta") return build_delta_beta();
    if (name == "right-isosceles") return build_right_isosceles();
    if (name == "segment-triangle") return build_gk_segment_triangle(k, apex);
    if (name == "church-window") return build_church_window(n);
    if (name == "gamma3") return build_gamma3(n);
    if (name == "gamma-t") return build_gamma_t(n);
    throw CLI::ValidationError("unknown shape: " + name);
}

const std::vector<std::string> kShapeNames = {
    "delta1",        "delta-beta", "right-isosceles", "segment-triangle",
    "church-window", "gamma3",     "gamma-t",         "cross"};

std::string shape_meta_json(const std::string& name, const CoveringShape& s) {
    std::string out = "{\n";
    out += "  \"name\": \"" + name + "\",\n";
    out += "  \"outer_area\": " + format_double(s.outer.area()) + ",\n";
    out += "  \"inner_area\": " + format_double(s.inner.area()) + ",\n";
    out += "  \"outer_perimeter\": " + format_double(s.outer.perimeter()) +
           ",\n";
    if (s.analytic_area)
        out += "  \"analytic_area\": " + format_double(*s.analytic_area) +
               ",\n";
    if (s.analytic_perimeter)
        out += "  \"analytic_perimeter\": " +
               format_double(*s.analytic_perimeter) + ",\n";
    out += "  \"frame\": \"" + s.frame_note + "\"\n";
    out += "}\n";
    return out;
}

int cmd_shapes(const std::string& name, int n, int k, double apex,
               const std::string& out) {
    const fs::path dir = ensure_out_dir(out);

    ConvexBody outer;
    std::string meta;
    if (name == "cross") {
        outer = orthogonal_cross_hull();
        meta = "{\n  \"name\": \"cross\",\n  \"outer_area\": " +
               format_double(outer.area()) + ",\n  \"outer_perimeter\": " +
               format_double(outer.perimeter()) + "\n}\n";
    } else {
        const CoveringShape shape = build_shape(name, n, k, apex);
        outer = shape.outer;
        meta = shape_meta_json(name, shape);
    }

    write_text_file((dir / (name + ".json")).string(),
                    geometry_to_json(outer) + "\n");
    write_text_file((dir / (name + ".meta.json")).string(), meta);

    double lo_x = 1e9, lo_y = 1e9, hi_x = -1e9, hi_y = -1e9;
    for (Vec2 v : outer.vertices()) {
        lo_x = std::min(lo_x, v.x);
        lo_y = std::min(lo_y, v.y);
        hi_x = std::max(hi_x, v.x);
        hi_y = std::max(hi_y, v.y);
    }
    SvgCanvas svg(lo_x, lo_y, hi_x, hi_y);
    svg.polygon(outer.vertices(), "#1f5fa8", "#9cc3e8");
    write_text_file((dir / (name + ".svg")).string(), svg.finish());

    RunManifest m;
    m.command = "shapes " + name;
    m.discretization = n;
    write_manifest(dir, name, m);
    std::cout << name << ": area " << format_double(outer.area())
              << ", perimeter " << format_double(outer.perimeter()) << " -> "
              << (dir / (name + ".json")).string() << "\n";
    return 0;
}

// ----------------------------------------------------------------- place ---

struct PlaceOutcome {
    bool success = false;
    int rotation_index = 0;
    Vec2 translation{};
    std::vector<double> scales;
    std::string note;
};

PlaceOutcome to_outcome(const PlacementResult& res) {
    PlaceOutcome o;
    o.success = res.success;
    if (res.placement) {
        o.rotation_index = res.placement->rotation_index;
        o.translation = res.placement->translation;
    }
    for (const HomothetFit& f : res.diagnostics) o.scales.push_back(f.scale);
    o.note = res.note;
    return o;
}

std::string outcomes_to_json(const std::vector<PlaceOutcome>& outcomes,
                             long long failures) {
    std::string out = "{\n  \"total\": " +
                      std::to_string(outcomes.size()) +
                      ",\n  \"failures\": " + std::to_string(failures) +
                      ",\n  \"results\": [\n";
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        const PlaceOutcome& o = outcomes[i];
        out += "    {\"index\": " + std::to_string(i) +
               ", \"success\": " + (o.success ? "true" : "false") +
               ", \"rotation_index\": " + std::to_string(o.rotation_index) +
               ", \"translation\": [" + format_double(o.translation.x) + ", " +
               format_double(o.translation.y) + "], \"scales\": [";
        for (std::size_t j = 0; j < o.scales.size(); ++j)
            out += (j ? ", " : "") + format_double(o.scales[j]);
        out += "]}";
        out += i + 1 < outcomes.size() ? ",\n" : "\n";
    }
    out += "  ]\n}\n";
    return out;
}

int cmd_place(const std::string& shape, int k, long long random_count,
              long long triangle_count, long long segment_count,
              const std::string& input, std::uint64_t seed, double tol,
              int jobs, int n, double apex, const std::string& out) {
    const std::map<std::string, int> expected_k = {
        {"delta1", 2},        {"delta-beta", 4}, {"right-isosceles", 4},
        {"church-window", 1}, {"gamma3", 3},     {"gamma-t", 3}};
    if (auto it = expected_k.find(shape);
        it != expected_k.end() && k != it->second)
        throw CLI::ValidationError(shape + " expects --k " +
                                   std::to_string(it->second));
    if (shape == "segment-triangle" && segment_count <= 0 && input.empty())
        throw CLI::ValidationError(
            "segment-triangle placement needs --segments");
    if (shape == "gamma-t" && triangle_count <= 0 && input.empty())
        throw CLI::ValidationError("gamma-t placement needs --triangles");

    const CoveringShape target = build_shape(shape, n, k, apex);

    SampleConfig cfg;
    cfg.seed = seed;
    cfg.perimeter_target = 2.0;

    long long count = std::max({random_count, triangle_count, segment_count});
    std::vector<ConvexBody> inputs;
    if (!input.empty()) {
        try {
            inputs.push_back(geometry_from_json(read_text_file(input)));
        } catch (const std::exception& e) {
            std::cerr << "input error: " << e.what() << "\n";
            return 2;
        }
        count = 1;
    }
    if (count <= 0)
        throw CLI::ValidationError("nothing to place: give --random N, "
                                   "--triangles N, --segments N or --input");

    std::vector<PlaceOutcome> outcomes(static_cast<std::size_t>(count));
    std::atomic<long long> failures{0};
    parallel_for(count, jobs, [&](long long i) {
        PlacementResult res;
        if (!inputs.empty()) {
            const ConvexBody& body = inputs[static_cast<std::size_t>(i)];
            if (shape == "delta1") res = place_g2(body, tol);
            else if (shape == "gamma3") res = place_g3(body, target, tol);
            else if (shape == "church-window")
                res = place_in_church_window(body, target, tol);
            else if (shape == "gamma-t")
                res = place_triangle_gt(body, target, tol);
            else res = place_gk_homothet(body, target, k, tol);
        } else if (shape == "segment-triangle") {
            const double slope = kPi * static_cast<double>(i) /
                                 static_cast<double>(count);
            res = place_segment_gk(slope, k, target, tol);
        } else {
            SampleConfig local = cfg;
            ConvexBody body;
            if (triangle_count > 0) {
                body = i % 100 == 99
                           ? near_degenerate_triangle(
                                 local, static_cast<std::uint64_t>(i))
                           : random_triangle(local,
                                             static_cast<std::uint64_t>(i));
            } else {
                local.vertex_count = 3 + static_cast<int>(i % 62);
                body = random_convex_curve(local,
                                           static_cast<std::uint64_t>(i));
            }
            if (shape == "delta1") res = place_g2(body, tol);
            else if (shape == "gamma3") res = place_g3(body, target, tol);
            else if (shape == "church-window")
                res = place_in_church_window(body, target, tol);
            else if (shape == "gamma-t")
                res = place_triangle_gt(body, target, tol);
            else res = place_gk_homothet(body, target, k, tol);
        }
        outcomes[static_cast<std::size_t>(i)] = to_outcome(res);
        if (!res.success) failures.fetch_add(1);
    });

    const fs::path dir = ensure_out_dir(out);
    const std::string stem = "place-" + shape;
    write_text_file((dir / (stem + ".json")).string(),
                    outcomes_to_json(outcomes, failures.load()));
    RunManifest m;
    m.command = "place " + shape + " --k " + std::to_string(k);
    m.seed = seed;
    m.budget = count;
    m.discretization = n;
    m.tolerance = tol;
    m.jobs = jobs;
    write_manifest(dir, stem, m);

    std::cout << (count - failures.load()) << "/" << count << " placed in "
              << shape << "\n";
    return failures.load() == 0 ? 0 : 1;
}

// ---------------------------------------------------------------- verify ---

using LemmaRunner = std::function<std::vector<LemmaReport>(
    std::uint64_t seed, long long budget, int n)>;

const std::vector<std::pair<std::string, LemmaRunner>>& lemma_registry() {
    static const std::vector<std::pair<std::string, LemmaRunner>> reg = {
        {"tiling",
         [](std::uint64_t s, long long b, int) {
             return std::vector<LemmaReport>{tiling_sweep(s, b)};
         }},
        {"h-perimeter",
         [](std::uint64_t s, long long b, int) {
             return std::vector<LemmaReport>{h_perimeter_sweep(s, b)};
         }},
        {"unfold",
         [](std::uint64_t s, long long b, int) {
             return std::vector<LemmaReport>{unfold_sweep(s, b)};
         }},
        {"min-triangle",
         [](std::uint64_t s, long long, int) {
             return std::vector<LemmaReport>{
                 min_inscribed_triangle(s, 10, false)};
         }},
        {"min-triangle-apex",
         [](std::uint64_t s, long long, int) {
             return std::vector<LemmaReport>{
                 min_inscribed_triangle(s, 6, true)};
         }},
        {"hull-centering",
         [](std::uint64_t s, long long b, int) {
             const int sets = static_cast<int>(std::max(1LL, b / 50));
             return std::vector<LemmaReport>{
                 hull_centering_sweep(s, sets, 50)};
         }},
        {"segment-stars",
         [](std::uint64_t, long long, int) {
             return std::vector<LemmaReport>{regular_lower_bounds()};
         }},
        {"roof-convexity",
         [](std::uint64_t, long long b, int) {
             return std::vector<LemmaReport>{
                 gt_convexity(static_cast<int>(std::max(100LL, b)))};
         }},
        {"roof-area",
         [](std::uint64_t, long long, int n) {
             return std::vector<LemmaReport>{gt_area(n)};
         }},
        {"iso-rotate",
         [](std::uint64_t, long long b, int) {
             const int angles = static_cast<int>(std::max(50LL, b / 24));
             return std::vector<LemmaReport>{
                 iso_rotation_sweep(IsoSweepKind::Rotate1, 24, angles)};
         }},
        {"iso-line",
         [](std::uint64_t, long long b, int) {
             const int angles = static_cast<int>(std::max(50LL, b / 24));
             return std::vector<LemmaReport>{
                 iso_rotation_sweep(IsoSweepKind::LxLine, 24, angles)};
         }},
        {"iso-apex",
         [](std::uint64_t, long long b, int) {
             const int angles = static_cast<int>(std::max(50LL, b / 24));
             return std::vector<LemmaReport>{
                 iso_rotation_sweep(IsoSweepKind::Rotate2, 24, angles)};
         }},
        {"worm",
         [](std::uint64_t s, long long b, int) {
             return std::vector<LemmaReport>{worm_sweep(s, b)};
         }},
        {"two-leg",
         [](std::uint64_t, long long, int) {
             return std::vector<LemmaReport>{two_leg_sweep(24)};
         }},
        {"hexagon",
         [](std::uint64_t, long long, int) {
             return std::vector<LemmaReport>{hexagon_symmetrization()};
         }},
        {"disk-triangle",
         [](std::uint64_t, long long, int) {
             return std::vector<LemmaReport>{disk_triangle_hull_min()};
         }},
        {"brimful",
         [](std::uint64_t, long long, int) { return brimful_gallery(); }},
        {"all",
         [](std::uint64_t s, long long b, int) {
             const int scale = static_cast<int>(std::max(1LL, b / 1000));
             return run_all_checks(s, scale);
         }},
    };
    return reg;
}

int cmd_verify(const std::string& id, long long budget, std::uint64_t seed,
               int n, const std::string& out) {
    const LemmaRunner* runner = nullptr;
    for (const auto& [name, fn] : lemma_registry())
        if (name == id) runner = &fn;
    if (!runner) {
        std::cerr << "unknown lemma id: " << id << "\navailable:";
        for (const auto& [name, fn] : lemma_registry())
            std::cerr << " " << name;
        std::cerr << "\n";
        return 2;
    }

    const std::vector<LemmaReport> reports = (*runner)(seed, budget, n);
    const fs::path dir = ensure_out_dir(out);
    const std::string stem = "verify-" + id;
    write_text_file((dir / (stem + ".json")).string(),
                    reports_to_json(reports));
    write_text_file((dir / (stem + ".csv")).string(),
                    reports_to_csv(reports));
    RunManifest m;
    m.command = "verify " + id;
    m.seed = seed;
    m.budget = budget;
    m.discretization = n;
    write_manifest(dir, stem, m);

    bool all_pass = true;
    for (const LemmaReport& r : reports) {
        std::cout << (r.pass ? "PASS " : "FAIL ") << r.lemma_id
                  << "  measured " << format_double(r.measured)
                  << "  reference " << format_double(r.reference) << "\n";
        all_pass = all_pass && r.pass;
    }
    return all_pass ? 0 : 1;
}

// --------------------------------------------------------------- figures ---

void figure_tiling(const fs::path& dir) {
    const double side = 2.0 / std::sqrt(3.0);  // equilateral with height 1
    SvgCanvas svg(-side, -side, side, side);
    for (int i = 0; i < 6; ++i) {
        const Vec2 a = side * unit_dir(i * kPi / 3);
        const Vec2 b = side * unit_dir((i + 1) * kPi / 3);
        svg.polygon({Vec2{0, 0}, a, b}, "#444444",
                    i % 2 ? "#f2c94c" : "#9cc3e8", 1.0);
    }
    write_text_file((dir / "tiling.svg").string(), svg.finish());
}

void figure_perimeter_identity(const fs::path& dir) {
    SampleConfig cfg;
    cfg.seed = 7;
    cfg.vertex_count = 24;
    cfg.perimeter_target = 2.0;
    const ConvexBody curve = random_convex_curve(cfg, 0);

    const ConvexBody tri = build_delta_beta().outer;
    std::vector<ConvexBody> homothets;
    for (int i = 0; i < 4; ++i) {
        const ConvexBody rot = tri.rotated(i * kPi / 2);
        const HomothetFit fit = min_homothet(rot, curve);
        homothets.push_back(rot.scaled(fit.scale).translated(fit.translation));
    }
    const ConvexBody hull12 = intersect(homothets);

    double lo_x = 1e9, lo_y = 1e9, hi_x = -1e9, hi_y = -1e9;
    for (const ConvexBody& h : homothets)
        for (Vec2 v : h.vertices()) {
            lo_x = std::min(lo_x, v.x);
            lo_y = std::min(lo_y, v.y);
            hi_x = std::max(hi_x, v.x);
            hi_y = std::max(hi_y, v.y);
        }
    SvgCanvas svg(lo_x, lo_y, hi_x, hi_y);
    for (const ConvexBody& h : homothets)
        svg.polyline([&] {
            std::vector<Vec2> closed = h.vertices();
            closed.push_back(closed.front());
            return closed;
        }(), "#999999", 1.0);
    svg.polygon(hull12.vertices(), "#1f5fa8", "#9cc3e8", 2.0);
    svg.polygon(curve.vertices(), "#222222", "none", 1.5);
    write_text_file((dir / "perimeter-identity.svg").string(), svg.finish());
}

void figure_shaved_window(const fs::path& dir) {
    const CoveringShape gt = build_gamma_t(1024);
    SvgCanvas svg(-0.55, -0.05, 0.55, 0.75);
    svg.polygon(gt.outer.vertices(), "#1f5fa8", "#d8e8f8", 1.0);

    std::vector<Vec2> right_arc, left_arc;
    for (int i = 0; i <= 200; ++i) {
        const double t = -4.0 / 9 + (1.0 / 9) * i / 200;
        const Vec2 p = gamma_t_point(t);
        right_arc.push_back(p);
        left_arc.push_back({-p.x, p.y});
    }
    svg.polyline(right_arc, "#c0392b", 2.5);
    svg.polyline(left_arc, "#c0392b", 2.5);

    const GammaTLandmarks lm = gamma_t_landmarks();
    svg.line(lm.C, lm.D, "#888888", 1.0, "6,4");
    for (Vec2 p : {lm.O, lm.A, lm.B, lm.C, lm.D, lm.E, lm.F, lm.H})
        svg.dot(p, "#222222");
    write_text_file((dir / "shaved-window.svg").string(), svg.finish());
}

int cmd_figures(const std::string& out) {
    const fs::path dir = ensure_out_dir(out);
    figure_tiling(dir);
    figure_perimeter_identity(dir);
    figure_shaved_window(dir);
    RunManifest m;
    m.command = "figures";
    m.figures_path = dir.string();
    write_text_file((dir / "figures.manifest.json").string(),
                    manifest_to_json(m));
    std::cout << "figures written to " << dir.string() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"universal covering shapes for closed curves: build, place, "
                 "verify, draw"};
    app.require_subcommand(1);

    std::string shape_name, out_dir, input_file, lemma_id = "all";
    int n = 4096, k = 2, jobs = 1;
    long long random_count = 0, triangle_count = 0, segment_count = 0;
    long long budget = 1000;
    std::uint64_t seed = 1;
    double tol = kPlacementTol, apex = kPi / 2;

    CLI::App* shapes = app.add_subcommand("shapes", "emit shape geometry");
    shapes->add_option("name", shape_name, "shape name")
        ->required()
        ->check(CLI::IsMember(kShapeNames));
    shapes->add_option("--n", n, "boundary samples per arc");
    shapes->add_option("--k", k, "rotation group order (segment-triangle)");
    shapes->add_option("--apex", apex, "apex angle (segment-triangle)");
    shapes->add_option("--out", out_dir, "output directory");

    CLI::App* place = app.add_subcommand("place", "place bodies in a shape");
    place->add_option("shape", shape_name, "target shape")
        ->required()
        ->check(CLI::IsMember(std::vector<std::string>(
            kShapeNames.begin(), kShapeNames.end() - 1)));
    place->add_option("--k", k, "rotation group order")->required();
    place->add_option("--random", random_count, "random convex curves");
    place->add_option("--triangles", triangle_count, "random triangles");
    place->add_option("--segments", segment_count, "unit segment slopes");
    place->add_option("--input", input_file, "geometry JSON file");
    place->add_option("--seed", seed, "sample seed");
    place->add_option("--tol", tol, "placement tolerance");
    place->add_option("--jobs", jobs, "worker threads");
    place->add_option("--n", n, "shape discretization");
    place->add_option("--apex", apex, "apex angle (segment-triangle)");
    place->add_option("--out", out_dir, "output directory");

    CLI::App* verify = app.add_subcommand("verify", "run lemma checks");
    verify->add_option("lemma", lemma_id, "lemma id or 'all'");
    verify->add_option("--budget", budget, "sample budget");
    verify->add_option("--seed", seed, "sweep seed");
    verify->add_option("--n", n, "discretization");
    verify->add_option("--out", out_dir, "output directory");

    CLI::App* figures = app.add_subcommand("figures", "emit SVG figures");
    figures->add_option("--out", out_dir, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (shapes->parsed())
            return cmd_shapes(shape_name, n, k, apex, out_dir);
        if (place->parsed())
            return cmd_place(shape_name, k, random_count, triangle_count,
                             segment_count, input_file, seed, tol, jobs, n,
                             apex, out_dir);
        if (verify->parsed())
            return cmd_verify(lemma_id, budget, seed, n, out_dir);
        if (figures->parsed()) return cmd_figures(out_dir);
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
