#include <benchmark/benchmark.h>

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "gkcover/checks.hpp"
#include "gkcover/geometry.hpp"
#include "gkcover/placement.hpp"
#include "gkcover/sampler.hpp"
#include "gkcover/shapes.hpp"

namespace {

using namespace gk;

std::vector<ConvexBody> curve_pool(int vertex_count, std::size_t count) {
    SampleConfig cfg;
    cfg.seed = 9001;
    cfg.vertex_count = vertex_count;
    std::vector<ConvexBody> pool;
    pool.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        pool.push_back(random_convex_curve(cfg, i));
    return pool;
}

std::vector<Vec2> shuffled_circle_points(int n) {
    std::vector<Vec2> pts;
    pts.reserve(static_cast<std::size_t>(n));
    std::mt19937_64 gen(42);
    std::uniform_real_distribution<double> jitter(-1e-3, 1e-3);
    for (int i = 0; i < n; ++i) {
        const Vec2 p = unit_dir(2 * kPi * i / n);
        pts.push_back({p.x + jitter(gen), p.y + jitter(gen)});
    }
    std::shuffle(pts.begin(), pts.end(), gen);
    return pts;
}

void BM_HullCanonicalize(benchmark::State& state) {
    const auto pts = shuffled_circle_points(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        ConvexBody b(pts);
        benchmark::DoNotOptimize(b);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_HullCanonicalize)->Range(16, 4096)->Complexity();

void BM_MinHomothet(benchmark::State& state) {
    const CoveringShape db = build_delta_beta();
    const auto pool = curve_pool(static_cast<int>(state.range(0)), 64);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(min_homothet(db.outer, pool[i]));
        i = (i + 1) % pool.size();
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MinHomothet)->Range(8, 512)->Complexity();

void BM_IntersectRotatedFits(benchmark::State& state) {
    const CoveringShape db = build_delta_beta();
    const ConvexBody curve = curve_pool(32, 1).front();
    std::vector<ConvexBody> placed;
    for (int i = 0; i < 4; ++i) {
        const ConvexBody t = db.outer.rotated(i * kPi / 2);
        const HomothetFit fit = min_homothet(t, curve);
        placed.push_back(t.scaled(fit.scale, {}).translated(fit.translation));
    }
    for (auto _ : state)
        benchmark::DoNotOptimize(intersect(placed));
}
BENCHMARK(BM_IntersectRotatedFits);

void BM_PlaceHalfTurn(benchmark::State& state) {
    const auto pool = curve_pool(static_cast<int>(state.range(0)), 64);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(place_g2(pool[i]));
        i = (i + 1) % pool.size();
    }
}
BENCHMARK(BM_PlaceHalfTurn)->Arg(8)->Arg(32)->Arg(128);

void BM_PlaceThirdTurn(benchmark::State& state) {
    const CoveringShape g3 = build_gamma3(1024);
    const auto pool = curve_pool(static_cast<int>(state.range(0)), 64);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(place_g3(pool[i], g3));
        i = (i + 1) % pool.size();
    }
}
BENCHMARK(BM_PlaceThirdTurn)->Arg(8)->Arg(32);

void BM_TilingCheck(benchmark::State& state) {
    const auto pool = curve_pool(48, 64);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_tiling(pool[i]));
        i = (i + 1) % pool.size();
    }
}
BENCHMARK(BM_TilingCheck);

void BM_BuildShavedWindow(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(build_gamma_t(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_BuildShavedWindow)->Arg(256)->Arg(1024);

}  // namespace

BENCHMARK_MAIN();
