#include "gkcover/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gk {
namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

}  // namespace

SubstreamRng::SubstreamRng(std::uint64_t seed, std::uint64_t stream) {
    key_ = mix(mix(seed + kGolden) ^ mix(stream * kGolden + 1));
}

std::uint64_t SubstreamRng::next_u64() {
    return mix(key_ + (++counter_) * kGolden);
}

double SubstreamRng::next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double SubstreamRng::exponential() {
    return -std::log1p(-next_double());
}

namespace {

// Retries get a fresh substream derived from (index, round) so rejection
// keeps draws reproducible per sample index.
SubstreamRng round_rng(const SampleConfig& cfg, std::uint64_t index,
                       std::uint64_t round) {
    return SubstreamRng(cfg.seed, index * 1024 + round);
}

struct TriangleSides {
    double a, b, c;
    double min_angle;
};

TriangleSides dirichlet_sides(SubstreamRng& rng, double perimeter) {
    double e1 = rng.exponential(), e2 = rng.exponential(), e3 = rng.exponential();
    const double s = e1 + e2 + e3;
    TriangleSides t{perimeter * e1 / s, perimeter * e2 / s, perimeter * e3 / s, 0};
    auto angle = [&](double opp, double u, double v) {
        return std::acos(std::clamp((u * u + v * v - opp * opp) / (2 * u * v),
                                    -1.0, 1.0));
    };
    t.min_angle = std::min({angle(t.a, t.b, t.c), angle(t.b, t.a, t.c),
                            angle(t.c, t.a, t.b)});
    return t;
}

ConvexBody triangle_from_sides(double a, double b, double c) {
    // A=(0,0), B=(a,0); sides: |AB|=a, |BC|=b, |CA|=c.
    const double x = (a * a + c * c - b * b) / (2 * a);
    const double y = std::sqrt(std::max(c * c - x * x, 0.0));
    return ConvexBody({{0, 0}, {a, 0}, {x, y}});
}

}  // namespace

ConvexBody random_convex_curve(const SampleConfig& cfg, std::uint64_t index) {
    if (cfg.vertex_count < 3)
        throw std::invalid_argument("convex curve needs at least 3 vertices");
    const int n = cfg.vertex_count;
    for (std::uint64_t round = 0; round < 256; ++round) {
        SubstreamRng rng = round_rng(cfg, index, round);
        std::vector<double> dirs(n);
        for (double& d : dirs) d = rng.uniform(0.0, 2 * kPi);
        std::sort(dirs.begin(), dirs.end());
        // Need distinct directions not contained in a half-plane, or no
        // closed polygon with positive edges exists.
        std::vector<double> gaps(n);
        bool usable = true;
        for (int i = 0; i < n; ++i) {
            const double next = i + 1 < n ? dirs[i + 1] : dirs[0] + 2 * kPi;
            gaps[i] = next - dirs[i];
            if (gaps[i] < 1e-7 || gaps[i] > kPi - 1e-7) usable = false;
        }
        if (!usable) continue;

        std::vector<Vec2> u(n);
        std::vector<double> len(n), tangential(n);
        for (int i = 0; i < n; ++i) {
            u[i] = unit_dir(dirs[i]);
            len[i] = rng.exponential();
            // Edge lengths of the polygon with these edge directions
            // circumscribing the unit disk; they close by construction.
            tangential[i] = std::tan(gaps[(i + n - 1) % n] / 2) +
                            std::tan(gaps[i] / 2);
        }
        // Least-squares closure: minimal sum of squared length tweaks with
        // sum(len_i * u_i) = 0.
        Vec2 d{};
        double sxx = 0, sxy = 0, syy = 0;
        for (int i = 0; i < n; ++i) {
            d += u[i] * len[i];
            sxx += u[i].x * u[i].x;
            sxy += u[i].x * u[i].y;
            syy += u[i].y * u[i].y;
        }
        const double det = sxx * syy - sxy * sxy;
        if (std::abs(det) < 1e-12) continue;
        const Vec2 lambda{(syy * d.x - sxy * d.y) / det,
                          (-sxy * d.x + sxx * d.y) / det};
        for (int i = 0; i < n; ++i) len[i] -= dot(u[i], lambda);
        // The adjustment can push short edges negative.  Both `len` and
        // `tangential` satisfy the closure constraint, so any blend does too;
        // take the smallest blend that clears a proportional floor.
        double blend = 0.0;
        for (int i = 0; i < n; ++i) {
            const double floor_i = 0.05 * tangential[i];
            if (len[i] < floor_i)
                blend = std::max(blend, (floor_i - len[i]) /
                                            (tangential[i] - len[i]));
        }
        blend = std::min(blend, 1.0);
        double total = 0;
        for (int i = 0; i < n; ++i) {
            if (blend > 0)
                len[i] = (1 - blend) * len[i] + blend * tangential[i];
            total += len[i];
        }

        const double f = cfg.perimeter_target / total;
        std::vector<Vec2> pts(n);
        Vec2 cur{};
        for (int i = 0; i < n; ++i) {
            cur += u[i] * (len[i] * f);
            pts[i] = cur;
        }
        return ConvexBody(std::move(pts));
    }
    throw std::runtime_error("convex curve sampling failed to close");
}

ConvexBody random_triangle(const SampleConfig& cfg, std::uint64_t index) {
    for (std::uint64_t round = 0; round < 4096; ++round) {
        SubstreamRng rng = round_rng(cfg, index, round);
        const TriangleSides t = dirichlet_sides(rng, cfg.perimeter_target);
        const double longest = std::max({t.a, t.b, t.c});
        if (longest >= 0.5 * cfg.perimeter_target * (1 - 1e-12)) continue;
        if (t.min_angle < cfg.min_angle) continue;
        return triangle_from_sides(t.a, t.b, t.c);
    }
    throw std::runtime_error("triangle sampling failed");
}

ConvexBody near_degenerate_triangle(const SampleConfig& cfg, std::uint64_t index) {
    SubstreamRng rng = round_rng(cfg, index, 0);
    const double phi = cfg.min_angle * (1 + rng.next_double());
    const double psi = rng.uniform(phi, (kPi - phi) / 2);
    const double a3 = kPi - phi - psi;
    const double s = std::sin(phi) + std::sin(psi) + std::sin(a3);
    const double scale = cfg.perimeter_target / s;
    return triangle_from_sides(scale * std::sin(phi), scale * std::sin(psi),
                               scale * std::sin(a3));
}

std::vector<Vec2> random_worm(const SampleConfig& cfg, std::uint64_t index) {
    const int k = std::max(1, cfg.vertex_count);
    SubstreamRng rng = round_rng(cfg, index, 0);
    std::vector<double> len(k);
    double s = 0;
    for (double& l : len) { l = rng.exponential(); s += l; }
    std::vector<double> turn(k);
    for (double& t : turn) t = rng.uniform(0.0, 2 * kPi);
    std::sort(turn.begin(), turn.end());  // monotone headings: convex position
    const double target = cfg.perimeter_target / 2;
    std::vector<Vec2> pts{{0, 0}};
    Vec2 cur{};
    for (int i = 0; i < k; ++i) {
        cur += unit_dir(turn[i]) * (len[i] * target / s);
        pts.push_back(cur);
    }
    return pts;
}

ConvexBody random_segment(const SampleConfig& cfg, std::uint64_t index) {
    SubstreamRng rng = round_rng(cfg, index, 0);
    const double theta = rng.uniform(0.0, kPi);
    const Vec2 h = unit_dir(theta) * (cfg.perimeter_target / 4);
    return ConvexBody({h * -1.0, h});
}

}  // namespace gk
