#pragma once

#include <cstdint>
#include <vector>

#include "gkcover/geometry.hpp"

namespace gk {

/// Counter-based generator: every draw is a pure function of
/// (seed, stream, counter), so sample i can be regenerated in isolation and
/// runs parallelize without coordination.
class SubstreamRng {
public:
    SubstreamRng(std::uint64_t seed, std::uint64_t stream);

    std::uint64_t next_u64();
    double next_double();  // uniform in [0, 1)
    double uniform(double a, double b) { return a + (b - a) * next_double(); }
    double exponential();  // unit rate

private:
    std::uint64_t key_ = 0;
    std::uint64_t counter_ = 0;
};

enum class SampleFamily { ConvexCurve, Triangle, Worm, Segment };

struct SampleConfig {
    std::uint64_t seed = 0;
    int vertex_count = 64;
    double perimeter_target = 2.0;
    SampleFamily family = SampleFamily::ConvexCurve;
    double min_angle = 1e-3;  // triangle rejection floor
};

/// Convex polygon with `vertex_count` edges of sorted random directions and
/// random lengths, closed up by a least-squares correction and rescaled so
/// the perimeter is the target exactly (within 1e-12).
ConvexBody random_convex_curve(const SampleConfig& cfg, std::uint64_t index);

/// Triangle with perimeter exactly the target, side lengths Dirichlet(1,1,1);
/// resamples until the minimum interior angle reaches cfg.min_angle.
ConvexBody random_triangle(const SampleConfig& cfg, std::uint64_t index);

/// Triangle with perimeter the target whose smallest interior angle lands in
/// [cfg.min_angle, 2*cfg.min_angle): the thin end of the family.
ConvexBody near_degenerate_triangle(const SampleConfig& cfg, std::uint64_t index);

/// Open polyline ("worm") of total length perimeter_target / 2.
std::vector<Vec2> random_worm(const SampleConfig& cfg, std::uint64_t index);

/// Segment of length perimeter_target / 2 at a uniform slope, centered at the
/// origin; as a degenerate body its perimeter is the full target.
ConvexBody random_segment(const SampleConfig& cfg, std::uint64_t index);

}  // namespace gk
