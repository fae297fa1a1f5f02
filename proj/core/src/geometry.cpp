#include "gkcover/geometry.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace gk {
namespace {

// Cross-product tolerance for hull construction, relative to coordinate
// magnitude so that uniformly scaled inputs canonicalize the same way.
double hull_eps(std::span<const Vec2> pts) {
    double m = 0.0;
    for (const Vec2& p : pts) m = std::max({m, std::abs(p.x), std::abs(p.y)});
    return 1e-13 * std::max(m * m, 1e-280);
}

std::vector<Vec2> monotone_chain(std::vector<Vec2> pts) {
    std::sort(pts.begin(), pts.end(), [](Vec2 a, Vec2 b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    pts.erase(std::unique(pts.begin(), pts.end(), [](Vec2 a, Vec2 b) {
        return a.x == b.x && a.y == b.y;
    }), pts.end());

    // Merge near-duplicates (clipping emits corner points twice with fp
    // jitter); a stray vertex a few ulp from a real one can otherwise trip
    // the collinearity pruning into popping a genuine corner.  The sort is
    // by x, so candidates sit inside a backward x-window.
    double m = 0.0;
    for (const Vec2& p : pts) m = std::max({m, std::abs(p.x), std::abs(p.y)});
    const double merge_eps = 1e-12 * std::max(m, 1e-300);
    std::vector<Vec2> kept;
    kept.reserve(pts.size());
    for (const Vec2& p : pts) {
        bool dup = false;
        for (auto it = kept.rbegin();
             it != kept.rend() && p.x - it->x <= merge_eps; ++it) {
            if (norm(p - *it) <= merge_eps) {
                dup = true;
                break;
            }
        }
        if (!dup) kept.push_back(p);
    }
    pts = std::move(kept);
    const std::size_t n = pts.size();
    if (n <= 2) return pts;

    const double eps = hull_eps(pts);
    std::vector<Vec2> h(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {  // lower hull
        while (k >= 2 && cross(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= eps) --k;
        h[k++] = pts[i];
    }
    for (std::size_t i = n - 1, t = k + 1; i-- > 0;) {  // upper hull
        while (k >= t && cross(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= eps) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);  // last point equals the first
    return h;
}

struct HalfPlane {
    Vec2 normal;    // points into the kept side
    double offset;  // keep dot(normal, x) >= offset
};

// Inward half-planes whose intersection is the body (degenerate bodies are
// described by four constraints).
std::vector<HalfPlane> half_planes_of(const ConvexBody& b) {
    std::vector<HalfPlane> hp;
    const auto& v = b.vertices();
    if (v.empty()) throw std::invalid_argument("half planes of empty body");
    if (v.size() == 1) {
        hp.push_back({{1, 0}, v[0].x});
        hp.push_back({{-1, 0}, -v[0].x});
        hp.push_back({{0, 1}, v[0].y});
        hp.push_back({{0, -1}, -v[0].y});
        return hp;
    }
    if (v.size() == 2) {
        Vec2 e = v[1] - v[0];
        const double len = norm(e);
        e = e * (1.0 / len);
        const Vec2 n = perp(e);
        hp.push_back({n, dot(n, v[0])});
        hp.push_back({-n, -dot(n, v[0])});
        hp.push_back({e, dot(e, v[0])});
        hp.push_back({-e, -dot(e, v[1])});
        return hp;
    }
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Vec2 a = v[i];
        const Vec2 e = v[(i + 1) % v.size()] - a;
        const Vec2 n = perp(e) * (1.0 / norm(e));
        hp.push_back({n, dot(n, a)});
    }
    return hp;
}

std::vector<Vec2> clip(const std::vector<Vec2>& poly, const HalfPlane& hp) {
    std::vector<Vec2> out;
    const std::size_t n = poly.size();
    if (n == 0) return out;
    if (n == 1) {
        if (dot(hp.normal, poly[0]) >= hp.offset) out.push_back(poly[0]);
        return out;
    }
    out.reserve(n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 a = poly[i];
        const Vec2 b = poly[(i + 1) % n];
        const double da = dot(hp.normal, a) - hp.offset;
        const double db = dot(hp.normal, b) - hp.offset;
        if (da >= 0.0) out.push_back(a);
        if ((da > 0.0 && db < 0.0) || (da < 0.0 && db > 0.0)) {
            out.push_back(a + (b - a) * (da / (da - db)));
        }
    }
    return out;
}

}  // namespace

double point_segment_distance(Vec2 p, Vec2 a, Vec2 b) {
    const Vec2 e = b - a;
    const double l2 = norm2(e);
    if (l2 == 0.0) return norm(p - a);
    const double t = std::clamp(dot(p - a, e) / l2, 0.0, 1.0);
    return norm(p - (a + e * t));
}

ConvexBody::ConvexBody(std::vector<Vec2> points) {
    if (points.empty()) throw std::invalid_argument("ConvexBody needs at least one point");
    v_ = monotone_chain(std::move(points));
}

ConvexBody ConvexBody::hull(std::span<const Vec2> points) {
    return ConvexBody(std::vector<Vec2>(points.begin(), points.end()));
}

double ConvexBody::support(Vec2 dir) const {
    if (v_.empty()) throw std::invalid_argument("support of empty body");
    double best = -std::numeric_limits<double>::infinity();
    for (const Vec2& p : v_) best = std::max(best, dot(dir, p));
    return best;
}

Slab ConvexBody::width_at(double orientation) const {
    const Vec2 n = unit_dir(orientation + kPi / 2);
    const double hi = support(n);
    const double lo = -support(-n);
    return Slab{orientation, hi - lo, lo};
}

double ConvexBody::perimeter() const {
    if (v_.size() <= 1) return 0.0;
    if (v_.size() == 2) return 2.0 * norm(v_[1] - v_[0]);
    double p = 0.0;
    for (std::size_t i = 0; i < v_.size(); ++i)
        p += norm(v_[(i + 1) % v_.size()] - v_[i]);
    return p;
}

double ConvexBody::area() const {
    if (v_.size() <= 2) return 0.0;
    double a = 0.0;
    for (std::size_t i = 0; i < v_.size(); ++i)
        a += cross(v_[i], v_[(i + 1) % v_.size()]);
    return 0.5 * a;
}

Vec2 ConvexBody::centroid() const {
    if (v_.empty()) throw std::invalid_argument("centroid of empty body");
    if (v_.size() == 1) return v_[0];
    if (v_.size() == 2) return (v_[0] + v_[1]) * 0.5;
    double a = 0.0;
    Vec2 c{};
    for (std::size_t i = 0; i < v_.size(); ++i) {
        const Vec2 p = v_[i], q = v_[(i + 1) % v_.size()];
        const double w = cross(p, q);
        a += w;
        c += (p + q) * w;
    }
    return c * (1.0 / (3.0 * a));
}

double ConvexBody::diameter() const {
    const std::size_t n = v_.size();
    if (n <= 1) return 0.0;
    if (n == 2) return norm(v_[1] - v_[0]);
    double best = 0.0;
    std::size_t k = 1;
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 a = v_[i], b = v_[(i + 1) % n];
        while (std::abs(cross(b - a, v_[(k + 1) % n] - a)) >
               std::abs(cross(b - a, v_[k] - a)))
            k = (k + 1) % n;
        best = std::max({best, norm(v_[k] - a), norm(v_[k] - b)});
    }
    return best;
}

ConvexBody ConvexBody::transformed(double angle, Vec2 translation) const {
    std::vector<Vec2> pts;
    pts.reserve(v_.size());
    for (const Vec2& p : v_) pts.push_back(gk::rotated(p, angle) + translation);
    return ConvexBody(std::move(pts));
}

ConvexBody ConvexBody::scaled(double factor, Vec2 center) const {
    std::vector<Vec2> pts;
    pts.reserve(v_.size());
    for (const Vec2& p : v_) pts.push_back(center + (p - center) * factor);
    return ConvexBody(std::move(pts));
}

ConvexBody ConvexBody::reflected(Vec2 line_point, double line_angle) const {
    const double c = std::cos(2 * line_angle), s = std::sin(2 * line_angle);
    std::vector<Vec2> pts;
    pts.reserve(v_.size());
    for (const Vec2& p : v_) {
        const Vec2 d = p - line_point;
        pts.push_back(line_point + Vec2{c * d.x + s * d.y, s * d.x - c * d.y});
    }
    return ConvexBody(std::move(pts));
}

ConvexBody intersect(std::span<const ConvexBody> bodies) {
    if (bodies.empty()) throw std::invalid_argument("intersect of no bodies");
    for (const ConvexBody& b : bodies)
        if (b.empty()) return ConvexBody{};
    std::vector<Vec2> poly = bodies[0].vertices();
    for (std::size_t i = 1; i < bodies.size(); ++i) {
        for (const HalfPlane& hp : half_planes_of(bodies[i])) {
            poly = clip(poly, hp);
            if (poly.empty()) return ConvexBody{};
        }
    }
    return ConvexBody(std::move(poly));
}

double containment_violation(const ConvexBody& container, const ConvexBody& body) {
    if (body.empty()) return -std::numeric_limits<double>::infinity();
    if (container.empty()) return std::numeric_limits<double>::infinity();
    const auto& cv = container.vertices();
    double worst = -std::numeric_limits<double>::infinity();
    if (cv.size() == 1) {
        for (const Vec2& p : body.vertices()) worst = std::max(worst, norm(p - cv[0]));
        return worst;
    }
    if (cv.size() == 2) {
        for (const Vec2& p : body.vertices())
            worst = std::max(worst, point_segment_distance(p, cv[0], cv[1]));
        return worst;
    }
    for (const Vec2& p : body.vertices()) {
        double depth = -std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < cv.size(); ++i) {
            const Vec2 a = cv[i];
            const Vec2 e = cv[(i + 1) % cv.size()] - a;
            const Vec2 n_out = Vec2{e.y, -e.x} * (1.0 / norm(e));
            depth = std::max(depth, dot(n_out, p - a));
        }
        worst = std::max(worst, depth);
    }
    return worst;
}

HomothetFit min_homothet(const ConvexBody& triangle, const ConvexBody& body) {
    if (triangle.size() != 3)
        throw std::invalid_argument("min_homothet template must be a triangle");
    if (body.empty())
        throw std::invalid_argument("min_homothet of empty body");
    const auto& tv = triangle.vertices();
    double m[3][3], rhs[3];
    for (int j = 0; j < 3; ++j) {
        const Vec2 a = tv[j];
        const Vec2 e = tv[(j + 1) % 3] - a;
        const Vec2 n_out = Vec2{e.y, -e.x} * (1.0 / norm(e));
        m[j][0] = dot(n_out, a);  // support of the template at its own normal
        m[j][1] = n_out.x;
        m[j][2] = n_out.y;
        rhs[j] = body.support(n_out);
    }
    const double det =
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
        m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
        m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    if (std::abs(det) < 1e-250)
        throw std::invalid_argument("min_homothet template is degenerate");
    auto solve_col = [&](int col) {
        double t[3][3];
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) t[r][c] = (c == col) ? rhs[r] : m[r][c];
        return (t[0][0] * (t[1][1] * t[2][2] - t[1][2] * t[2][1]) -
                t[0][1] * (t[1][0] * t[2][2] - t[1][2] * t[2][0]) +
                t[0][2] * (t[1][0] * t[2][1] - t[1][1] * t[2][0])) / det;
    };
    HomothetFit fit;
    fit.scale = std::max(solve_col(0), 0.0);
    fit.translation = {solve_col(1), solve_col(2)};
    return fit;
}

namespace {

// Edge vectors in CCW order together with the index of the vertex the
// minimal-angle edge leaves from ("wrap" vertex).
struct EdgeChain {
    std::vector<Vec2> edges;    // sorted by angle in [0, 2*pi)
    std::vector<double> angles;
    Vec2 start;
};

double edge_angle(Vec2 e) {
    double a = std::atan2(e.y, e.x);
    if (a < 0) a += 2 * kPi;
    return a;
}

EdgeChain edge_chain(const ConvexBody& b) {
    EdgeChain ch;
    const auto& v = b.vertices();
    if (v.size() == 1) {
        ch.start = v[0];
        return ch;
    }
    std::vector<Vec2> raw;
    if (v.size() == 2) {
        raw = {v[1] - v[0], v[0] - v[1]};
    } else {
        for (std::size_t i = 0; i < v.size(); ++i)
            raw.push_back(v[(i + 1) % v.size()] - v[i]);
    }
    std::size_t wrap = 0;
    double best = std::numeric_limits<double>::infinity();
    std::vector<double> ang(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        ang[i] = edge_angle(raw[i]);
        if (ang[i] < best) { best = ang[i]; wrap = i; }
    }
    ch.start = v[wrap % v.size()];
    for (std::size_t i = 0; i < raw.size(); ++i) {
        const std::size_t j = (wrap + i) % raw.size();
        ch.edges.push_back(raw[j]);
        ch.angles.push_back(ang[j]);
    }
    return ch;
}

}  // namespace

ConvexBody minkowski_sum(const ConvexBody& a, const ConvexBody& b) {
    if (a.empty() || b.empty())
        throw std::invalid_argument("minkowski_sum of empty body");
    const EdgeChain ca = edge_chain(a), cb = edge_chain(b);
    std::vector<Vec2> pts;
    Vec2 cur = ca.start + cb.start;
    pts.push_back(cur);
    std::size_t i = 0, j = 0;
    while (i < ca.edges.size() || j < cb.edges.size()) {
        Vec2 e;
        if (j >= cb.edges.size() ||
            (i < ca.edges.size() && ca.angles[i] <= cb.angles[j])) {
            e = ca.edges[i++];
        } else {
            e = cb.edges[j++];
        }
        cur += e;
        pts.push_back(cur);
    }
    return ConvexBody(std::move(pts));
}

ConvexBody minkowski_symmetrize(const ConvexBody& a) {
    return minkowski_sum(a, a.transformed(kPi, {})).scaled(0.5);
}

}  // namespace gk
