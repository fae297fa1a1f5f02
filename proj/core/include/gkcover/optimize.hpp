#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

namespace gk {

struct NelderMeadResult {
    std::vector<double> x;
    double value = 0.0;
    int iterations = 0;
    bool converged = false;
};

/// Plain Nelder-Mead downhill simplex; good enough for the low-dimensional,
/// possibly kinked objectives used here.
inline NelderMeadResult nelder_mead(
    const std::function<double(const std::vector<double>&)>& f,
    std::vector<double> x0, double step, int max_iter = 4000,
    double ftol = 1e-12) {
    const std::size_t n = x0.size();
    std::vector<std::vector<double>> pts(n + 1, x0);
    for (std::size_t i = 0; i < n; ++i) pts[i + 1][i] += step;
    std::vector<double> vals(n + 1);
    for (std::size_t i = 0; i <= n; ++i) vals[i] = f(pts[i]);

    NelderMeadResult res;
    std::vector<std::size_t> order(n + 1);
    for (res.iterations = 0; res.iterations < max_iter; ++res.iterations) {
        std::iota(order.begin(), order.end(), 0u);
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
        const std::size_t lo = order[0], hi = order[n], nh = order[n - 1];
        if (vals[hi] - vals[lo] <= ftol) {
            res.converged = true;
            break;
        }
        std::vector<double> cen(n, 0.0);
        for (std::size_t i = 0; i <= n; ++i)
            if (i != hi)
                for (std::size_t j = 0; j < n; ++j) cen[j] += pts[i][j] / n;
        auto blend = [&](double a) {
            std::vector<double> p(n);
            for (std::size_t j = 0; j < n; ++j)
                p[j] = cen[j] + a * (pts[hi][j] - cen[j]);
            return p;
        };
        std::vector<double> refl = blend(-1.0);
        const double fr = f(refl);
        if (fr < vals[order[0]]) {
            std::vector<double> exp_ = blend(-2.0);
            const double fe = f(exp_);
            pts[hi] = fe < fr ? exp_ : refl;
            vals[hi] = std::min(fe, fr);
        } else if (fr < vals[nh]) {
            pts[hi] = refl;
            vals[hi] = fr;
        } else {
            std::vector<double> con = blend(fr < vals[hi] ? -0.5 : 0.5);
            const double fc = f(con);
            if (fc < std::min(fr, vals[hi])) {
                pts[hi] = con;
                vals[hi] = fc;
            } else {
                for (std::size_t i = 0; i <= n; ++i) {  // shrink toward best
                    if (i == lo) continue;
                    for (std::size_t j = 0; j < n; ++j)
                        pts[i][j] = pts[lo][j] + 0.5 * (pts[i][j] - pts[lo][j]);
                    vals[i] = f(pts[i]);
                }
            }
        }
    }
    const std::size_t best =
        std::min_element(vals.begin(), vals.end()) - vals.begin();
    res.x = pts[best];
    res.value = vals[best];
    return res;
}

}  // namespace gk
