#pragma once

#include <string>
#include <vector>

#include "gkcover/geometry.hpp"

namespace gk {

/// Deterministic SVG writer: fixed canvas, y axis flipped to mathematical
/// orientation, all coordinates rounded to 6 decimals.
class SvgCanvas {
public:
    SvgCanvas(double min_x, double min_y, double max_x, double max_y,
              int pixel_width = 640);

    void polygon(const std::vector<Vec2>& points, const std::string& stroke,
                 const std::string& fill = "none", double stroke_width = 1.5);
    void polyline(const std::vector<Vec2>& points, const std::string& stroke,
                  double stroke_width = 1.5);
    void line(Vec2 a, Vec2 b, const std::string& stroke,
              double stroke_width = 1.0, const std::string& dash = "");
    void circle(Vec2 center, double radius, const std::string& stroke,
                const std::string& fill = "none", double stroke_width = 1.0);
    void dot(Vec2 center, const std::string& fill, double pixel_radius = 3.0);
    void text(Vec2 anchor, const std::string& label, int font_px = 14);

    std::string finish() const;

private:
    Vec2 map(Vec2 p) const;

    double min_x_, min_y_, max_x_, max_y_;
    int width_, height_;
    double scale_;
    std::string body_;
};

}  // namespace gk
