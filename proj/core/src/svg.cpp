#include "gkcover/svg.hpp"

#include <cmath>
#include <sstream>

namespace gk {

namespace {

std::string px(double v) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(6);
    os << v;
    return os.str();
}

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            default: out += c; break;
        }
    }
    return out;
}

}  // namespace

SvgCanvas::SvgCanvas(double min_x, double min_y, double max_x, double max_y,
                     int pixel_width)
    : min_x_(min_x), min_y_(min_y), max_x_(max_x), max_y_(max_y),
      width_(pixel_width) {
    const double margin = 0.05 * std::max(max_x - min_x, max_y - min_y);
    min_x_ -= margin;
    min_y_ -= margin;
    max_x_ += margin;
    max_y_ += margin;
    scale_ = width_ / (max_x_ - min_x_);
    height_ = static_cast<int>(std::lround((max_y_ - min_y_) * scale_));
}

Vec2 SvgCanvas::map(Vec2 p) const {
    return {(p.x - min_x_) * scale_, (max_y_ - p.y) * scale_};
}

void SvgCanvas::polygon(const std::vector<Vec2>& points,
                        const std::string& stroke, const std::string& fill,
                        double stroke_width) {
    std::string d;
    for (const Vec2& p : points) {
        const Vec2 q = map(p);
        d += (d.empty() ? "" : " ") + px(q.x) + "," + px(q.y);
    }
    body_ += "  <polygon points=\"" + d + "\" stroke=\"" + stroke +
             "\" fill=\"" + fill + "\" fill-opacity=\"0.25\" stroke-width=\"" +
             px(stroke_width) + "\"/>\n";
}

void SvgCanvas::polyline(const std::vector<Vec2>& points,
                         const std::string& stroke, double stroke_width) {
    std::string d;
    for (const Vec2& p : points) {
        const Vec2 q = map(p);
        d += (d.empty() ? "" : " ") + px(q.x) + "," + px(q.y);
    }
    body_ += "  <polyline points=\"" + d + "\" stroke=\"" + stroke +
             "\" fill=\"none\" stroke-width=\"" + px(stroke_width) + "\"/>\n";
}

void SvgCanvas::line(Vec2 a, Vec2 b, const std::string& stroke,
                     double stroke_width, const std::string& dash) {
    const Vec2 p = map(a);
    const Vec2 q = map(b);
    body_ += "  <line x1=\"" + px(p.x) + "\" y1=\"" + px(p.y) + "\" x2=\"" +
             px(q.x) + "\" y2=\"" + px(q.y) + "\" stroke=\"" + stroke +
             "\" stroke-width=\"" + px(stroke_width) + "\"";
    if (!dash.empty()) body_ += " stroke-dasharray=\"" + dash + "\"";
    body_ += "/>\n";
}

void SvgCanvas::circle(Vec2 center, double radius, const std::string& stroke,
                       const std::string& fill, double stroke_width) {
    const Vec2 c = map(center);
    body_ += "  <circle cx=\"" + px(c.x) + "\" cy=\"" + px(c.y) + "\" r=\"" +
             px(radius * scale_) + "\" stroke=\"" + stroke + "\" fill=\"" +
             fill + "\" fill-opacity=\"0.25\" stroke-width=\"" +
             px(stroke_width) + "\"/>\n";
}

void SvgCanvas::dot(Vec2 center, const std::string& fill,
                    double pixel_radius) {
    const Vec2 c = map(center);
    body_ += "  <circle cx=\"" + px(c.x) + "\" cy=\"" + px(c.y) + "\" r=\"" +
             px(pixel_radius) + "\" fill=\"" + fill + "\"/>\n";
}

void SvgCanvas::text(Vec2 anchor, const std::string& label, int font_px) {
    const Vec2 p = map(anchor);
    body_ += "  <text x=\"" + px(p.x) + "\" y=\"" + px(p.y) +
             "\" font-family=\"sans-serif\" font-size=\"" +
             std::to_string(font_px) + "\">" + xml_escape(label) + "</text>\n";
}

std::string SvgCanvas::finish() const {
    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
           std::to_string(width_) + "\" height=\"" + std::to_string(height_) +
           "\" viewBox=\"0 0 " + std::to_string(width_) + " " +
           std::to_string(height_) + "\">\n";
    out += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out += body_;
    out += "</svg>\n";
    return out;
}

}  // namespace gk
