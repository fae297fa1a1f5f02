#include "gkcover/jsonio.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace gk {

namespace {

using nlohmann::json;

const char* direction_name(BoundKind direction) {
    switch (direction) {
        case BoundKind::TwoSided: return "two-sided";
        case BoundKind::AtLeast: return "at-least";
        case BoundKind::AtMost: return "at-most";
    }
    return "unknown";
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += c; break;
        }
    }
    return out;
}

// Emission is hand-rolled so the number format stays under our control;
// nlohmann/json is used for parsing only.
void emit_points(std::ostringstream& os, const std::vector<Vec2>& points) {
    os << "[";
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (i) os << ", ";
        os << "[" << format_double(points[i].x) << ", "
           << format_double(points[i].y) << "]";
    }
    os << "]";
}

void emit_report(std::ostringstream& os, const LemmaReport& r,
                 const std::string& indent) {
    os << indent << "{\n";
    os << indent << "  \"lemma_id\": \"" << json_escape(r.lemma_id) << "\",\n";
    os << indent << "  \"measured\": " << format_double(r.measured) << ",\n";
    os << indent << "  \"reference\": " << format_double(r.reference) << ",\n";
    os << indent << "  \"tolerance\": " << format_double(r.tolerance) << ",\n";
    os << indent << "  \"direction\": \"" << direction_name(r.direction)
       << "\",\n";
    os << indent << "  \"pass\": " << (r.pass ? "true" : "false") << ",\n";
    os << indent << "  \"samples\": " << r.samples << ",\n";
    os << indent << "  \"witness\": [";
    for (std::size_t i = 0; i < r.witness.size(); ++i) {
        if (i) os << ", ";
        os << "{\"label\": \"" << json_escape(r.witness[i].first)
           << "\", \"vertices\": ";
        emit_points(os, r.witness[i].second);
        os << "}";
    }
    os << "],\n";
    os << indent << "  \"note\": \"" << json_escape(r.note) << "\"\n";
    os << indent << "}";
}

std::vector<Vec2> parse_points(const json& j, bool require_closed,
                               bool* closed_out) {
    if (!j.is_object())
        throw std::runtime_error("geometry: top level is not an object");
    if (!j.contains("vertices"))
        throw std::runtime_error("geometry: missing \"vertices\"");
    const json& verts = j.at("vertices");
    if (!verts.is_array())
        throw std::runtime_error("geometry: \"vertices\" is not an array");
    std::vector<Vec2> pts;
    pts.reserve(verts.size());
    for (std::size_t i = 0; i < verts.size(); ++i) {
        const json& p = verts.at(i);
        if (!p.is_array() || p.size() != 2 || !p.at(0).is_number() ||
            !p.at(1).is_number())
            throw std::runtime_error("geometry: vertex " + std::to_string(i) +
                                     " is not a numeric [x, y] pair");
        pts.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
    }
    bool closed = true;
    if (j.contains("closed")) {
        if (!j.at("closed").is_boolean())
            throw std::runtime_error("geometry: \"closed\" is not a boolean");
        closed = j.at("closed").get<bool>();
    }
    if (require_closed && !closed)
        throw std::runtime_error("geometry: expected a closed curve");
    if (closed_out) *closed_out = closed;
    return pts;
}

json parse_or_throw(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw std::runtime_error("geometry: not valid JSON");
    return j;
}

}  // namespace

std::string format_double(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

std::string geometry_to_json(const ConvexBody& body) {
    return polyline_to_json(body.vertices(), true);
}

std::string polyline_to_json(const std::vector<Vec2>& points, bool closed) {
    std::ostringstream os;
    os << "{\"vertices\": ";
    emit_points(os, points);
    os << ", \"closed\": " << (closed ? "true" : "false") << "}";
    return os.str();
}

ConvexBody geometry_from_json(const std::string& text) {
    const json j = parse_or_throw(text);
    std::vector<Vec2> pts = parse_points(j, true, nullptr);
    if (pts.empty())
        throw std::runtime_error("geometry: empty vertex list");
    return ConvexBody(std::move(pts));
}

std::vector<Vec2> polyline_from_json(const std::string& text, bool* closed) {
    const json j = parse_or_throw(text);
    return parse_points(j, false, closed);
}

std::string report_to_json(const LemmaReport& r) {
    std::ostringstream os;
    emit_report(os, r, "");
    os << "\n";
    return os.str();
}

std::string reports_to_json(const std::vector<LemmaReport>& reports) {
    std::ostringstream os;
    os << "[\n";
    for (std::size_t i = 0; i < reports.size(); ++i) {
        emit_report(os, reports[i], "  ");
        os << (i + 1 < reports.size() ? ",\n" : "\n");
    }
    os << "]\n";
    return os.str();
}

std::string reports_to_csv(const std::vector<LemmaReport>& reports) {
    std::ostringstream os;
    os << "lemma_id,measured,reference,pass\n";
    for (const LemmaReport& r : reports)
        os << r.lemma_id << "," << format_double(r.measured) << ","
           << format_double(r.reference) << "," << (r.pass ? "pass" : "fail")
           << "\n";
    return os.str();
}

std::string manifest_to_json(const RunManifest& m) {
    std::ostringstream os;
    os << "{\n";
    os << "  \"command\": \"" << json_escape(m.command) << "\",\n";
    os << "  \"seed\": " << m.seed << ",\n";
    os << "  \"budget\": " << m.budget << ",\n";
    os << "  \"discretization\": " << m.discretization << ",\n";
    os << "  \"tolerance\": " << format_double(m.tolerance) << ",\n";
    os << "  \"jobs\": " << m.jobs << ",\n";
    os << "  \"results_path\": \"" << json_escape(m.results_path) << "\",\n";
    os << "  \"figures_path\": \"" << json_escape(m.figures_path) << "\",\n";
    os << "  \"exit_code_policy\": \"" << json_escape(m.exit_code_policy)
       << "\"\n";
    os << "}\n";
    return os.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open for writing: " + path);
    out << content;
    if (!out)
        throw std::runtime_error("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace gk
