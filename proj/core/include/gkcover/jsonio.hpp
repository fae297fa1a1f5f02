#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gkcover/checks.hpp"
#include "gkcover/geometry.hpp"

namespace gk {

/// 17 significant digits, fixed formatting: reruns produce byte-identical
/// files and every double round-trips.
std::string format_double(double v);

// Geometry interchange: { "vertices": [[x, y], ...], "closed": true }.
std::string geometry_to_json(const ConvexBody& body);
std::string polyline_to_json(const std::vector<Vec2>& points, bool closed);

/// Throws std::runtime_error with an itemized message on malformed input.
ConvexBody geometry_from_json(const std::string& text);
std::vector<Vec2> polyline_from_json(const std::string& text,
                                     bool* closed = nullptr);

std::string report_to_json(const LemmaReport& r);
std::string reports_to_json(const std::vector<LemmaReport>& reports);

/// Summary table: lemma_id, measured, reference, pass.
std::string reports_to_csv(const std::vector<LemmaReport>& reports);

/// Everything needed to reproduce a command run; serialized next to every
/// output file.
struct RunManifest {
    std::string command;
    std::uint64_t seed = 0;
    long long budget = 0;
    int discretization = 0;
    double tolerance = 0.0;
    int jobs = 1;
    std::string results_path;
    std::string figures_path;
    std::string exit_code_policy = "0 all passed; 1 failures; 2 usage error";
};

std::string manifest_to_json(const RunManifest& m);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace gk
