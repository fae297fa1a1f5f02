#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <string>

#include "gkcover/checks.hpp"
#include "gkcover/jsonio.hpp"
#include "gkcover/svg.hpp"

using namespace gk;

TEST_CASE("doubles survive a serialization round trip bitwise") {
    for (double v : {0.0, 1.0 / 3.0, kPi, 0.1, -2.718281828459045,
                     1e-300, 6.02e23, 0.56339523354971216}) {
        double back = std::stod(format_double(v));
        CHECK(back == v);
    }
}

TEST_CASE("geometry json round trip preserves every vertex bitwise") {
    ConvexBody b({{0.1, 0.2}, {1.0 / 3.0, -0.7}, {kPi / 10, 0.9}});
    std::string j = geometry_to_json(b);
    CHECK(j.find("\"vertices\"") != std::string::npos);
    CHECK(j.find("\"closed\": true") != std::string::npos);

    ConvexBody back = geometry_from_json(j);
    REQUIRE(back.size() == b.size());
    for (std::size_t i = 0; i < b.size(); ++i) {
        CHECK(back.vertices()[i].x == b.vertices()[i].x);
        CHECK(back.vertices()[i].y == b.vertices()[i].y);
    }

    bool closed = true;
    std::vector<Vec2> worm = {{0, 0}, {0.5, 0}, {0.8, 0.4}};
    auto pts = polyline_from_json(polyline_to_json(worm, false), &closed);
    CHECK_FALSE(closed);
    REQUIRE(pts.size() == worm.size());
    CHECK(pts[2].x == worm[2].x);
}

TEST_CASE("malformed geometry is rejected with an itemized message") {
    CHECK_THROWS_AS(geometry_from_json("not json"), std::runtime_error);
    CHECK_THROWS_AS(geometry_from_json("{}"), std::runtime_error);
    CHECK_THROWS_AS(geometry_from_json(R"({"vertices": 5})"), std::runtime_error);
    CHECK_THROWS_AS(geometry_from_json(R"({"vertices": [[1]]})"),
                    std::runtime_error);
    CHECK_THROWS_AS(geometry_from_json(R"({"vertices": [[1, "a"]]})"),
                    std::runtime_error);
    try {
        geometry_from_json(R"({"vertices": [[0, 0], [1]]})");
        CHECK(false);
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()).find("vertex") != std::string::npos);
    }
}

TEST_CASE("report serialization carries the fields the CLI consumes") {
    LemmaReport r;
    r.lemma_id = "demo-check";
    r.measured = 1.25;
    r.reference = 1.0;
    r.tolerance = 0.5;
    r.direction = BoundKind::AtMost;
    r.pass = true;
    r.samples = 42;
    r.witness.push_back({"curve", {{0, 0}, {1, 0}}});
    r.note = "just a demo";

    std::string j = report_to_json(r);
    for (const char* key :
         {"\"lemma_id\"", "\"measured\"", "\"reference\"", "\"tolerance\"",
          "\"direction\"", "\"pass\"", "\"samples\"", "\"witness\"", "\"note\""})
        CHECK(j.find(key) != std::string::npos);
    CHECK(j.find("at-most") != std::string::npos);
    CHECK(j.find("demo-check") != std::string::npos);

    std::vector<LemmaReport> list = {r, r};
    std::string csv = reports_to_csv(list);
    CHECK(csv.rfind("lemma_id,measured,reference,pass", 0) == 0);
    int lines = 0;
    for (char c : csv)
        if (c == '\n') ++lines;
    CHECK(lines == 3);
    CHECK(csv.find("demo-check") != std::string::npos);
}

TEST_CASE("manifest serialization and rerun equality") {
    RunManifest m;
    m.command = "verify --all";
    m.seed = 7;
    m.budget = 1000;
    m.discretization = 4096;
    m.tolerance = 1e-7;
    m.jobs = 4;
    m.results_path = "out/results.json";

    std::string a = manifest_to_json(m);
    std::string b = manifest_to_json(m);
    CHECK(a == b);
    CHECK(a.find("\"seed\": 7") != std::string::npos);
    CHECK(a.find("verify --all") != std::string::npos);
    CHECK(a.find("0 all passed; 1 failures; 2 usage error") != std::string::npos);
}

TEST_CASE("text files round trip through the helpers") {
    auto path = std::filesystem::temp_directory_path() / "gkcover_io_test.txt";
    write_text_file(path.string(), "alpha\nbeta\n");
    CHECK(read_text_file(path.string()) == "alpha\nbeta\n");
    std::filesystem::remove(path);
    CHECK_THROWS_AS(read_text_file((path / "missing").string()),
                    std::runtime_error);
}

TEST_CASE("svg canvas emits a closed well-formed document") {
    SvgCanvas canvas(-1, -1, 1, 1, 320);
    canvas.polygon({{-0.5, -0.5}, {0.5, -0.5}, {0, 0.5}}, "#336699", "#336699");
    canvas.polyline({{-1, 0}, {1, 0}}, "#000000");
    canvas.line({-1, -1}, {1, 1}, "#888888", 1.0, "4 2");
    canvas.circle({0, 0}, 0.25, "#cc0000");
    canvas.dot({0.1, 0.1}, "#00aa00");
    canvas.text({-0.9, 0.9}, "label");
    std::string doc = canvas.finish();

    CHECK(doc.rfind("<svg", 0) == 0);
    CHECK(doc.find("</svg>") != std::string::npos);
    CHECK(doc.find("<polygon") != std::string::npos);
    CHECK(doc.find("<polyline") != std::string::npos);
    CHECK(doc.find("<circle") != std::string::npos);
    CHECK(doc.find("label") != std::string::npos);
    // y axis points up: the text anchor near the top maps to a small pixel y.
    CHECK(doc.find("width=\"320\"") != std::string::npos);
}
