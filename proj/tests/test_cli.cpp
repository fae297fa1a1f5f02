#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <string>
#include <vector>

#include "gkcover/geometry.hpp"
#include "gkcover/jsonio.hpp"

namespace fs = std::filesystem;
using namespace gk;

namespace {

int run_cli(const std::string& args) {
    std::string cmd = std::string(GKCOVER_CLI_PATH) + " " + args +
                      " >/dev/null 2>&1";
    int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    return WEXITSTATUS(status);
}

struct TempDir {
    fs::path path;
    TempDir(const char* tag) {
        path = fs::temp_directory_path() /
               (std::string("gkcover_cli_") + tag);
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string str() const { return path.string(); }
};

}  // namespace

TEST_CASE("shapes subcommand writes geometry, metadata and a figure") {
    TempDir dir("shapes");
    CHECK(run_cli("shapes delta1 --out " + dir.str()) == 0);
    CHECK(fs::exists(dir.path / "delta1.json"));
    CHECK(fs::exists(dir.path / "delta1.meta.json"));
    CHECK(fs::exists(dir.path / "delta1.svg"));

    ConvexBody tri =
        geometry_from_json(read_text_file((dir.path / "delta1.json").string()));
    CHECK(tri.size() == 3);

    std::string meta = read_text_file((dir.path / "delta1.meta.json").string());
    CHECK(meta.find("0.57735026918962") != std::string::npos);

    CHECK(run_cli("shapes gamma-t --n 256 --out " + dir.str()) == 0);
    ConvexBody gt = geometry_from_json(
        read_text_file((dir.path / "gamma-t.json").string()));
    CHECK(gt.size() > 100);
}

TEST_CASE("place subcommand: success exit, failure exit, thread invariance") {
    TempDir dir("place");
    CHECK(run_cli("place delta1 --k 2 --random 60 --seed 3 --out " +
                  dir.str()) == 0);
    std::string summary =
        read_text_file((dir.path / "place-delta1.json").string());
    CHECK(summary.find("\"total\": 60") != std::string::npos);
    CHECK(summary.find("\"failures\": 0") != std::string::npos);
    CHECK(fs::exists(dir.path / "place-delta1.manifest.json"));

    TempDir jobs1("jobs1"), jobs8("jobs8");
    CHECK(run_cli("place gamma3 --k 3 --random 40 --seed 5 --jobs 1 --out " +
                  jobs1.str()) == 0);
    CHECK(run_cli("place gamma3 --k 3 --random 40 --seed 5 --jobs 8 --out " +
                  jobs8.str()) == 0);
    CHECK(read_text_file((jobs1.path / "place-gamma3.json").string()) ==
          read_text_file((jobs8.path / "place-gamma3.json").string()));

    // A perimeter-2 circle cannot be placed in the unit-leg right isosceles
    // triangle, so the run reports a failure through the exit code.
    std::vector<Vec2> circle;
    for (int i = 0; i < 64; ++i)
        circle.push_back((1 / kPi) * unit_dir(2 * kPi * i / 64));
    TempDir rej("reject");
    fs::path input = rej.path / "circle.json";
    write_text_file(input.string(), geometry_to_json(ConvexBody(circle)));
    CHECK(run_cli("place right-isosceles --k 4 --input " + input.string() +
                  " --out " + rej.str()) == 1);

    CHECK(run_cli("place delta1 --k 2 --out " + dir.str()) == 2);  // no work
}

TEST_CASE("verify subcommand: outputs, rerun byte equality, unknown id") {
    TempDir a("verify_a"), b("verify_b");
    CHECK(run_cli("verify tiling --budget 500 --seed 11 --out " + a.str()) == 0);
    CHECK(fs::exists(a.path / "verify-tiling.json"));
    CHECK(fs::exists(a.path / "verify-tiling.csv"));
    CHECK(fs::exists(a.path / "verify-tiling.manifest.json"));

    std::string csv = read_text_file((a.path / "verify-tiling.csv").string());
    CHECK(csv.rfind("lemma_id,measured,reference,pass", 0) == 0);
    const auto row_start = csv.find('\n') + 1;
    const auto row_end = csv.find('\n', row_start);
    const std::string row = csv.substr(row_start, row_end - row_start);
    CHECK(row.rfind("slab-tiling-sweep,", 0) == 0);
    REQUIRE(row.size() > 5);
    CHECK(row.substr(row.size() - 5) == ",pass");

    std::string manifest =
        read_text_file((a.path / "verify-tiling.manifest.json").string());
    CHECK(manifest.find("\"budget\": 500") != std::string::npos);
    CHECK(manifest.find("\"seed\": 11") != std::string::npos);

    CHECK(run_cli("verify tiling --budget 500 --seed 11 --out " + b.str()) == 0);
    CHECK(read_text_file((a.path / "verify-tiling.json").string()) ==
          read_text_file((b.path / "verify-tiling.json").string()));
    CHECK(read_text_file((a.path / "verify-tiling.csv").string()) ==
          read_text_file((b.path / "verify-tiling.csv").string()));

    CHECK(run_cli("verify no-such-lemma --out " + a.str()) == 2);
}

TEST_CASE("figures subcommand emits the three stock diagrams") {
    TempDir dir("figures");
    CHECK(run_cli("figures --out " + dir.str()) == 0);
    for (const char* name :
         {"tiling.svg", "perimeter-identity.svg", "shaved-window.svg"}) {
        REQUIRE(fs::exists(dir.path / name));
        std::string doc = read_text_file((dir.path / name).string());
        CHECK(doc.rfind("<svg", 0) == 0);
        CHECK(doc.find("</svg>") != std::string::npos);
    }
    CHECK(fs::exists(dir.path / "figures.manifest.json"));
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("") == 2);
    CHECK(run_cli("unknown-subcommand") == 2);
    CHECK(run_cli("shapes not-a-shape") == 2);
    CHECK(run_cli("place delta1") == 2);  // missing required --k
}
