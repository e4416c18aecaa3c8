#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "doctest.h"

#include "hfk/errors.hpp"
#include "hfk/fixtures.hpp"
#include "hfk/moves.hpp"
#include "test_helpers.hpp"

using namespace hfk;
using hfk_test::fixture_path;
using hfk_test::poly;

namespace {

struct CommandResult {
    int exit_code = -1;
    std::string output;
};

CommandResult run_cli(const std::string& args) {
    std::string cmd = std::string(HFK_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CommandResult result;
    char buf[4096];
    while (size_t got = fread(buf, 1, sizeof buf, pipe)) result.output.append(buf, got);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

} // namespace

TEST_CASE("fixture records round-trip through JSON") {
    std::string text = hfk_test::read_file(fixture_path("fixtures.json"));
    auto records = parse_fixtures(text);
    REQUIRE(records.size() >= 6);
    std::string again = serialize_fixtures(records);
    CHECK(parse_fixtures(again).size() == records.size());
    auto reparsed = parse_fixtures(again);
    for (size_t i = 0; i < records.size(); ++i) {
        CHECK(reparsed[i].name == records[i].name);
        CHECK(reparsed[i].hfk == records[i].hfk);
        CHECK(reparsed[i].tau == records[i].tau);
        CHECK(reparsed[i].grid.has_value() == records[i].grid.has_value());
    }
}

TEST_CASE("bundled fixtures verify") {
    auto records = parse_fixtures(hfk_test::read_file(fixture_path("fixtures.json")));
    bool saw_skip = false;
    for (const auto& rec : records) {
        VerifyRow row = verify_fixture(rec, false);
        if (row.status == VerifyStatus::Skip) {
            saw_skip = true;
            continue;
        }
        INFO(rec.name << ": " << row.detail);
        CHECK(row.status == VerifyStatus::Pass);
    }
    CHECK(saw_skip); // the grid-less record exercises the skip path
}

TEST_CASE("corrupted fixture fails with a term-level diff") {
    auto records = parse_fixtures(hfk_test::read_file(fixture_path("fixtures.json")));
    FixtureRecord rec = records[1]; // T(2,3), has a grid
    REQUIRE(rec.grid.has_value());
    rec.hfk.add(0, 1, 1); // corrupt one dimension
    VerifyRow row = verify_fixture(rec, false);
    CHECK(row.status == VerifyStatus::Fail);
    CHECK(row.detail.find("a=0") != std::string::npos);
}

TEST_CASE("verification accepts mirrored tables when allowed") {
    auto records = parse_fixtures(hfk_test::read_file(fixture_path("fixtures.json")));
    FixtureRecord rec = records[1];
    REQUIRE(rec.grid.has_value());
    rec.grid = mirror_grid(*rec.grid);
    CHECK(verify_fixture(rec, false).status == VerifyStatus::Fail);
    VerifyRow row = verify_fixture(rec, true);
    CHECK(row.status == VerifyStatus::Pass);
    CHECK(row.detail.find("mirror") != std::string::npos);
}

TEST_CASE("cli compute prints the homology polynomial") {
    auto r = run_cli("compute --grid " + fixture_path("unknot2.grid") + " --tau");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("HFK^ = 1") != std::string::npos);
    CHECK(r.output.find("tau  = 0") != std::string::npos);
}

TEST_CASE("cli compute json output is schema-stable") {
    auto r = run_cli("compute --grid " + fixture_path("t23_5.grid") + " --tau --e2 --json");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"hfk\"") != std::string::npos);
    CHECK(r.output.find("\"tau\": -1") != std::string::npos);
    CHECK(r.output.find("\"e2\"") != std::string::npos);
    // the hfk list round-trips through the poly parser
    auto start = r.output.find("\"hfk\": [");
    auto end = r.output.find(']', start);
    std::string arr = r.output.substr(start + 7, end - start - 6);
    CHECK(poly_from_json(arr) == poly({{-1, 0, 1}, {0, 1, 1}, {1, 2, 1}}));
}

TEST_CASE("cli exit codes distinguish bad input") {
    auto missing = run_cli("compute --grid /nonexistent.grid");
    CHECK(missing.exit_code == 2);
    std::string bad_path = "/tmp/hfk_bad_grid.grid";
    {
        std::ofstream out(bad_path);
        out << "2\nX: 0 1\nO: 0 1\n";
    }
    auto invalid = run_cli("compute --grid " + bad_path);
    CHECK(invalid.exit_code == 2);
    std::remove(bad_path.c_str());
    auto usage = run_cli("compute");
    CHECK(usage.exit_code == 2);
}

TEST_CASE("cli simplify reduces a stabilized unknot deterministically") {
    std::string out_path = "/tmp/hfk_simplified.grid";
    // a 4x4 unknot that destabilizes twice
    std::string fat_path = "/tmp/hfk_fat_unknot.grid";
    {
        GridDiagram fat{2, {0, 1}, {1, 0}};
        fat = apply_move(fat, {MoveKind::Stabilize, 0, 0, MarkType::X, Corner::NE});
        fat = apply_move(fat, {MoveKind::Stabilize, 1, 0, MarkType::O, Corner::SW});
        std::ofstream out(fat_path);
        out << serialize_grid(fat);
    }
    auto r = run_cli("simplify --grid " + fat_path + " --seed 11 --budget 500 --out " + out_path);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("size trajectory") != std::string::npos);
    GridDiagram slim = hfk::parse_grid(hfk_test::read_file(out_path));
    CHECK(slim.n == 2);
    auto r2 = run_cli("simplify --grid " + fat_path + " --seed 11 --budget 500 --out " + out_path);
    CHECK(hfk::parse_grid(hfk_test::read_file(out_path)) == slim);
    std::remove(out_path.c_str());
    std::remove(fat_path.c_str());
}

TEST_CASE("cli verify reports pass/fail/skip rows") {
    auto r = run_cli("verify --fixtures " + fixture_path("fixtures.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("PASS") != std::string::npos);
    CHECK(r.output.find("SKIP") != std::string::npos);
    CHECK(r.output.find("FAIL") == std::string::npos);
}
