#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "census_oracle.hpp"
#include "commands.hpp"
#include "fixtures.hpp"
#include "ssk3/errors.hpp"

using namespace ssk3;
using namespace ssk3::cli;

namespace {

int run(const std::string& args) {
    std::string cmd = std::string(SSK3_BINARY) + " " + args + " >/dev/null 2>&1";
    int st = std::system(cmd.c_str());
    return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

std::filesystem::path scratch(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / "ssk3_cli_tests";
    std::filesystem::create_directories(dir);
    return dir / name;
}

const std::string& census_file() {
    static const std::string path = [] {
        auto p = scratch("census.json").string();
        write_json_file(p, cmd_census(CensusParams{}));
        return p;
    }();
    return path;
}

}  // namespace

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run("analyze --poly 'X0^4*X1*X2 + X0*X1^4*X2 + X0*X1*X2^4'"), 0);
    EXPECT_EQ(run("analyze --poly 'X0^6'"), 2);
    EXPECT_EQ(run("analyze --poly 'X0^6 +'"), 3);
    EXPECT_EQ(run("analyze --poly 'X0^6 + X1^5'"), 3);
    EXPECT_EQ(run("analyze --poly 'X0^4*X1*X2' --field-poly 't^2+1'"), 3);
    EXPECT_EQ(run("analyze"), 3);
    EXPECT_EQ(run("frobnicate"), 3);
    EXPECT_EQ(run("hexagon --m 5 --params '1;1;a;a^2;a^3;a^4'"), 3);
    EXPECT_EQ(run("hexagon --m 5 --seed 3"), 0);
    EXPECT_EQ(run("census --n 5 --weights 0,2,x"), 3);
}

TEST(Cli, AnalyzeIsDeterministic) {
    PolyInput in;
    in.poly = fixtures::kConics45;
    in.field_poly = fixtures::kConics45Field;
    auto a = cmd_analyze(in);
    auto b = cmd_analyze(in);
    EXPECT_EQ(a.report.dump(), b.report.dump());
    EXPECT_EQ(a.table, b.table);
    EXPECT_EQ(a.report["invariants"]["sigma"], 3);
    EXPECT_EQ(a.report["zlocus"]["count"], 21);
    EXPECT_EQ(a.report["split"]["conics"].size(), 45U);

    auto p1 = scratch("r1.json"), p2 = scratch("r2.json");
    std::string poly = std::string("--poly '") + fixtures::kGdk + "'";
    ASSERT_EQ(run("--json " + p1.string() + " analyze " + poly), 0);
    ASSERT_EQ(run("analyze " + poly + " --json " + p2.string()), 0);
    std::ifstream f1(p1), f2(p2);
    std::string s1((std::istreambuf_iterator<char>(f1)), {}), s2((std::istreambuf_iterator<char>(f2)), {});
    EXPECT_FALSE(s1.empty());
    EXPECT_EQ(s1, s2);
}

TEST(Cli, AnalyzeExamples) {
    PolyInput dk;
    dk.poly = fixtures::kGdk;
    auto a = cmd_analyze(dk);
    EXPECT_EQ(a.analysis.invariants.sigma, 1);
    EXPECT_EQ(a.analysis.invariants.l, 21);

    PolyInput seven;
    seven.poly = fixtures::kSeven;
    seven.locus_field_poly = fixtures::kSevenField;
    auto b = cmd_analyze(seven);
    EXPECT_EQ(b.analysis.invariants.sigma, 4);
    EXPECT_EQ(b.analysis.invariants.l, 7);
    EXPECT_EQ(b.analysis.invariants.q, 7);

    PolyInput file;
    auto path = scratch("poly.txt");
    std::ofstream(path) << fixtures::kSigma2 << "\n";
    file.poly_file = path.string();
    EXPECT_EQ(cmd_analyze(file).analysis.invariants.sigma, 2);
}

TEST(Cli, CensusCounts) {
    CensusParams p;
    p.max_dim = 2;
    auto j = cmd_census(p);
    EXPECT_EQ(j["total"], 4);

    CensusParams small{5, {0, 2, 3, 5}, 5, 1};
    auto s = cmd_census(small);
    auto want = oracle::exhaustive_classes(5, {0, 2, 3, 5});
    std::size_t total = 0;
    for (const auto& [d, cls] : want) total += cls.size();
    EXPECT_EQ(s["total"].get<std::size_t>(), total);
}

TEST(Cli, CensusJsonRoundTrip) {
    Json j = read_json_file(census_file());
    EXPECT_EQ(j["total"], 192);
    EXPECT_EQ(j["counts_by_sigma"], Json({1, 3, 13, 41, 58, 43, 21, 8, 3, 1}));
    EXPECT_EQ(j["levels"][0]["classes"][0]["std_basis"][0], (1 << 21) - 1);
    CensusResult r = census_from_json(j);
    EXPECT_EQ(r.total(), 192U);
    EXPECT_EQ(census_json(r).dump(), j.dump());
}

TEST(Cli, MatchByReportAndByPolynomial) {
    PolyInput dk;
    dk.poly = fixtures::kGdk;
    auto out = cmd_analyze(dk, census_file());
    ASSERT_TRUE(out.class_id);
    auto report = scratch("dk.json");
    write_json_file(report.string(), out.report);
    int id = cmd_match(report.string(), {}, census_file());
    EXPECT_EQ(id, *out.class_id);
    CensusResult r = census_from_json(read_json_file(census_file()));
    for (const ClassEntry* e : r.all())
        if (e->id == id) EXPECT_EQ(e->invariants->sigma, 1);

    PolyInput s2;
    s2.poly = fixtures::kSigma2;
    int id2 = cmd_match({}, s2, census_file());
    for (const ClassEntry* e : r.all())
        if (e->id == id2) EXPECT_EQ(e->invariants->sigma, 2);

    PolyInput a, b;
    a.poly = fixtures::kSeven;
    a.locus_field_poly = fixtures::kSevenField;
    b.poly = fixtures::kSevenTwin;
    EXPECT_NE(cmd_match({}, a, census_file()), cmd_match({}, b, census_file()));
}

TEST(Cli, LatticeSummary) {
    PolyInput dk;
    dk.poly = fixtures::kGdk;
    Json j = cmd_lattice(dk);
    EXPECT_EQ(j["determinant"], -4);
    EXPECT_EQ(j["even"], true);
    EXPECT_EQ(j["type_I"], true);
    EXPECT_EQ(j["index_over_frame"], 1024);
}

TEST(Cli, HexagonReport) {
    HexagonInput in;
    in.m = 5;
    in.seed = 2;
    auto out = cmd_hexagon(in);
    EXPECT_TRUE(out.check.ok());
    EXPECT_EQ(out.report["hexagon"]["pascal"]["ok"], true);
    EXPECT_LE(out.check.sigma, 5);
    EXPECT_THROW(make_hexagon(FieldCtx::standard(5), {FFElem{1}, FFElem{1}, FFElem{2}, FFElem{3}, FFElem{4}, FFElem{5}}),
                 DegenerateHexagon);
}
