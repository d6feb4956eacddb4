#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "moorelab/cli.hpp"
#include "moorelab/io.hpp"
#include "support/oracles.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
    int code;
    json report;
    std::string err;
    std::string raw;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = moorelab::cli::run(args, out, err);
    Run r{code, json(), err.str(), out.str()};
    if (!r.raw.empty() && r.raw.front() == '{')
        r.report = json::parse(r.raw);
    return r;
}

fs::path scratch(const std::string& name)
{
    const auto dir = fs::temp_directory_path() / ("moorelab_cli_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_CASE("bounds")
{
    auto r = run({"bounds", "5", "--d", "3"});
    CHECK(r.code == 0);
    CHECK(r.report["result"]["moore_bound_diameter"] == 42);
    CHECK(r.report["result"]["record"]["q"] == 3);
    CHECK(r.report["result"]["record"]["defect"] == 8);
    CHECK(r.report["result"]["record"]["order"] == 34);
    auto g = run({"bounds", "3", "--g", "8"});
    CHECK(g.report["result"]["moore_bound_girth"] == 30);
    CHECK_FALSE(g.report["result"].contains("record"));
    CHECK(run({"bounds"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
}

TEST_CASE("build record then verify")
{
    const auto dir = scratch("build");
    auto b = run({"build", "record", "3", "--out", dir.string(), "--dot"});
    REQUIRE(b.code == 0);
    CHECK(b.report["verdicts"]["regular"] == "pass");
    const auto g6 = dir / "R_3_a2_degree.g6";
    REQUIRE(fs::exists(g6));
    CHECK(fs::exists(dir / "R_3_a2_degree.dot"));
    const auto meta = json::parse(slurp(dir / "R_3_a2_degree.json"));
    CHECK(meta["q"] == 3);
    CHECK(meta["a"] == 2);
    CHECK(meta["matching_rule"] == "degree");
    CHECK(meta["verdict"] == "pass");
    CHECK(meta["deleted_edge"] == json::array({"(0,2)", "[0,2]"}));

    auto v = run({"verify", g6.string(), "--regular", "5", "--diameter", "3", "--order", "34"});
    CHECK(v.code == 0);
    CHECK(v.report["verdicts"]["regular"] == "pass");
    CHECK(v.report["verdicts"]["girth"] == "skipped");
    CHECK(v.report["status"] == "pass");

    auto bad = run({"verify", g6.string(), "--girth", "6"});
    CHECK(bad.code == 3);
    CHECK(bad.report["verdicts"]["girth"] == "fail");

    // deterministic output
    const auto first = slurp(g6);
    REQUIRE(run({"build", "record", "3", "--out", dir.string()}).code == 0);
    CHECK(slurp(g6) == first);

    auto lit = run({"build", "record", "3", "--matching", "literal", "--out", dir.string()});
    CHECK(lit.code == 3);
    CHECK(fs::exists(dir / "R_3_a2_literal.g6"));

    auto hq = run({"build", "hq", "4", "--out", dir.string()});
    CHECK(hq.code == 0);
    CHECK(hq.report["verdicts"]["regular"] == "skipped");

    auto pg = run({"build", "pg", "3", "--out", dir.string()});
    CHECK(pg.code == 0);
    CHECK(json::parse(slurp(dir / "G_3.json"))["construction"] == "Gq");

    CHECK(run({"build", "record", "6", "--out", dir.string()}).code == 2);
    CHECK(run({"build", "record", "2", "--out", dir.string()}).code == 2);
    CHECK(run({"build", "record", "3", "--a", "1", "--out", dir.string()}).code == 2);
    CHECK(run({"build", "cube", "3", "--out", dir.string()}).code == 2);
    fs::remove_all(dir);
}

TEST_CASE("output directory from the environment")
{
    const auto dir = scratch("env");
    setenv("MOORELAB_OUT", dir.string().c_str(), 1);
    auto b = run({"build", "pg", "2"});
    unsetenv("MOORELAB_OUT");
    CHECK(b.code == 0);
    CHECK(fs::exists(dir / "G_2.g6"));
    fs::remove_all(dir);
}

TEST_CASE("census, check-lbm and rank")
{
    const auto dir = scratch("census");
    auto c = run({"census", "3", "14", "--lbm", "--out", dir.string()});
    REQUIRE(c.code == 0);
    CHECK(c.report["result"]["count"] == 5);
    CHECK(c.report["result"]["rb_count"] == 13);
    const auto g6 = dir / "census_d3_n14_lbm.g6";
    CHECK(moorelab::read_graph6_file(g6).size() == 5);

    auto all = run({"census", "3", "14", "--jobs", "2", "--out", dir.string()});
    CHECK(all.report["result"]["count"] == 13);
    CHECK(all.report["result"]["lbm_count"] == 5);

    auto lbm = run({"check-lbm", g6.string(), "--delta", "3", "--g", "6"});
    CHECK(lbm.code == 0);
    auto mixed = run({"check-lbm", (dir / "census_d3_n14.g6").string(), "--delta", "3", "--g", "6"});
    CHECK(mixed.code == 3);

    std::vector<std::string> args{"rank"};
    for (auto which : {oracle::Lbm36::G3, oracle::Lbm36::H, oracle::Lbm36::G2, oracle::Lbm36::G4, oracle::Lbm36::G1}) {
        const auto path = dir / (std::string(oracle::name(which)) + ".g6");
        moorelab::write_graph6_file(path, {oracle::lbm36(which)});
        args.push_back(path.string());
    }
    args.insert(args.end(), {"--g", "6"});
    auto r = run(args);
    REQUIRE(r.code == 0);
    const auto& classes = r.report["result"]["classes"];
    REQUIRE(classes.size() == 4);
    auto names = [&](std::size_t i) {
        std::set<std::string> out;
        for (const auto& m : classes[i]["members"])
            out.insert(fs::path(m["name"].get<std::string>()).stem().string());
        return out;
    };
    CHECK(names(0) == std::set<std::string>{"H"});
    CHECK(names(1) == std::set<std::string>{"G1"});
    CHECK(names(2) == std::set<std::string>{"G2"});
    CHECK(names(3) == std::set<std::string>{"G3", "G4"});
    CHECK(classes[3]["norm1"] == 24);

    CHECK(run({"rank", (dir / "missing.g6").string(), "--g", "6"}).code == 4);
    CHECK(run({"census", "3", "13", "--out", dir.string()}).code == 2);
    fs::remove_all(dir);
}

TEST_CASE("random corpus")
{
    const auto dir = scratch("random");
    auto r = run({"random-corpus", "--delta", "3", "--n", "12", "--count", "20", "--seed", "4", "--out", dir.string()});
    REQUIRE(r.code == 0);
    const auto file = dir / "random_d3_n12_s4.g6";
    const auto graphs = moorelab::read_graph6_file(file);
    CHECK(graphs.size() == 20);
    const auto text = slurp(file);
    REQUIRE(run({"random-corpus", "--delta", "3", "--n", "12", "--count", "20", "--seed", "4", "--out", dir.string()}).code == 0);
    CHECK(slurp(file) == text);
    auto v = run({"verify", file.string(), "--regular", "3", "--bipartite", "--order", "12"});
    CHECK(v.code == 0);
    CHECK(run({"verify", (dir / "nope.g6").string()}).code == 4);
    fs::remove_all(dir);
}
