#include "moorelab/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>

#include <nlohmann/json.hpp>

#include "moorelab/census.hpp"
#include "moorelab/error.hpp"
#include "moorelab/io.hpp"
#include "moorelab/metrics.hpp"
#include "moorelab/moore.hpp"
#include "moorelab/plane.hpp"
#include "moorelab/ranking.hpp"
#include "moorelab/record.hpp"

namespace moorelab::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

/// Stable-key JSON document printed by every command.
struct RunReport {
    std::string command;
    json parameters = json::object();
    json verdicts = json::object();  // name -> "pass" | "fail" | "skipped"
    json result = json::object();
    std::vector<std::string> outputs;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    void verdict(const std::string& name, bool passed) { verdicts[name] = passed ? "pass" : "fail"; }
    void skipped(const std::string& name) { verdicts[name] = "skipped"; }

    bool passed() const
    {
        for (const auto& [name, v] : verdicts.items())
            if (v == "fail")
                return false;
        return true;
    }

    int emit(std::ostream& out) const
    {
        const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
        json doc = {
            {"command", command},
            {"parameters", parameters},
            {"verdicts", verdicts},
            {"result", result},
            {"outputs", outputs},
            {"timings", {{"total_ms", elapsed.count()}}},
            {"status", passed() ? "pass" : "fail"},
        };
        out << doc.dump(2) << '\n';
        return passed() ? kOk : kVerificationFailed;
    }
};

fs::path output_dir(const std::string& flag)
{
    if (!flag.empty())
        return flag;
    if (const char* env = std::getenv("MOORELAB_OUT"); env && *env)
        return env;
    return ".";
}

void write_text(const fs::path& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error(ErrorCode::Io, "cannot write " + path.string());
    out << text;
    if (!out)
        throw Error(ErrorCode::Io, "write failed for " + path.string());
}

void prepare_dir(const fs::path& dir)
{
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec)
        throw Error(ErrorCode::Io, "cannot create " + dir.string() + ": " + ec.message());
}

std::vector<Graph> read_graphs(const std::string& file)
{
    if (!fs::exists(file))
        throw Error(ErrorCode::Io, "no such file " + file);
    return read_graph6_file(file);
}

json girth_json(int g)
{
    return g == kInfinity ? json("inf") : json(g);
}

json histogram_json(const std::map<std::size_t, std::size_t>& hist)
{
    json out = json::object();
    for (const auto& [d, c] : hist)
        out[std::to_string(d)] = c;
    return out;
}

// ---- bounds ---------------------------------------------------------------

struct BoundsArgs {
    int delta = 0;
    int d = 0;
    int g = 0;
};

int cmd_bounds(const BoundsArgs& a, std::ostream& out)
{
    RunReport report;
    report.command = "bounds";
    report.parameters = {{"delta", a.delta}};
    if (a.d > 0) {
        report.parameters["d"] = a.d;
        report.result["moore_bound_diameter"] = moore_bound_diameter(a.delta, a.d);
    }
    if (a.g > 0) {
        report.parameters["g"] = a.g;
        report.result["moore_bound_girth"] = moore_order(a.delta, a.g);
    }
    const int q = a.delta - 2;
    if (q >= 3 && is_prime_power(static_cast<std::uint64_t>(q))) {
        report.result["record"] = {
            {"q", q},
            {"order", record_order(static_cast<std::uint64_t>(q))},
            {"moore_bound_diameter_3", moore_bound_diameter(a.delta, 3)},
            {"defect", record_defect(static_cast<std::uint64_t>(q))},
        };
    }
    return report.emit(out);
}

// ---- build ----------------------------------------------------------------

struct BuildArgs {
    std::string kind;
    std::uint64_t q = 0;
    std::string matching = "degree";
    int a = -1;
    std::string out;
    bool dot = false;
};

MatchingRule parse_rule(const std::string& s)
{
    if (s == "degree")
        return MatchingRule::DegreeDriven;
    if (s == "literal")
        return MatchingRule::LiteralText;
    if (s == "none")
        return MatchingRule::None;
    throw Error(ErrorCode::Unsupported, "unknown matching rule " + s);
}

int cmd_build(const BuildArgs& a, std::ostream& out)
{
    RunReport report;
    report.command = "build";
    report.parameters = {{"kind", a.kind}, {"q", a.q}};
    const fs::path dir = output_dir(a.out);
    prepare_dir(dir);

    Graph graph;
    json meta;
    std::string stem;
    if (a.kind == "pg") {
        auto model = build_projective_plane(a.q);
        const auto checks = verify_moore_cage(model);
        for (const auto& c : checks.checks)
            report.verdict(c.name, c.passed);
        report.result["checks"] = checks.to_json();
        meta = {{"q", a.q}, {"order", model.graph.order()}, {"construction", "Gq"},
                {"verdict", checks.passed() ? "pass" : "fail"}};
        stem = "G_" + std::to_string(a.q);
        graph = std::move(model.graph);
    } else if (a.kind == "record" || a.kind == "hq") {
        const std::optional<std::uint32_t> elem =
            a.a >= 0 ? std::optional<std::uint32_t>(static_cast<std::uint32_t>(a.a)) : std::nullopt;
        const MatchingRule rule = a.kind == "hq" ? MatchingRule::None : parse_rule(a.matching);
        auto model = rule == MatchingRule::None ? build_hq(a.q, elem) : build_rq(a.q, elem, rule);
        const auto r = verify_record(model);
        report.parameters["matching_rule"] = to_string(rule);
        report.parameters["a"] = model.a.index();
        report.verdict("order", r.checks.find("order")->passed);
        report.verdict("diameter", r.checks.find("diameter")->passed);
        if (rule == MatchingRule::None)
            report.skipped("regular");
        else
            report.verdict("regular", r.checks.find("regular")->passed);
        report.result = r.to_json();
        const auto& g = model.graph;
        meta = {
            {"q", a.q},
            {"a", model.a.index()},
            {"a_element", model.a.str()},
            {"order", g.order()},
            {"construction", rule == MatchingRule::None ? "Hq" : "Rq"},
            {"matching_rule", to_string(rule)},
            {"deleted_edge", {g.vertex_name(model.deleted_edge.first), g.vertex_name(model.deleted_edge.second)}},
            {"matching_size", model.matching.size()},
            {"verdict", r.verdict() ? "pass" : "fail"},
        };
        stem = (rule == MatchingRule::None ? "H_" : "R_") + std::to_string(a.q) + "_a" +
               std::to_string(model.a.index()) + (rule == MatchingRule::None ? "" : std::string("_") + to_string(rule));
        graph = std::move(model.graph);
    } else {
        throw Error(ErrorCode::Unsupported, "unknown construction kind " + a.kind + " (expected pg, record or hq)");
    }

    const fs::path g6 = dir / (stem + ".g6");
    write_graph6_file(g6, {graph});
    report.outputs.push_back(g6.string());
    if (a.dot) {
        const fs::path dot = dir / (stem + ".dot");
        write_text(dot, export_dot(graph, "G"));
        report.outputs.push_back(dot.string());
    }
    meta["graph6"] = g6.filename().string();
    const fs::path js = dir / (stem + ".json");
    write_text(js, meta.dump(2) + "\n");
    report.outputs.push_back(js.string());
    return report.emit(out);
}

// ---- verify ---------------------------------------------------------------

struct VerifyArgs {
    std::string file;
    int regular = -1;
    int diameter = -1;
    int girth = -1;
    long long order = -1;
    bool bipartite = false;
    bool connected = false;
    int lbm_delta = -1;
    int lbm_g = -1;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out)
{
    RunReport report;
    report.command = "verify";
    report.parameters = {{"file", a.file}};
    const auto graphs = read_graphs(a.file);
    if (graphs.empty())
        throw Error(ErrorCode::Io, a.file + " contains no graphs");

    const auto expect = [&](const std::string& name, bool requested, auto&& measure_ok) {
        if (!requested) {
            report.skipped(name);
            return;
        }
        bool ok = true;
        for (const auto& g : graphs)
            ok = ok && measure_ok(g);
        report.verdict(name, ok);
    };

    json measured = json::array();
    for (const auto& g : graphs) {
        const bool conn = is_connected(g);
        measured.push_back({
            {"order", g.order()},
            {"degree_histogram", histogram_json(degree_histogram(g))},
            {"connected", conn},
            {"bipartite", is_bipartite(g)},
            {"diameter", conn ? json(diameter(g)) : json(nullptr)},
            {"girth", girth_json(girth(g))},
        });
    }
    report.result["graphs"] = measured;

    if (a.regular >= 0)
        report.parameters["regular"] = a.regular;
    if (a.diameter >= 0)
        report.parameters["diameter"] = a.diameter;
    if (a.girth >= 0)
        report.parameters["girth"] = a.girth;
    if (a.order >= 0)
        report.parameters["order"] = a.order;
    expect("regular", a.regular >= 0, [&](const Graph& g) {
        auto d = regular_degree(g);
        return d && static_cast<int>(*d) == a.regular;
    });
    expect("diameter", a.diameter >= 0,
           [&](const Graph& g) { return is_connected(g) && diameter(g) == a.diameter; });
    expect("girth", a.girth >= 0, [&](const Graph& g) { return girth(g) == a.girth; });
    expect("order", a.order >= 0, [&](const Graph& g) { return static_cast<long long>(g.order()) == a.order; });
    expect("bipartite", a.bipartite, [](const Graph& g) { return is_bipartite(g); });
    expect("connected", a.connected, [](const Graph& g) { return is_connected(g); });
    const bool lbm = a.lbm_delta >= 0 && a.lbm_g >= 0;
    if (lbm) {
        report.parameters["lbm_delta"] = a.lbm_delta;
        report.parameters["lbm_g"] = a.lbm_g;
    }
    expect("lbm", lbm, [&](const Graph& g) { return is_local_bipartite_moore(g, a.lbm_delta, a.lbm_g); });
    return report.emit(out);
}

// ---- check-lbm ------------------------------------------------------------

int cmd_check_lbm(const std::string& file, int delta, int g, std::ostream& out)
{
    RunReport report;
    report.command = "check-lbm";
    report.parameters = {{"file", file}, {"delta", delta}, {"g", g}};
    const auto graphs = read_graphs(file);
    json items = json::array();
    bool all = true;
    for (const auto& graph : graphs) {
        const auto edge =
            is_local_bipartite_moore(graph, delta, g) ? find_moore_tree_edge(graph, delta, g) : std::nullopt;
        json item = {{"lbm", edge.has_value()}, {"girth_vector", girth_vector(graph, g).str()}};
        if (edge)
            item["moore_tree_edge"] = {edge->first, edge->second};
        all = all && edge.has_value();
        items.push_back(std::move(item));
    }
    report.result["graphs"] = items;
    report.verdict("lbm", all && !graphs.empty());
    return report.emit(out);
}

// ---- census ---------------------------------------------------------------

struct CensusArgs {
    int delta = 0;
    int n = 0;
    bool lbm = false;
    bool include_disconnected = false;
    unsigned jobs = 1;
    std::string resume;
    std::string out;
    std::size_t max_order = 36;
};

int cmd_census(const CensusArgs& a, std::ostream& out)
{
    RunReport report;
    report.command = "census";
    report.parameters = {{"delta", a.delta}, {"n", a.n}, {"lbm", a.lbm}, {"include_disconnected", a.include_disconnected}};
    const fs::path dir = output_dir(a.out);
    prepare_dir(dir);

    CensusOptions options;
    options.include_disconnected = a.include_disconnected;
    options.jobs = a.jobs;
    options.max_order = a.max_order;
    if (!a.resume.empty())
        options.checkpoint_dir = fs::path(a.resume);

    const auto all = enumerate_regular_bipartite(a.delta, a.n, options);
    std::vector<CensusRecord> kept;
    for (const auto& r : all)
        if (!a.lbm || r.lbm)
            kept.push_back(r);

    const std::string stem = "census_d" + std::to_string(a.delta) + "_n" + std::to_string(a.n) + (a.lbm ? "_lbm" : "");
    const fs::path g6 = dir / (stem + ".g6");
    {
        std::string text;
        for (const auto& r : kept)
            text += r.form.graph6() + "\n";
        write_text(g6, text);
    }
    report.outputs.push_back(g6.string());

    json summary = census_summary(a.delta, a.n, kept);
    summary["rb_count"] = all.size();
    json records = json::array();
    for (const auto& r : kept) {
        json rec = {{"graph6", r.form.graph6()}, {"girth", girth_json(r.girth)}, {"girth_vector", r.girth_vector.str()},
                    {"lbm", r.lbm}};
        if (r.norm1)
            rec["norm1"] = *r.norm1;
        records.push_back(std::move(rec));
    }
    const fs::path js = dir / (stem + ".json");
    write_text(js, json({{"summary", summary}, {"records", records}}).dump(2) + "\n");
    report.outputs.push_back(js.string());

    report.result = summary;
    report.verdict("sound", std::all_of(kept.begin(), kept.end(), [&](const CensusRecord& r) {
                       const Graph g = r.graph();
                       const auto d = regular_degree(g);
                       return d && static_cast<int>(*d) == a.delta && is_bipartite(g) &&
                              (a.include_disconnected || is_connected(g));
                   }));
    return report.emit(out);
}

// ---- rank -----------------------------------------------------------------

int cmd_rank(const std::vector<std::string>& files, int g, std::ostream& out)
{
    RunReport report;
    report.command = "rank";
    report.parameters = {{"files", files}, {"g", g}};
    std::vector<Graph> graphs;
    std::vector<std::string> names;
    for (const auto& file : files) {
        const auto loaded = read_graphs(file);
        for (std::size_t i = 0; i < loaded.size(); ++i) {
            names.push_back(loaded.size() == 1 ? file : file + "#" + std::to_string(i));
            graphs.push_back(loaded[i]);
        }
    }
    const auto classes = rank_set(graphs, g);
    json out_classes = json::array();
    for (const auto& cls : classes) {
        json members = json::array();
        for (auto idx : cls.members)
            members.push_back({{"name", names[idx]}, {"graph6", encode_graph6(graphs[idx])}});
        out_classes.push_back({{"members", members}, {"norm1", cls.norm1}, {"girth_vector", cls.girth_vector}});
    }
    report.result["classes"] = out_classes;
    return report.emit(out);
}

// ---- random-corpus --------------------------------------------------------

// Union of delta random perfect matchings between the two sides, retried
// until simple.
Graph random_regular_bipartite(int delta, int n, std::mt19937_64& rng)
{
    const int half = n / 2;
    for (;;) {
        Graph g(static_cast<std::size_t>(n));
        bool simple = true;
        std::vector<Vertex> perm(static_cast<std::size_t>(half));
        for (int m = 0; m < delta && simple; ++m) {
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            for (int i = 0; i < half && simple; ++i) {
                const Vertex u = static_cast<Vertex>(i), v = static_cast<Vertex>(half) + perm[static_cast<std::size_t>(i)];
                if (g.has_edge(u, v))
                    simple = false;
                else
                    g.add_edge(u, v);
            }
        }
        if (simple)
            return g;
    }
}

int cmd_random(int delta, int n, int count, std::uint64_t seed, const std::string& outdir, std::ostream& out)
{
    RunReport report;
    report.command = "random-corpus";
    report.parameters = {{"delta", delta}, {"n", n}, {"count", count}, {"seed", seed}};
    if (n % 2 != 0 || delta > n / 2 || delta < 0)
        throw Error(ErrorCode::Unsupported, "need even n and delta <= n/2");
    const fs::path dir = output_dir(outdir);
    prepare_dir(dir);
    std::mt19937_64 rng(seed);
    std::vector<Graph> graphs;
    for (int i = 0; i < count; ++i)
        graphs.push_back(random_regular_bipartite(delta, n, rng));
    const fs::path g6 = dir / ("random_d" + std::to_string(delta) + "_n" + std::to_string(n) + "_s" +
                               std::to_string(seed) + ".g6");
    write_graph6_file(g6, graphs);
    report.outputs.push_back(g6.string());
    report.result["count"] = graphs.size();
    return report.emit(out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Constructions, checkers and census tools for graphs near the bipartite Moore bound", "moorelab"};
    app.require_subcommand(1);

    BoundsArgs bounds;
    auto* c_bounds = app.add_subcommand("bounds", "Bipartite Moore bounds and the record-graph defect table");
    c_bounds->add_option("delta", bounds.delta, "Maximum degree")->required();
    c_bounds->add_option("--d", bounds.d, "Diameter");
    c_bounds->add_option("--g", bounds.g, "Girth (even)");

    BuildArgs build;
    auto* c_build = app.add_subcommand("build", "Build G_q (pg), H_q (hq) or R_q (record)");
    c_build->add_option("kind", build.kind, "pg | hq | record")->required();
    c_build->add_option("q", build.q, "Prime power")->required();
    c_build->add_option("--matching", build.matching, "degree | literal");
    c_build->add_option("--a", build.a, "Index of the field element a (not 0 or 1)");
    c_build->add_option("--out", build.out, "Output directory (default $MOORELAB_OUT or .)");
    c_build->add_flag("--dot", build.dot, "Also write DOT");

    VerifyArgs verify;
    auto* c_verify = app.add_subcommand("verify", "Check graphs in a graph6 file against expectations");
    c_verify->add_option("file", verify.file)->required();
    c_verify->add_option("--regular", verify.regular);
    c_verify->add_option("--diameter", verify.diameter);
    c_verify->add_option("--girth", verify.girth);
    c_verify->add_option("--order", verify.order);
    c_verify->add_flag("--bipartite", verify.bipartite);
    c_verify->add_flag("--connected", verify.connected);
    c_verify->add_option("--lbm-delta", verify.lbm_delta);
    c_verify->add_option("--lbm-g", verify.lbm_g);

    std::string lbm_file;
    int lbm_delta = 0, lbm_g = 0;
    auto* c_lbm = app.add_subcommand("check-lbm", "Local bipartite Moore test with the witnessing edge");
    c_lbm->add_option("file", lbm_file)->required();
    c_lbm->add_option("--delta", lbm_delta)->required();
    c_lbm->add_option("--g", lbm_g)->required();

    CensusArgs census;
    auto* c_census = app.add_subcommand("census", "Enumerate connected delta-regular bipartite graphs of order n");
    c_census->add_option("delta", census.delta)->required();
    c_census->add_option("n", census.n)->required();
    c_census->add_flag("--lbm", census.lbm, "Keep only local bipartite Moore graphs");
    c_census->add_flag("--include-disconnected", census.include_disconnected);
    c_census->add_option("--jobs", census.jobs)->check(CLI::PositiveNumber);
    c_census->add_option("--resume", census.resume, "Checkpoint directory");
    c_census->add_option("--out", census.out);
    c_census->add_option("--max-order", census.max_order);

    std::vector<std::string> rank_files;
    int rank_g = 0;
    auto* c_rank = app.add_subcommand("rank", "Order graphs by closeness to the Moore graph");
    c_rank->add_option("files", rank_files)->required();
    c_rank->add_option("--g", rank_g)->required();

    int rnd_delta = 3, rnd_n = 14, rnd_count = 100;
    std::uint64_t rnd_seed = 1;
    std::string rnd_out;
    auto* c_random = app.add_subcommand("random-corpus", "Random regular bipartite graphs for oracle tests");
    c_random->add_option("--delta", rnd_delta);
    c_random->add_option("--n", rnd_n);
    c_random->add_option("--count", rnd_count);
    c_random->add_option("--seed", rnd_seed);
    c_random->add_option("--out", rnd_out);

    std::vector<std::string> argv_store{"moorelab"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& s : argv_store)
        argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return kUsage;
    }

    try {
        if (*c_bounds)
            return cmd_bounds(bounds, out);
        if (*c_build)
            return cmd_build(build, out);
        if (*c_verify)
            return cmd_verify(verify, out);
        if (*c_lbm)
            return cmd_check_lbm(lbm_file, lbm_delta, lbm_g, out);
        if (*c_census)
            return cmd_census(census, out);
        if (*c_rank)
            return cmd_rank(rank_files, rank_g, out);
        if (*c_random)
            return cmd_random(rnd_delta, rnd_n, rnd_count, rnd_seed, rnd_out, out);
    } catch (const Error& e) {
        err << e.what() << '\n';
        return e.code() == ErrorCode::Io ? kIoError : kUsage;
    } catch (const fs::filesystem_error& e) {
        err << e.what() << '\n';
        return kIoError;
    }
    return kUsage;
}

}  // namespace moorelab::cli
