#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "netcent/errors.hpp"
#include "netcent/generators.hpp"
#include "netcent/io.hpp"
#include "netcent/registry.hpp"

#if NETCENT_HAVE_CLI
#include "cli.hpp"
#endif

using namespace netcent;
namespace fs = std::filesystem;

namespace {

ParsedGraph parse(const std::string& text, bool directed = false) {
    std::istringstream in(text);
    return parse_edge_list(in, directed);
}

std::string error_of(const std::string& text) {
    try {
        parse(text);
    } catch (const InputError& e) {
        return e.what();
    }
    return {};
}

class TempDir : public ::testing::Test {
protected:
    void SetUp() override {
        const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
        dir_ = fs::temp_directory_path() / (std::string("netcent_") + info->test_suite_name() + "_" + info->name());
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string write(const std::string& name, const std::string& text) const {
        const fs::path p = dir_ / name;
        std::ofstream(p) << text;
        return p.string();
    }
    static std::string slurp(const std::string& path) {
        std::ifstream in(path);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    fs::path dir_;
};

std::vector<AttackRow> sample_rows() {
    std::vector<AttackRow> rows(3);
    rows[0] = {"degree", 0.1, 0, 0.8345123, std::nullopt, std::nullopt};
    rows[1] = {"random", 0.25, 1, 0.5, 0.125, 12.0};
    rows[2] = {"needs,quote", 0.3333, 2, 1.0 / 3.0, 0.0, std::nullopt};
    return rows;
}

} // namespace

TEST(EdgeList, Examples) {
    const auto a = parse("1 2\n2 3");
    EXPECT_EQ(a.graph.node_count(), 3u);
    EXPECT_EQ(a.graph.edge_count(), 2u);
    const auto b = parse("# comment\na b 2.5");
    EXPECT_EQ(b.graph.edge_count(), 1u);
    EXPECT_TRUE(b.graph.weighted());
    EXPECT_EQ(b.graph.edge_weight(0, 1), 2.5);
    EXPECT_NE(error_of("1 2 -1").find("line 1"), std::string::npos);
}

TEST(EdgeList, SeparatorsCommentsAndCleanup) {
    const auto g = parse("% header\n\nx,y\ny\tz 1\n# note\ny x\nz z\n", false);
    EXPECT_EQ(g.graph.node_count(), 3u);
    EXPECT_EQ(g.graph.edge_count(), 2u);
    EXPECT_EQ(g.report.duplicates, 1u);
    EXPECT_EQ(g.report.self_loops, 1u);
    EXPECT_EQ(g.graph.label(0), "x");
    const auto d = parse("a b\nb a\n", true);
    EXPECT_EQ(d.graph.edge_count(), 2u);
    EXPECT_EQ(d.report.duplicates, 0u);
}

TEST(EdgeList, Errors) {
    EXPECT_FALSE(error_of("").empty());
    EXPECT_FALSE(error_of("# only comments\n").empty());
    EXPECT_NE(error_of("a b\nlonely\n").find("line 2"), std::string::npos);
    EXPECT_NE(error_of("a b\nc d e f\n").find("line 2"), std::string::npos);
    EXPECT_NE(error_of("a b\n\nc d zz\n").find("line 3"), std::string::npos);
    EXPECT_NE(error_of("a b 0\n").find("line 1"), std::string::npos);
    EXPECT_THROW(read_edge_list("/nonexistent/file.txt", false), InputError);
}

TEST(Coordinates, CoverAllNodes) {
    const Graph g = parse("a b\nb c\n").graph;
    std::istringstream ok("a 0 0\nb 1 0\nc 2 0\n");
    const Graph with = parse_coordinates(g, ok);
    ASSERT_TRUE(with.has_coordinates());
    EXPECT_EQ(with.coordinates()[2].x, 2.0);
    std::istringstream missing("a 0 0\nb 1 0\n");
    EXPECT_THROW(parse_coordinates(g, missing), InputError);
    std::istringstream unknown("a 0 0\nb 1 0\nc 2 0\nq 3 3\n");
    EXPECT_THROW(parse_coordinates(g, unknown), InputError);
}

TEST(Stats, Values) {
    const auto s = dataset_stats(star_graph(5));
    EXPECT_EQ(s.nodes, 5u);
    EXPECT_EQ(s.edges, 4u);
    EXPECT_DOUBLE_EQ(s.avg_degree, 1.6);
    EXPECT_EQ(s.max_degree, 4u);
    const auto e = dataset_stats(Graph{});
    EXPECT_EQ(e.nodes, 0u);
    EXPECT_EQ(e.avg_degree, 0.0);
    const auto d = dataset_stats(make_graph(3, {{0, 1}, {0, 2}, {1, 2}}, true));
    EXPECT_TRUE(d.directed);
    EXPECT_DOUBLE_EQ(d.avg_degree, 1.0);
    EXPECT_EQ(d.max_out, 2u);
    EXPECT_EQ(d.max_in, 2u);
}

TEST(Stats, LosslessRoundTrip) {
    for (std::uint64_t s = 0; s < 5; ++s) {
        const Graph g = erdos_renyi(40, 0.1, s);
        std::ostringstream text;
        for (const Edge& e : g.edges()) text << g.label(e.source) << ' ' << g.label(e.target) << '\n';
        const auto back = parse(text.str());
        std::size_t non_isolated = 0;
        for (NodeId v = 0; v < g.node_count(); ++v) non_isolated += g.degree(v) > 0;
        EXPECT_EQ(back.graph.node_count(), non_isolated);
        EXPECT_EQ(back.graph.edge_count(), g.edge_count());
    }
}

TEST(Format, Numbers) {
    EXPECT_EQ(format_real(0.8345123), "0.834512");
    EXPECT_EQ(format_real(12), "12");
    EXPECT_EQ(format_phi(0.1), "0.10");
    EXPECT_EQ(format_phi(0.0), "0.00");
    EXPECT_EQ(format_phi(1.0), "1.00");
    EXPECT_EQ(format_phi(0.125), "0.125");
    EXPECT_EQ(parse_output_format("json"), OutputFormat::json);
    EXPECT_THROW(parse_output_format("xml"), InputError);
}

TEST(Results, CsvSchema) {
    std::ostringstream out;
    write_results(out, sample_rows(), OutputFormat::csv);
    std::istringstream lines(out.str());
    std::string line;
    std::getline(lines, line);
    EXPECT_EQ(line, kResultHeader);
    std::getline(lines, line);
    EXPECT_EQ(line, "degree,0.10,0,0.834512,,");
    std::getline(lines, line);
    EXPECT_EQ(line, "random,0.25,1,0.5,0.125,12");
    std::getline(lines, line);
    EXPECT_EQ(line, "\"needs,quote\",0.3333,2,0.333333,0,");
}

TEST(Results, JsonRoundTrip) {
    std::ostringstream out;
    const auto rows = sample_rows();
    write_results(out, rows, OutputFormat::json);
    const auto back = parse_results_json(out.str());
    ASSERT_EQ(back.size(), rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        EXPECT_EQ(back[i].metric, rows[i].metric);
        EXPECT_EQ(back[i].run, rows[i].run);
        EXPECT_EQ(format_real(back[i].giant_frac), format_real(rows[i].giant_frac));
        EXPECT_EQ(back[i].infected_frac.has_value(), rows[i].infected_frac.has_value());
        EXPECT_EQ(back[i].elapsed_ms.has_value(), rows[i].elapsed_ms.has_value());
    }
    std::ostringstream again;
    write_results(again, back, OutputFormat::json);
    EXPECT_EQ(again.str(), out.str());
    EXPECT_THROW(parse_results_json("{not json"), InputError);
}

TEST_F(TempDir, EmitResults) {
    const std::string path = (dir_ / "out.csv").string();
    emit_results(sample_rows(), OutputFormat::csv, path);
    const std::string first = slurp(path);
    emit_results(sample_rows(), OutputFormat::csv, path);
    EXPECT_EQ(slurp(path), first);
    EXPECT_EQ(first.substr(0, kResultHeader.size()), kResultHeader);
    EXPECT_THROW(emit_results(sample_rows(), OutputFormat::csv, (dir_ / "no" / "such" / "x.csv").string()),
                 InputError);
}

TEST(Config, ParsesFullSchema) {
    const auto cfg = parse_experiment_config(R"({
        "input_path": "g.txt", "directed": true, "output_path": "o.json", "output_format": "json",
        "threads": 3, "timing": true,
        "metrics": ["degree", {"id": "katz", "params": {"alpha": 0.05}}, {"kind": "random"},
                    {"id": "collective-influence", "kind": "group", "params": {"ell": 1}}],
        "attack": {"kind": "infectious", "phi_grid": [0.05, 0.1], "beta": 0.2, "runs": 7, "rng_seed": 11,
                   "connectivity": "strong"}
    })");
    EXPECT_EQ(cfg.input_path, "g.txt");
    EXPECT_TRUE(cfg.directed);
    EXPECT_EQ(cfg.output_format, OutputFormat::json);
    EXPECT_EQ(cfg.threads, 3u);
    EXPECT_TRUE(cfg.timing);
    ASSERT_EQ(cfg.attack.targets.size(), 4u);
    EXPECT_EQ(cfg.attack.targets[1].params.alpha, 0.05);
    EXPECT_EQ(cfg.attack.targets[2].kind, TargetSource::Kind::random);
    EXPECT_EQ(cfg.attack.targets[3].kind, TargetSource::Kind::group);
    EXPECT_EQ(cfg.attack.targets[3].params.ell, 1u);
    EXPECT_EQ(cfg.attack.kind, AttackKind::infectious);
    EXPECT_EQ(cfg.attack.runs, 7u);
    EXPECT_EQ(cfg.attack.rng_seed, 11u);
    EXPECT_EQ(cfg.attack.connectivity, Connectivity::strong);
}

TEST(Config, Rejections) {
    const std::string attack = R"("attack": {"phi_grid": [0.1]})";
    EXPECT_NO_THROW(parse_experiment_config(R"({"metrics": ["degree"], )" + attack + "}"));
    EXPECT_THROW(parse_experiment_config(R"({"metrics": ["no-such-metric"], )" + attack + "}"), InputError);
    EXPECT_THROW(parse_experiment_config(R"({"metrics": ["degree"], "bogus": 1, )" + attack + "}"), InputError);
    EXPECT_THROW(parse_experiment_config(R"({"metrics": [{"id": "katz", "params": {"nope": 1}}], )" + attack + "}"),
                 InputError);
    EXPECT_THROW(parse_experiment_config(R"({"metrics": [{"id": "katz", "params": {"alpha": "x"}}], )" + attack + "}"),
                 InputError);
    EXPECT_THROW(parse_experiment_config(R"({"metrics": ["degree"], "attack": {"phi_grid": [0.5, 0.1]}})"),
                 InputError);
    EXPECT_THROW(parse_experiment_config(R"({"metrics": ["degree"]})"), InputError);
    EXPECT_THROW(parse_experiment_config("[1, 2"), InputError);
}

TEST(Bench, SchemaStable) {
    const Graph g = barabasi_albert(60, 2, 1);
    const std::vector<std::string> ids{"degree", "pagerank"};
    for (std::size_t repeat : {1u, 3u}) {
        const auto rows = bench_metrics(g, ids, repeat);
        ASSERT_EQ(rows.size(), 2u);
        std::ostringstream out;
        write_bench(out, rows);
        EXPECT_EQ(out.str().substr(0, 18), "metric,elapsed_ms\n");
        EXPECT_EQ(rows[1].metric, "pagerank");
        EXPECT_GE(rows[0].elapsed_ms, 0.0);
    }
    EXPECT_THROW(bench_metrics(g, {"nope"}, 1), InputError);
}

#if NETCENT_HAVE_CLI

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun cli(std::vector<std::string> args) {
    args.insert(args.begin(), "netcent");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_F(TempDir, CliStatsAndCentrality) {
    const std::string p3 = write("p3.txt", "a b\nb c\n");
    const auto stats = cli({"stats", p3});
    EXPECT_EQ(stats.code, 0);
    EXPECT_NE(stats.out.find("nodes 3\n"), std::string::npos);
    EXPECT_NE(stats.out.find("edges 2\n"), std::string::npos);
    EXPECT_NE(stats.out.find("max_degree 2\n"), std::string::npos);

    const auto top = cli({"centrality", p3, "--metric", "closeness", "--top", "1"});
    EXPECT_EQ(top.code, 0);
    EXPECT_EQ(top.out, "node,closeness\nb,0.5\n");

    const auto bad = cli({"centrality", p3, "--metric", "nope"});
    EXPECT_EQ(bad.code, 1);
    EXPECT_NE(bad.err.find("betweenness"), std::string::npos);

    EXPECT_EQ(cli({"centrality", p3, "--metric", "katz", "--param", "nope=1"}).code, 1);
    EXPECT_EQ(cli({"centrality", p3, "--metric", "leaderrank"}).code, 1);
    EXPECT_EQ(cli({"stats", (dir_ / "missing.txt").string()}).code, 1);
    const std::string k3 = write("k3.txt", "a b\nb c\nc a\n");
    EXPECT_EQ(cli({"graph-metric", k3, "--metric", "assortativity"}).code, 2);
    EXPECT_EQ(cli({"frobnicate"}).code, 1);
}

TEST_F(TempDir, CliListsRunOnCorpusGraph) {
    const auto list = cli({"centrality", "--list"});
    ASSERT_EQ(list.code, 0);
    std::size_t lines = 0;
    for (char c : list.out) lines += c == '\n';
    EXPECT_EQ(lines, point_metrics().size());
    EXPECT_EQ(cli({"graph-metric", "--list"}).code, 0);
    EXPECT_EQ(cli({"select", "--list"}).code, 0);
}

TEST_F(TempDir, CliGraphMetricAndSelect) {
    const std::string p5 = write("p5.txt", "a b\nb c\nc d\nd e\n");
    const auto disp = cli({"graph-metric", p5, "--metric", "dispersion"});
    EXPECT_EQ(disp.code, 0);
    EXPECT_EQ(disp.out, "dispersion 40\n");
    const auto core = cli({"graph-metric", p5, "--metric", "k-core", "--param", "k=1"});
    EXPECT_NE(core.out.find("nodes a b c d e"), std::string::npos);
    const auto sel = cli({"select", p5, "--strategy", "degree-distance", "--budget", "2"});
    EXPECT_EQ(sel.code, 0);
    EXPECT_EQ(sel.out, "step,node,score,excluded\n0,b,2,0\n1,d,2,1\n# stop_reason budget\n");
}

TEST_F(TempDir, CliAttackDeterministic) {
    std::ostringstream edges;
    const Graph g = barabasi_albert(80, 2, 3);
    for (const Edge& e : g.edges()) edges << e.source << ' ' << e.target << '\n';
    const std::string graph = write("g.txt", edges.str());
    const std::string config = write("c.json", R"({"metrics": ["degree", "random"],
        "attack": {"kind": "infectious", "phi_grid": [0.05, 0.1], "beta": 0.3, "runs": 4}})");
    const std::string o1 = (dir_ / "o1.csv").string(), o2 = (dir_ / "o2.csv").string();
    const auto a = cli({"attack", graph, "--config", config, "--seed", "7", "--output", o1});
    const auto b = cli({"attack", graph, "--config", config, "--seed", "7", "--output", o2, "--threads", "3"});
    ASSERT_EQ(a.code, 0) << a.err;
    ASSERT_EQ(b.code, 0) << b.err;
    EXPECT_EQ(slurp(o1), slurp(o2));
    EXPECT_EQ(slurp(o1).substr(0, kResultHeader.size()), kResultHeader);
    const auto c = cli({"attack", graph, "--config", config, "--seed", "8", "--output", "-"});
    EXPECT_NE(c.out, slurp(o1));
    const auto json = cli({"attack", graph, "--config", config, "--output", "-", "--format", "json"});
    EXPECT_EQ(parse_results_json(json.out).size(), 2u * 4u * 2u);
}

TEST_F(TempDir, CliBench) {
    const std::string p5 = write("p5.txt", "a b\nb c\nc d\nd e\n");
    const auto r = cli({"bench", p5, "--metrics", "degree,closeness", "--repeat", "3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("metric,elapsed_ms\ndegree,", 0), 0u);
    EXPECT_NE(r.out.find("\ncloseness,"), std::string::npos);
}

#endif
