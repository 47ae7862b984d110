#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "netcent/errors.hpp"
#include "netcent/io.hpp"
#include "netcent/registry.hpp"

namespace netcent {

namespace {

struct GraphArgs {
    std::string path;
    bool directed = false;
    std::string coords;
};

struct ParamArgs {
    std::vector<std::string> pairs;
    std::optional<std::uint64_t> seed;

    MetricParams build() const {
        MetricParams p;
        for (const std::string& kv : pairs) {
            const auto eq = kv.find('=');
            if (eq == std::string::npos || eq == 0) throw_input("--param expects key=value, got '" + kv + "'");
            p.set(kv.substr(0, eq), kv.substr(eq + 1));
        }
        if (seed) p.rng_seed = *seed;
        p.validate();
        return p;
    }
};

void add_graph_args(CLI::App* cmd, GraphArgs& g, bool required = true) {
    auto* opt = cmd->add_option("file", g.path, "edge list (u v [w] per line)");
    if (required) opt->required();
    cmd->add_flag("--directed", g.directed, "treat edges as arcs");
    cmd->add_option("--coords", g.coords, "coordinates side-file (node x y per line)");
}

void add_param_args(CLI::App* cmd, ParamArgs& p) {
    cmd->add_option("--param", p.pairs, "metric parameter key=value (repeatable)");
    cmd->add_option("--seed", p.seed, "random seed");
}

Graph load(const GraphArgs& a, std::ostream& err) {
    ParsedGraph parsed = read_edge_list(a.path, a.directed);
    if (parsed.report.self_loops)
        err << "warning: dropped " << parsed.report.self_loops << " self-loop(s)\n";
    if (parsed.report.duplicates)
        err << "warning: collapsed " << parsed.report.duplicates << " duplicate edge(s)\n";
    if (!a.coords.empty()) return read_coordinates(parsed.graph, a.coords);
    return std::move(parsed.graph);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

const char* stop_name(StopReason r) {
    switch (r) {
    case StopReason::budget: return "budget";
    case StopReason::stopping_rule: return "stopping-rule";
    case StopReason::exhausted: return "exhausted";
    }
    return "";
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Node and graph centrality metrics, seed selection and attack simulation"};
    app.require_subcommand(1);

    GraphArgs graph_args;
    ParamArgs param_args;

    auto* stats = app.add_subcommand("stats", "node/edge counts and degree summary");
    add_graph_args(stats, graph_args);

    std::string metric;
    std::size_t top = 0;
    bool list = false;
    auto* cent = app.add_subcommand("centrality", "per-node centrality scores");
    add_graph_args(cent, graph_args, false);
    add_param_args(cent, param_args);
    cent->add_option("--metric", metric, "metric id (see --list)");
    cent->add_option("--top", top, "print only the N highest-ranked nodes");
    cent->add_flag("--list", list, "list metric ids and exit");

    auto* gm = app.add_subcommand("graph-metric", "whole-graph metric");
    add_graph_args(gm, graph_args, false);
    add_param_args(gm, param_args);
    gm->add_option("--metric", metric, "graph metric id (see --list)");
    gm->add_flag("--list", list, "list graph metric ids and exit");

    std::string strategy;
    std::size_t budget = 1;
    auto* sel = app.add_subcommand("select", "seed-set selection");
    add_graph_args(sel, graph_args, false);
    add_param_args(sel, param_args);
    sel->add_option("--strategy", strategy, "strategy id (see --list)");
    sel->add_option("--budget", budget, "number of seeds")->check(CLI::PositiveNumber);
    sel->add_flag("--list", list, "list strategy ids and exit");

    std::string config_path, output_override, format_override;
    std::size_t threads = 0;
    bool timing = false;
    std::optional<std::uint64_t> attack_seed;
    auto* attack = app.add_subcommand("attack", "run an attack experiment from a JSON config");
    attack->add_option("file", graph_args.path, "edge list (overrides input_path)");
    attack->add_option("--config", config_path, "experiment config (JSON)")->required();
    attack->add_option("--seed", attack_seed, "base random seed (overrides attack.rng_seed)");
    attack->add_option("--threads", threads, "worker threads (overrides threads)");
    attack->add_flag("--timing", timing, "record elapsed_ms per row");
    attack->add_option("--output", output_override, "output path (overrides output_path; '-' for stdout)");
    attack->add_option("--format", format_override, "csv or json (overrides output_format)");

    std::string metric_list = "all";
    std::size_t repeat = 3;
    auto* bench = app.add_subcommand("bench", "median wall time per metric");
    add_graph_args(bench, graph_args);
    add_param_args(bench, param_args);
    bench->add_option("--metrics", metric_list, "comma-separated metric ids, or 'all'");
    bench->add_option("--repeat", repeat, "repeats per metric (median reported)")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*stats) {
            const ParsedGraph parsed = read_edge_list(graph_args.path, graph_args.directed);
            const DatasetStats s = dataset_stats(parsed.graph);
            out << "nodes " << s.nodes << '\n'
                << "edges " << s.edges << '\n'
                << "avg_degree " << format_real(s.avg_degree) << '\n'
                << "max_degree " << s.max_degree << '\n';
            if (s.directed) out << "max_in_degree " << s.max_in << '\n' << "max_out_degree " << s.max_out << '\n';
            out << "directed " << (s.directed ? "true" : "false") << '\n'
                << "self_loops_dropped " << parsed.report.self_loops << '\n'
                << "duplicates_collapsed " << parsed.report.duplicates << '\n';
            return 0;
        }
        if (*cent) {
            if (list) {
                for (const PointMetric& m : point_metrics()) {
                    out << m.id << '\t' << m.summary;
                    if (m.orientation == Orientation::directed_only) out << " [directed]";
                    if (m.orientation == Orientation::undirected_only) out << " [undirected]";
                    if (m.capped()) out << " [n <= " << m.max_nodes << "]";
                    if (m.needs_coordinates) out << " [coordinates]";
                    out << '\n';
                }
                return 0;
            }
            if (metric.empty() || graph_args.path.empty()) throw_input("centrality needs a file and --metric");
            find_point_metric(metric);
            const Graph g = load(graph_args, err);
            const ScoreVector s = compute_point_metric(g, metric, param_args.build());
            std::vector<NodeId> order;
            if (top) {
                order = rank_targets(s);
                order.resize(std::min(top, order.size()));
            } else {
                for (NodeId v = 0; v < g.node_count(); ++v) order.push_back(v);
            }
            out << "node," << metric << '\n';
            for (NodeId v : order) out << g.label(v) << ',' << format_real(s[v]) << '\n';
            return 0;
        }
        if (*gm) {
            if (list) {
                for (const WholeGraphMetric& m : graph_metrics()) out << m.id << '\t' << m.summary << '\n';
                return 0;
            }
            if (metric.empty() || graph_args.path.empty()) throw_input("graph-metric needs a file and --metric");
            find_graph_metric(metric);
            const Graph g = load(graph_args, err);
            const GraphMetricValue v = compute_graph_metric(g, metric, param_args.build());
            out << v.metric_id << ' ' << format_real(v.value) << '\n';
            for (const auto& [name, x] : v.extras) out << name << ' ' << format_real(x) << '\n';
            if (v.skipped_pairs) out << "skipped_pairs " << v.skipped_pairs << '\n';
            if (v.nodes) {
                out << "nodes";
                for (NodeId u : *v.nodes) out << ' ' << g.label(u);
                out << '\n';
            }
            return 0;
        }
        if (*sel) {
            if (list) {
                for (const GroupStrategy& s : group_strategies()) out << s.id << '\t' << s.summary << '\n';
                return 0;
            }
            if (strategy.empty() || graph_args.path.empty()) throw_input("select needs a file and --strategy");
            find_group_strategy(strategy);
            const Graph g = load(graph_args, err);
            const SelectionResult r = run_group_strategy(g, strategy, budget, param_args.build());
            out << "step,node,score,excluded\n";
            for (std::size_t i = 0; i < r.per_step.size(); ++i)
                out << i << ',' << g.label(r.per_step[i].node) << ',' << format_real(r.per_step[i].score) << ','
                    << r.per_step[i].excluded << '\n';
            out << "# stop_reason " << stop_name(r.stop_reason) << '\n';
            return 0;
        }
        if (*attack) {
            ExperimentConfig cfg = load_experiment_config(config_path);
            if (!graph_args.path.empty()) cfg.input_path = graph_args.path;
            if (cfg.input_path.empty()) throw_input("no input graph: pass a file or set input_path");
            if (attack_seed) cfg.attack.rng_seed = *attack_seed;
            if (threads) cfg.threads = threads;
            if (timing) cfg.timing = true;
            if (!output_override.empty()) cfg.output_path = output_override == "-" ? "" : output_override;
            if (!format_override.empty()) cfg.output_format = parse_output_format(format_override);
            GraphArgs ga{cfg.input_path, cfg.directed, cfg.coordinates_path.value_or("")};
            const Graph g = load(ga, err);
            const ExperimentResult result = run_experiment(cfg.attack, g, {cfg.threads, cfg.timing});
            for (const auto& [label, msg] : result.errors) err << "error: " << label << ": " << msg << '\n';
            if (cfg.output_path.empty()) {
                write_results(out, result.rows, cfg.output_format);
            } else {
                emit_results(result.rows, cfg.output_format, cfg.output_path);
                write_summary(out, result.summary);
            }
            if (result.rows.empty() && !result.errors.empty()) return 2;
            return 0;
        }
        if (*bench) {
            const Graph g = load(graph_args, err);
            std::vector<std::string> ids;
            if (metric_list == "all") {
                for (const PointMetric& m : point_metrics())
                    if (!m.capped() && m.applicable(g)) ids.push_back(m.id);
            } else {
                ids = split_list(metric_list);
            }
            write_bench(out, bench_metrics(g, ids, repeat, param_args.build()));
            return 0;
        }
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

} // namespace netcent
