#include "netcent/io.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "netcent/errors.hpp"
#include "netcent/registry.hpp"

namespace netcent {

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    auto sep = [](char c) { return c == ' ' || c == '\t' || c == ',' || c == '\r'; };
    while (i < line.size()) {
        while (i < line.size() && sep(line[i])) ++i;
        std::size_t j = i;
        while (j < line.size() && !sep(line[j])) ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

bool parse_double(std::string_view s, double& v) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    return ec == std::errc() && ptr == s.data() + s.size() && std::isfinite(v);
}

bool skip_line(std::string_view line) {
    const std::size_t i = line.find_first_not_of(" \t\r");
    return i == std::string_view::npos || line[i] == '#' || line[i] == '%';
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw_input("cannot open " + path);
    return in;
}

} // namespace

ParsedGraph parse_edge_list(std::istream& in, bool directed) {
    std::vector<LabeledEdge> edges;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (skip_line(line)) continue;
        const auto tok = tokens(line);
        if (tok.size() < 2 || tok.size() > 3)
            throw_input("line " + std::to_string(number) + ": expected 'u v [weight]'");
        LabeledEdge e{std::string(tok[0]), std::string(tok[1]), std::nullopt, number};
        if (tok.size() == 3) {
            double w = 0.0;
            if (!parse_double(tok[2], w) || !(w > 0.0))
                throw_input("line " + std::to_string(number) + ": weight must be a positive real, got '" +
                            std::string(tok[2]) + "'");
            e.weight = w;
        }
        edges.push_back(std::move(e));
    }
    if (edges.empty()) throw_input("edge list is empty");
    BuildResult built = build_graph(edges, directed);
    return {std::move(built.graph), built.report};
}

ParsedGraph read_edge_list(const std::string& path, bool directed) {
    std::ifstream in = open_input(path);
    return parse_edge_list(in, directed);
}

Graph parse_coordinates(const Graph& g, std::istream& in) {
    std::vector<Point> coords(g.node_count());
    std::vector<char> seen(g.node_count(), 0);
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (skip_line(line)) continue;
        const auto tok = tokens(line);
        Point p{};
        if (tok.size() != 3 || !parse_double(tok[1], p.x) || !parse_double(tok[2], p.y))
            throw_input("coordinates line " + std::to_string(number) + ": expected 'node x y'");
        const auto id = g.find(tok[0]);
        if (!id) throw_input("coordinates line " + std::to_string(number) + ": unknown node '" +
                             std::string(tok[0]) + "'");
        coords[*id] = p;
        seen[*id] = 1;
    }
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (!seen[v]) throw_input("no coordinates for node '" + g.label(v) + "'");
    return g.with_coordinates(std::move(coords));
}

Graph read_coordinates(const Graph& g, const std::string& path) {
    std::ifstream in = open_input(path);
    return parse_coordinates(g, in);
}

DatasetStats dataset_stats(const Graph& g) {
    DatasetStats s;
    s.nodes = g.node_count();
    s.edges = g.edge_count();
    s.directed = g.directed();
    if (s.nodes == 0) return s;
    const double m = static_cast<double>(s.edges);
    s.avg_degree = (g.directed() ? m : 2.0 * m) / static_cast<double>(s.nodes);
    for (NodeId v = 0; v < g.node_count(); ++v) {
        s.max_degree = std::max(s.max_degree, g.degree(v));
        if (g.directed()) {
            s.max_in = std::max(s.max_in, g.in_degree(v));
            s.max_out = std::max(s.max_out, g.out_degree(v));
        }
    }
    return s;
}

std::string format_real(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

std::string format_phi(double phi) {
    const double cents = phi * 100.0;
    if (std::abs(cents - std::round(cents)) < 1e-9) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.2f", phi);
        return buf;
    }
    return format_real(phi);
}

OutputFormat parse_output_format(std::string_view s) {
    if (s == "csv") return OutputFormat::csv;
    if (s == "json") return OutputFormat::json;
    throw_input("output format must be csv or json, got '" + std::string(s) + "'");
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

/// Serialized numbers go through format_real so CSV and JSON agree.
nlohmann::ordered_json number(double x) { return nlohmann::ordered_json::parse(format_real(x)); }

} // namespace

void write_results(std::ostream& out, const std::vector<AttackRow>& rows, OutputFormat format) {
    if (format == OutputFormat::csv) {
        out << kResultHeader << '\n';
        for (const AttackRow& r : rows) {
            out << csv_field(r.metric) << ',' << format_phi(r.phi) << ',' << r.run << ','
                << format_real(r.giant_frac) << ',' << (r.infected_frac ? format_real(*r.infected_frac) : "")
                << ',' << (r.elapsed_ms ? format_real(*r.elapsed_ms) : "") << '\n';
        }
        return;
    }
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const AttackRow& r : rows) {
        nlohmann::ordered_json o;
        o["metric"] = r.metric;
        o["phi"] = number(r.phi);
        o["run"] = r.run;
        o["giant_frac"] = number(r.giant_frac);
        o["infected_frac"] = r.infected_frac ? number(*r.infected_frac) : nlohmann::ordered_json();
        o["elapsed_ms"] = r.elapsed_ms ? number(*r.elapsed_ms) : nlohmann::ordered_json();
        arr.push_back(std::move(o));
    }
    out << arr.dump(2) << '\n';
}

void emit_results(const std::vector<AttackRow>& rows, OutputFormat format, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw_input("cannot write " + path);
    write_results(out, rows, format);
    out.flush();
    if (!out) throw_input("error while writing " + path);
}

std::vector<AttackRow> parse_results_json(std::string_view text) {
    std::vector<AttackRow> rows;
    try {
        const auto arr = nlohmann::json::parse(text);
        for (const auto& o : arr) {
            AttackRow r;
            r.metric = o.at("metric").get<std::string>();
            r.phi = o.at("phi").get<double>();
            r.run = o.at("run").get<std::size_t>();
            r.giant_frac = o.at("giant_frac").get<double>();
            if (!o.at("infected_frac").is_null()) r.infected_frac = o["infected_frac"].get<double>();
            if (!o.at("elapsed_ms").is_null()) r.elapsed_ms = o["elapsed_ms"].get<double>();
            rows.push_back(std::move(r));
        }
    } catch (const nlohmann::json::exception& e) {
        throw_input(std::string("malformed results JSON: ") + e.what());
    }
    return rows;
}

void write_summary(std::ostream& out, const std::vector<SummaryRow>& rows) {
    out << "metric,phi,runs,giant_mean,giant_std,infected_mean,infected_std\n";
    for (const SummaryRow& s : rows) {
        out << csv_field(s.metric) << ',' << format_phi(s.phi) << ',' << s.runs << ','
            << format_real(s.giant_mean) << ',' << format_real(s.giant_std) << ','
            << (s.infected_mean ? format_real(*s.infected_mean) : "") << ','
            << (s.infected_std ? format_real(*s.infected_std) : "") << '\n';
    }
}

namespace {

std::string param_text(const nlohmann::json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_array()) {
        std::string s;
        for (const auto& x : v) s += (s.empty() ? "" : ",") + param_text(x);
        return s;
    }
    return v.dump();
}

void reject_unknown(const nlohmann::json& obj, std::initializer_list<const char*> known, const char* where) {
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (std::none_of(known.begin(), known.end(), [&](const char* k) { return it.key() == k; }))
            throw_input(std::string("unknown key '") + it.key() + "' in " + where);
}

TargetSource parse_target(const nlohmann::json& t) {
    TargetSource out;
    if (t.is_string()) {
        out.id = t.get<std::string>();
        if (out.id == "random") out.kind = TargetSource::Kind::random;
        return out;
    }
    reject_unknown(t, {"id", "kind", "params"}, "metrics entry");
    const std::string kind = t.value("kind", "metric");
    if (kind == "metric") out.kind = TargetSource::Kind::metric;
    else if (kind == "group") out.kind = TargetSource::Kind::group;
    else if (kind == "random") out.kind = TargetSource::Kind::random;
    else throw_input("metrics entry kind must be metric, group or random");
    out.id = t.value("id", out.kind == TargetSource::Kind::random ? "random" : "");
    if (out.id == "random") out.kind = TargetSource::Kind::random;
    if (out.id.empty()) throw_input("metrics entry needs an id");
    if (t.contains("params"))
        for (auto it = t["params"].begin(); it != t["params"].end(); ++it)
            out.params.set(it.key(), param_text(it.value()));
    return out;
}

} // namespace

ExperimentConfig parse_experiment_config(std::string_view json_text) {
    ExperimentConfig cfg;
    try {
        const auto j = nlohmann::json::parse(json_text);
        reject_unknown(j,
                       {"input_path", "directed", "coordinates_path", "metrics", "attack", "output_path",
                        "output_format", "threads", "timing"},
                       "config");
        cfg.input_path = j.value("input_path", "");
        cfg.directed = j.value("directed", false);
        if (j.contains("coordinates_path")) cfg.coordinates_path = j["coordinates_path"].get<std::string>();
        cfg.output_path = j.value("output_path", "");
        cfg.output_format = parse_output_format(j.value("output_format", "csv"));
        cfg.threads = j.value("threads", std::size_t{1});
        cfg.timing = j.value("timing", false);
        for (const auto& t : j.at("metrics")) cfg.attack.targets.push_back(parse_target(t));
        const auto& a = j.at("attack");
        reject_unknown(a, {"kind", "phi_grid", "beta", "runs", "rng_seed", "connectivity"}, "attack");
        const std::string kind = a.value("kind", "non-infectious");
        if (kind == "non-infectious") cfg.attack.kind = AttackKind::non_infectious;
        else if (kind == "infectious") cfg.attack.kind = AttackKind::infectious;
        else throw_input("attack kind must be non-infectious or infectious");
        cfg.attack.phi_grid = a.at("phi_grid").get<std::vector<double>>();
        cfg.attack.beta = a.value("beta", 0.05);
        cfg.attack.runs = a.value("runs", std::size_t{100});
        cfg.attack.rng_seed = a.value("rng_seed", std::uint64_t{0});
        const std::string conn = a.value("connectivity", "weak");
        if (conn == "weak") cfg.attack.connectivity = Connectivity::weak;
        else if (conn == "strong") cfg.attack.connectivity = Connectivity::strong;
        else throw_input("connectivity must be weak or strong");
    } catch (const nlohmann::json::exception& e) {
        throw_input(std::string("malformed config: ") + e.what());
    }
    cfg.attack.validate();
    return cfg;
}

ExperimentConfig load_experiment_config(const std::string& path) {
    std::ifstream in = open_input(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_experiment_config(ss.str());
}

std::vector<BenchRow> bench_metrics(const Graph& g, const std::vector<std::string>& ids, std::size_t repeat,
                                    const MetricParams& params) {
    if (repeat < 1) throw_input("repeat must be at least 1");
    std::vector<BenchRow> rows;
    for (const std::string& id : ids) {
        find_point_metric(id);
        std::vector<double> times;
        for (std::size_t i = 0; i < repeat; ++i) {
            const auto start = std::chrono::steady_clock::now();
            const ScoreVector s = compute_point_metric(g, id, params);
            times.push_back(
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count());
        }
        std::sort(times.begin(), times.end());
        const std::size_t mid = times.size() / 2;
        const double median = times.size() % 2 ? times[mid] : 0.5 * (times[mid - 1] + times[mid]);
        rows.push_back({id, median});
    }
    return rows;
}

void write_bench(std::ostream& out, const std::vector<BenchRow>& rows) {
    out << "metric,elapsed_ms\n";
    for (const BenchRow& r : rows) out << csv_field(r.metric) << ',' << format_real(r.elapsed_ms) << '\n';
}

} // namespace netcent
