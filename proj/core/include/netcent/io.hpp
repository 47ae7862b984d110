#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "netcent/graph.hpp"
#include "netcent/params.hpp"
#include "netcent/resilience.hpp"

namespace netcent {

struct ParsedGraph {
    Graph graph;
    BuildReport report;
};

/// Edge list: "u v [w]" per line, whitespace or comma separated, '#' and '%'
/// comment lines. Errors carry the 1-based line number.
ParsedGraph parse_edge_list(std::istream& in, bool directed);
ParsedGraph read_edge_list(const std::string& path, bool directed);

/// "label x y" per line; every node of g must be covered.
Graph read_coordinates(const Graph& g, const std::string& path);
Graph parse_coordinates(const Graph& g, std::istream& in);

struct DatasetStats {
    std::size_t nodes = 0;
    std::size_t edges = 0;
    double avg_degree = 0.0;
    std::size_t max_degree = 0;
    std::size_t max_in = 0;  ///< digraphs only
    std::size_t max_out = 0; ///< digraphs only
    bool directed = false;
};

DatasetStats dataset_stats(const Graph& g);

/// %.6g.
std::string format_real(double x);
/// Two decimals when exact ("0.10"), otherwise %.6g.
std::string format_phi(double phi);

enum class OutputFormat { csv, json };
OutputFormat parse_output_format(std::string_view s);

inline constexpr std::string_view kResultHeader = "metric,phi,run,giant_frac,infected_frac,elapsed_ms";

void write_results(std::ostream& out, const std::vector<AttackRow>& rows, OutputFormat format);
/// Throws InputError when the path cannot be written.
void emit_results(const std::vector<AttackRow>& rows, OutputFormat format, const std::string& path);
/// Reads the JSON form back (values as serialized, i.e. rounded to 6 digits).
std::vector<AttackRow> parse_results_json(std::string_view text);

void write_summary(std::ostream& out, const std::vector<SummaryRow>& rows);

struct ExperimentConfig {
    std::string input_path;
    bool directed = false;
    std::optional<std::string> coordinates_path;
    AttackPlan attack;
    std::string output_path;
    OutputFormat output_format = OutputFormat::csv;
    std::size_t threads = 1;
    bool timing = false;
};

/// Keys mirror the struct fields; see README for the schema.
ExperimentConfig parse_experiment_config(std::string_view json_text);
ExperimentConfig load_experiment_config(const std::string& path);

struct BenchRow {
    std::string metric;
    double elapsed_ms = 0.0; ///< median over the repeats
};

/// Median wall time per metric over `repeat` runs.
std::vector<BenchRow> bench_metrics(const Graph& g, const std::vector<std::string>& ids, std::size_t repeat,
                                    const MetricParams& params = {});
void write_bench(std::ostream& out, const std::vector<BenchRow>& rows);

} // namespace netcent
