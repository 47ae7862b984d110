#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "netcent/graph.hpp"
#include "netcent/graph_metrics.hpp"
#include "netcent/group_select.hpp"
#include "netcent/params.hpp"

namespace netcent {

enum class Orientation { any, directed_only, undirected_only };

struct PointMetric {
    std::string id;
    std::string summary;
    Orientation orientation = Orientation::any;
    /// Largest graph the metric accepts (dense or flow-based solvers).
    std::size_t max_nodes = std::numeric_limits<std::size_t>::max();
    bool needs_coordinates = false;
    std::function<ScoreVector(const Graph&, const MetricParams&)> run;

    bool capped() const { return max_nodes != std::numeric_limits<std::size_t>::max(); }
    /// False when the graph's orientation, size or coordinates rule the metric out.
    bool applicable(const Graph& g) const;
};

struct WholeGraphMetric {
    std::string id;
    std::string summary;
    std::function<GraphMetricValue(const Graph&, const MetricParams&)> run;
};

struct GroupStrategy {
    std::string id;
    std::string summary;
    std::function<SelectionResult(const Graph&, std::size_t budget, const MetricParams&)> run;
};

const std::vector<PointMetric>& point_metrics();
const std::vector<WholeGraphMetric>& graph_metrics();
const std::vector<GroupStrategy>& group_strategies();

/// Lookups throw InputError listing the valid ids.
const PointMetric& find_point_metric(std::string_view id);
const WholeGraphMetric& find_graph_metric(std::string_view id);
const GroupStrategy& find_group_strategy(std::string_view id);

/// Validates params, runs the metric and stamps id and params digest on the result.
ScoreVector compute_point_metric(const Graph& g, std::string_view id, const MetricParams& params = {});
GraphMetricValue compute_graph_metric(const Graph& g, std::string_view id, const MetricParams& params = {});
SelectionResult run_group_strategy(const Graph& g, std::string_view id, std::size_t budget,
                                   const MetricParams& params = {});

GroupSelectParams group_params(const MetricParams& params, std::size_t budget);

} // namespace netcent
