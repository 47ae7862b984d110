#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "netcent/graph.hpp"
#include "netcent/params.hpp"

namespace netcent {

/// Whole-graph result: a scalar, a node set (cohesion queries) or both.
struct GraphMetricValue {
    std::string metric_id;
    double value = 0.0;
    std::optional<std::vector<NodeId>> nodes;
    std::size_t skipped_pairs = 0;
    /// Secondary named values (e.g. mean delta for hyperbolicity).
    std::vector<std::pair<std::string, double>> extras;
};

/// Sum of distances over ordered reachable pairs.
GraphMetricValue dispersion(const Graph& g);

/// Raw: sum of binom(1 + d* - d_i, 2). Normalized: sum(d* - d_i)/(n^2 - 3n + 2).
GraphMetricValue degree_gc(const Graph& g, bool normalized = true);

enum class CentralizationBase { betweenness, closeness, flow_betweenness };
/// Freeman centralization in [0,1]; the star scores 1.
GraphMetricValue centralization(const Graph& g, CentralizationBase base);

/// Tr(A^2)/m; digraphs only.
GraphMetricValue reciprocity(const Graph& g);

inline constexpr std::size_t kCohesionCap = 200;

/// Maximal k-core (empty when none).
GraphMetricValue k_core(const Graph& g, std::size_t k);
/// A maximum clique; empty when it has fewer than k nodes.
GraphMetricValue max_clique(const Graph& g, std::size_t k = 1, std::size_t size_cap = kCohesionCap);
/// A maximum k-plex (every member adjacent to all but at most k members, itself included).
GraphMetricValue max_k_plex(const Graph& g, std::size_t k, std::size_t size_cap = kCohesionCap);
/// Largest vertex set found whose induced subgraph is k-vertex-connected.
GraphMetricValue k_component(const Graph& g, std::size_t k, std::size_t size_cap = kCohesionCap);

/// Mean local clustering (nodes of degree < 2 contribute 0).
GraphMetricValue global_clustering(const Graph& g);

enum class AssortativityMode { undirected, out_in, in_in, out_out };
GraphMetricValue assortativity(const Graph& g, AssortativityMode mode = AssortativityMode::undirected);
/// Per-node contributions summing to the undirected assortativity.
ScoreVector local_assortativity(const Graph& g);

/// Gromov thin-triangle delta over sampled (or all) triples: value = max delta,
/// extras "mean" and "mean_ratio" (delta / shortest side).
GraphMetricValue delta_hyperbolicity(const Graph& g, std::size_t sample_count, std::uint64_t seed);

} // namespace netcent
