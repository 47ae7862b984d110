#pragma once

#include <string>
#include <vector>

#include "netcent/graph.hpp"
#include "netcent/params.hpp"
#include "netcent/paths.hpp"

namespace netcent {

/// Largest graph the exact flow-based metrics accept by default.
inline constexpr std::size_t kFlowCap = 300;

/// Shortest-path betweenness. Undirected graphs count unordered pairs.
/// normalized divides by (n-1)(n-2)/2, or (n-1)(n-2) on digraphs.
ScoreVector betweenness(const Graph& g, bool normalized = false);
/// Only pairs at distance <= L contribute.
ScoreVector l_betweenness(const Graph& g, std::size_t L);
/// Betweenness over arbitrary per-edge lengths (empty = edge weights).
ScoreVector betweenness_with_lengths(const Graph& g, std::span<const double> lengths);
/// Sources weighted by percolation state; uniform states when params has none.
ScoreVector percolation_centrality(const Graph& g, const MetricParams& params = {});
/// Goh's load: unit packets split evenly at each branching point. Ordered
/// pairs; halved on undirected graphs to match the betweenness pair count.
ScoreVector load_centrality(const Graph& g);

/// Max-flow betweenness (edge weights as capacities). Unordered pairs on
/// undirected graphs; normalized divides each term by the pair's flow value.
ScoreVector flow_betweenness(const Graph& g, bool normalized = false, std::size_t cap = kFlowCap);
ScoreVector current_flow_betweenness(const Graph& g, bool per_component = false);
ScoreVector current_flow_closeness(const Graph& g, bool per_component = false);
ScoreVector random_walk_betweenness(const Graph& g, std::size_t cap = kFlowCap);
ScoreVector information_centrality(const Graph& g);

/// 1/sum of distances to the reachable set (0 when nothing is reachable).
/// normalized scales by r^2/(n-1), r = number of reachable nodes.
ScoreVector closeness(const Graph& g, bool normalized = false);
ScoreVector bavelas_closeness(const Graph& g);
/// sum over reachable u of delta^d(v,u); residual closeness uses delta = 1/2.
ScoreVector decay_centrality(const Graph& g, double delta);
ScoreVector residual_closeness(const Graph& g);
ScoreVector eccentricity(const Graph& g);
ScoreVector straightness(const Graph& g);

struct ImprovedMethodResult {
    std::vector<std::size_t> shell;
    std::vector<double> theta;
    std::vector<NodeId> ranking; ///< shell desc, theta asc, id asc
    std::size_t skipped_pairs = 0;
    /// Single score with the same ordering: shell - theta/(max theta + 1).
    ScoreVector scores() const;
};
ImprovedMethodResult improved_method(const Graph& g);

ScoreVector gdsp_degree(const Graph& g, double alpha);
ScoreVector gdsp_closeness(const Graph& g, double alpha);
ScoreVector gdsp_betweenness(const Graph& g, double alpha);

/// phi_v + sum_u (w_uv/<w>) phi_u with w_uv = (deg u * deg v)^alpha.
/// benchmark is "degree", "betweenness" or "k-shell".
ScoreVector weight_neighborhood(const Graph& g, const std::string& benchmark, double alpha);

/// Mean fraction infected after `steps` synchronous SI rounds seeded at each node.
std::vector<double> si_spread(const Graph& g, double beta, std::size_t steps, std::size_t runs,
                              std::uint64_t seed);
ScoreVector ahp_centrality(const Graph& g, const MetricParams& params = {});

} // namespace netcent
