#pragma once

#include <utility>

#include "netcent/graph.hpp"
#include "netcent/params.hpp"

namespace netcent {

struct DecompositionResult {
    std::vector<std::size_t> shell;
    /// (node, shell at removal) in pruning order.
    std::vector<std::pair<NodeId, std::size_t>> removal_order;
};

/// k-shell (coreness) by bucket pruning. Digraphs use total in+out degree.
DecompositionResult k_shell(const Graph& g);
ScoreVector k_shell_scores(const Graph& g);

/// Pruning by the mixed degree k_r + lambda*k_e (k_e counts links to removed
/// nodes). lambda = 0 gives the k-shell, lambda = 1 the degree.
ScoreVector mixed_degree_decomposition(const Graph& g, double lambda);

ScoreVector neighborhood_coreness(const Graph& g);
ScoreVector neighborhood_coreness_plus(const Graph& g);

/// Principal eigenvector (unit L2 norm). Digraphs aggregate in-neighbours
/// unless params.out_neighbors is set.
ScoreVector eigenvector_centrality(const Graph& g, const MetricParams& params = {});
/// Solves (I - alpha A^T) x = beta 1. Default alpha = 0.85 / lambda_max.
ScoreVector katz_centrality(const Graph& g, const MetricParams& params = {});
/// C(v) = alpha * sum_{u->v} C(u)/max(outdeg u, 1) + beta; alpha 0.85, beta 1.
ScoreVector pagerank(const Graph& g, const MetricParams& params = {});
/// Principal eigenvector of A weighted by 1 - Jaccard(N(u), N(v)).
ScoreVector contribution_centrality(const Graph& g, const MetricParams& params = {});
ScoreVector cumulative_nomination(const Graph& g, const MetricParams& params = {});
/// Left principal eigenvector of A, scaled to sum 1.
ScoreVector dynamical_influence(const Graph& g, const MetricParams& params = {});

struct HubAuthority {
    ScoreVector authority;
    ScoreVector hub;
    bool fallback = false; ///< no arcs: uniform scores returned
};
HubAuthority hits(const Graph& g, double tol = 1e-10, std::size_t max_iter = 10000);
/// Stationary distributions of the two-step authority and hub chains, each
/// side summing to 1; nodes with no in-arcs (out-arcs) score 0 as authorities (hubs).
HubAuthority salsa(const Graph& g, double tol = 1e-10, std::size_t max_iter = 10000);

/// Digraphs only. Score = s_v + s_ground / n at equilibrium.
ScoreVector leader_rank(const Graph& g, double tol = 1e-10, std::size_t max_iter = 100000);
/// Per-iteration total of the non-ground plus ground scores, for auditing conservation.
std::vector<double> leader_rank_totals(const Graph& g, std::size_t iterations);

/// sum_{t=1}^{T} (qA)^t 1.
ScoreVector diffusion_centrality(const Graph& g, double q, std::size_t T);

/// sum_j u_j(v)^2 exp(lambda_j); undirected only.
ScoreVector subgraph_centrality(const Graph& g);

} // namespace netcent
