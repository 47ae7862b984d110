#pragma once

#include "netcent/graph.hpp"
#include "netcent/params.hpp"

namespace netcent {

enum class DegreeMode { total, in, out };

/// Edge counts; `total` on digraphs is in+out. in/out on undirected graphs throw.
ScoreVector degree_centrality(const Graph& g, DegreeMode mode = DegreeMode::total,
                              bool normalized = false);

/// Number of distinct nodes within two hops of each node (the node itself excluded).
std::vector<std::size_t> two_hop_counts(const Graph& g);

// Undirected only.
ScoreVector semi_local(const Graph& g);
ScoreVector hybrid_degree(const Graph& g, const MetricParams& params = {});
ScoreVector volume(const Graph& g, std::size_t h);

/// Local clustering. Digraphs: ordered pairs of out-neighbours joined by an arc,
/// over k(k-1). Nodes with fewer than two (out-)neighbours score 0.
ScoreVector clustering(const Graph& g);
/// Burt's redundancy with symmetrised weights; 2e/deg on simple graphs.
ScoreVector redundancy(const Graph& g);
/// Digraphs only.
ScoreVector clusterrank(const Graph& g);

// Digraphs are read through their undirected skeleton.
ScoreVector local_entropy(const Graph& g);
ScoreVector mapping_entropy(const Graph& g);
ScoreVector h_index(const Graph& g, std::size_t order = 1);

/// Truncated combinatorial curvature: sum_{k<k_max} (-1)^k s^{k+1}/(k+1), where
/// s^j counts j-cliques through the node. Undirected only.
ScoreVector gauss_curvature(const Graph& g, std::size_t k_max = 3);

/// Applies the H operator (largest h with at least h inputs >= h).
std::size_t h_operator(std::vector<std::size_t> values);

} // namespace netcent
