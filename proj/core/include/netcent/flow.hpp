#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "netcent/graph.hpp"

namespace netcent {

/**
 * Residual network for Edmonds-Karp max flow. Arcs are stored in pairs
 * (a, a^1). Each BFS scans a node's arcs in ascending head id, so the
 * augmenting sequence, and with it the flow decomposition, is deterministic.
 */
class FlowNetwork {
public:
    explicit FlowNetwork(std::size_t n);

    /// Directed arc u->v with capacity `cap` (reverse arc has capacity 0).
    std::size_t add_arc(std::size_t u, std::size_t v, double cap);
    /// Undirected edge: both arcs carry capacity `cap`.
    std::size_t add_edge(std::size_t u, std::size_t v, double cap);

    double max_flow(std::size_t s, std::size_t t);
    /// Restores all residual capacities.
    void reset();

    std::size_t node_count() const noexcept { return adj_.size(); }
    /// Net flow along arc a (negative when it runs against the arc).
    double flow(std::size_t arc) const noexcept { return cap_[arc] - res_[arc]; }
    /// Sum of positive flow entering v.
    double inflow(std::size_t v) const noexcept;
    /// Nodes reachable from s in the residual network (source side of a min cut).
    std::vector<char> source_side(std::size_t s) const;

private:
    void sort_adjacency();

    std::vector<std::vector<std::size_t>> adj_;
    std::vector<std::size_t> head_;
    std::vector<double> cap_;
    std::vector<double> res_;
    bool sorted_ = true;
};

struct MaxFlowResult {
    double value = 0.0;
    std::vector<double> throughflow; ///< positive inflow per node; s and t report the flow value
    std::vector<double> edge_flow;   ///< per EdgeId, positive along source->target
};

/// Maximum s-t flow using edge weights as capacities.
MaxFlowResult max_flow(const Graph& g, NodeId s, NodeId t);

/// Reusable variant for many pairs on one graph.
class MaxFlowSolver {
public:
    explicit MaxFlowSolver(const Graph& g);
    MaxFlowResult solve(NodeId s, NodeId t);
    /// Flow value only, with throughflow written into `through` (size n).
    double solve_into(NodeId s, NodeId t, std::vector<double>& through);

private:
    const Graph* g_;
    FlowNetwork net_;
    std::vector<std::size_t> edge_arc_;
};

/// Number of internally vertex-disjoint s-t paths (s, t non-adjacent) and one
/// minimum separating vertex set. Undirected graphs only.
struct VertexCut {
    std::size_t size = 0;
    std::vector<NodeId> nodes;
};
VertexCut min_vertex_cut(const Graph& g, NodeId s, NodeId t);

/// A vertex separator with fewer than k nodes, if one exists. Complete graphs
/// on at most k nodes report an empty separator (they are not k-connected).
std::optional<std::vector<NodeId>> separator_smaller_than(const Graph& g, std::size_t k);

/// Vertex connectivity kappa(G); n-1 for complete graphs, 0 if disconnected.
std::size_t vertex_connectivity(const Graph& g);

} // namespace netcent
