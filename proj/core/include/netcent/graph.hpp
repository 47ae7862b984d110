#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace netcent {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();
inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

/// One adjacency entry: the neighbor, the id of the underlying edge and its weight.
struct Arc {
    NodeId node;
    EdgeId edge;
    double weight;
};

struct Edge {
    NodeId source;
    NodeId target;
    double weight;
};

struct Point {
    double x;
    double y;
};

/**
 * Immutable graph with dense node ids 0..n-1.
 *
 * Adjacency lists are sorted by neighbor id, which makes every traversal
 * (BFS order, augmenting paths, greedy tie-breaks) deterministic. For
 * undirected graphs in() and out() return the same list and every edge
 * appears once in edges() with source < target.
 */
class Graph {
public:
    Graph() = default;

    std::size_t node_count() const noexcept { return labels_.size(); }
    /// Undirected: number of edges. Directed: number of arcs.
    std::size_t edge_count() const noexcept { return edges_.size(); }
    bool directed() const noexcept { return directed_; }
    bool weighted() const noexcept { return weighted_; }

    std::span<const Arc> out(NodeId v) const noexcept {
        return {out_adj_.data() + out_off_[v], out_adj_.data() + out_off_[v + 1]};
    }
    std::span<const Arc> in(NodeId v) const noexcept {
        if (!directed_) return out(v);
        return {in_adj_.data() + in_off_[v], in_adj_.data() + in_off_[v + 1]};
    }

    std::size_t out_degree(NodeId v) const noexcept { return out_off_[v + 1] - out_off_[v]; }
    std::size_t in_degree(NodeId v) const noexcept {
        return directed_ ? in_off_[v + 1] - in_off_[v] : out_degree(v);
    }
    /// Undirected degree, or in+out for directed graphs.
    std::size_t degree(NodeId v) const noexcept {
        return directed_ ? in_degree(v) + out_degree(v) : out_degree(v);
    }
    /// Sum of incident weights (in+out for directed graphs).
    double strength(NodeId v) const noexcept;

    bool has_edge(NodeId u, NodeId v) const noexcept;
    std::optional<double> edge_weight(NodeId u, NodeId v) const noexcept;

    const std::vector<Edge>& edges() const noexcept { return edges_; }

    const std::string& label(NodeId v) const { return labels_[v]; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    std::optional<NodeId> find(std::string_view label) const;

    bool has_coordinates() const noexcept { return !coords_.empty(); }
    const std::vector<Point>& coordinates() const noexcept { return coords_; }
    /// Returns a copy carrying per-node coordinates (size must equal node_count()).
    Graph with_coordinates(std::vector<Point> coords) const;

    /// Builds from already-clean edges (no self loops, no duplicates, positive
    /// weights). Use build_graph() for raw input.
    static Graph from_clean_edges(std::vector<std::string> labels, std::vector<Edge> edges,
                                  bool directed);

private:
    bool directed_ = false;
    bool weighted_ = false;
    std::vector<std::string> labels_;
    std::unordered_map<std::string, NodeId> index_;
    std::vector<Edge> edges_;
    std::vector<std::size_t> out_off_{0};
    std::vector<Arc> out_adj_;
    std::vector<std::size_t> in_off_{0};
    std::vector<Arc> in_adj_;
    std::vector<Point> coords_;
};

struct LabeledEdge {
    std::string source;
    std::string target;
    std::optional<double> weight;
    std::size_t line = 0; ///< source line for error messages, 0 if unknown
};

struct BuildReport {
    std::size_t self_loops = 0;
    std::size_t duplicates = 0;
};

struct BuildResult {
    Graph graph;
    BuildReport report;
};

/// Relabels arbitrary endpoint labels to dense ids in first-appearance order.
/// Self loops are dropped and counted; duplicate edges keep the first weight.
BuildResult build_graph(std::span<const LabeledEdge> edges, bool directed,
                        std::span<const std::string> isolated_nodes = {});

/// Convenience for integer-labelled graphs: nodes 0..n-1 labelled "0".."n-1".
Graph make_graph(std::size_t n, std::span<const std::pair<NodeId, NodeId>> edges,
                 bool directed = false);
Graph make_graph(std::size_t n, std::initializer_list<std::pair<NodeId, NodeId>> edges,
                 bool directed = false);
Graph make_weighted_graph(std::size_t n, std::span<const Edge> edges, bool directed = false);

/// Subgraph induced by `keep` (ids renumbered in the order given, labels kept).
Graph induced_subgraph(const Graph& g, std::span<const NodeId> keep);

/// Same node set, every arc reversed. Identity on undirected graphs.
Graph reversed(const Graph& g);

/// Collapses arc directions; weights of antiparallel arcs keep the first seen.
Graph as_undirected(const Graph& g);

} // namespace netcent
