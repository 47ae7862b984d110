#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "netcent/graph.hpp"

namespace netcent {

/// How edge lengths are taken during shortest-path searches.
struct PathOptions {
    /// Distances beyond this are treated as unreachable.
    std::optional<double> cap;
    /// Per-EdgeId lengths. Empty means "use edge weights".
    std::span<const double> lengths;
    /// Ignore weights entirely (hop counts).
    bool unit = false;
    /// Follow arcs backwards (distances *to* the source on directed graphs).
    bool reverse = false;
};

struct ShortestPaths {
    std::vector<double> distance; ///< kInfinity when unreachable
    std::vector<double> sigma;    ///< number of shortest paths from the source
};

/// Single-source distances and shortest-path counts. BFS when every length is
/// 1, Dijkstra otherwise.
ShortestPaths shortest_paths(const Graph& g, NodeId source, std::optional<double> cap = {});

/**
 * Reusable single-source search that also exposes the settle order and the
 * shortest-path predecessor relation, which is what dependency-accumulation
 * algorithms need. Workspace vectors are reused across run() calls.
 */
class SingleSourceSearch {
public:
    SingleSourceSearch(const Graph& g, PathOptions options = {});

    void run(NodeId source);

    NodeId source() const noexcept { return source_; }
    const std::vector<double>& distance() const noexcept { return dist_; }
    const std::vector<double>& sigma() const noexcept { return sigma_; }
    /// Reached nodes in non-decreasing distance order (source first).
    const std::vector<NodeId>& order() const noexcept { return order_; }

    /// Calls f(pred) for every predecessor of w on a shortest path from the source.
    template <typename F>
    void for_each_predecessor(NodeId w, F&& f) const {
        for (const Arc& a : backward(w)) {
            const NodeId v = a.node;
            if (dist_[v] == kInfinity) continue;
            if (same_length(dist_[v] + length(a), dist_[w])) f(v);
        }
    }

    /// Calls f(succ) for every successor of v on a shortest path from the source.
    template <typename F>
    void for_each_successor(NodeId v, F&& f) const {
        for (const Arc& a : forward(v)) {
            const NodeId w = a.node;
            if (dist_[w] == kInfinity) continue;
            if (same_length(dist_[v] + length(a), dist_[w])) f(w);
        }
    }

    double length(const Arc& a) const noexcept {
        if (unit_) return 1.0;
        return lengths_.empty() ? a.weight : lengths_[a.edge];
    }

    static bool same_length(double a, double b) noexcept;

private:
    std::span<const Arc> forward(NodeId v) const noexcept {
        return reverse_ ? g_->in(v) : g_->out(v);
    }
    std::span<const Arc> backward(NodeId v) const noexcept {
        return reverse_ ? g_->out(v) : g_->in(v);
    }
    void bfs();
    void dijkstra();

    const Graph* g_;
    std::optional<double> cap_;
    std::span<const double> lengths_;
    bool unit_;
    bool reverse_;
    NodeId source_ = 0;
    std::vector<double> dist_;
    std::vector<double> sigma_;
    std::vector<NodeId> order_;
    std::vector<char> settled_;
};

/// Row-major all-pairs distance table.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    explicit DistanceMatrix(std::size_t n) : n_(n), d_(n * n, kInfinity) {}
    std::size_t size() const noexcept { return n_; }
    double operator()(std::size_t u, std::size_t v) const noexcept { return d_[u * n_ + v]; }
    double& operator()(std::size_t u, std::size_t v) noexcept { return d_[u * n_ + v]; }
    std::span<const double> row(std::size_t u) const noexcept { return {d_.data() + u * n_, n_}; }

private:
    std::size_t n_ = 0;
    std::vector<double> d_;
};

DistanceMatrix all_pairs_distances(const Graph& g, PathOptions options = {});

enum class Connectivity { weak, strong };

struct ComponentLabeling {
    std::vector<std::size_t> component; ///< per node; SIZE_MAX for excluded nodes
    std::vector<std::size_t> sizes;
    std::size_t giant_size = 0;
};

/// Connected components. Strong mode on an undirected graph equals weak mode.
/// When `alive` is non-empty only nodes with alive[v] participate.
ComponentLabeling components(const Graph& g, Connectivity mode = Connectivity::weak,
                             std::span<const char> alive = {});

bool is_connected(const Graph& g);

} // namespace netcent
