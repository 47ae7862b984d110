#include "netcent/flow.hpp"

#include <algorithm>
#include <limits>

#include "netcent/errors.hpp"
#include "netcent/paths.hpp"

namespace netcent {

namespace {
constexpr double kEps = 1e-12;
constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
} // namespace

FlowNetwork::FlowNetwork(std::size_t n) : adj_(n) {}

std::size_t FlowNetwork::add_arc(std::size_t u, std::size_t v, double cap) {
    const std::size_t a = head_.size();
    head_.push_back(v);
    cap_.push_back(cap);
    head_.push_back(u);
    cap_.push_back(0.0);
    res_.push_back(cap);
    res_.push_back(0.0);
    adj_[u].push_back(a);
    adj_[v].push_back(a + 1);
    sorted_ = false;
    return a;
}

std::size_t FlowNetwork::add_edge(std::size_t u, std::size_t v, double cap) {
    const std::size_t a = add_arc(u, v, cap);
    cap_[a + 1] = cap;
    res_[a + 1] = cap;
    return a;
}

void FlowNetwork::sort_adjacency() {
    for (auto& list : adj_)
        std::stable_sort(list.begin(), list.end(),
                         [&](std::size_t a, std::size_t b) { return head_[a] < head_[b]; });
    sorted_ = true;
}

void FlowNetwork::reset() { res_ = cap_; }

double FlowNetwork::max_flow(std::size_t s, std::size_t t) {
    if (s == t) throw_input("max flow requires distinct source and sink");
    if (!sorted_) sort_adjacency();
    const std::size_t n = adj_.size();
    std::vector<std::size_t> parent(n);
    std::vector<std::size_t> queue;
    queue.reserve(n);
    double total = 0.0;
    for (;;) {
        std::fill(parent.begin(), parent.end(), kNone);
        parent[s] = kNone - 1;
        queue.clear();
        queue.push_back(s);
        for (std::size_t i = 0; i < queue.size() && parent[t] == kNone; ++i) {
            const std::size_t v = queue[i];
            for (std::size_t a : adj_[v]) {
                const std::size_t w = head_[a];
                if (parent[w] != kNone || res_[a] <= kEps) continue;
                parent[w] = a;
                queue.push_back(w);
                if (w == t) break;
            }
        }
        if (parent[t] == kNone) break;
        double bottleneck = std::numeric_limits<double>::infinity();
        for (std::size_t v = t; v != s; v = head_[parent[v] ^ 1])
            bottleneck = std::min(bottleneck, res_[parent[v]]);
        for (std::size_t v = t; v != s; v = head_[parent[v] ^ 1]) {
            res_[parent[v]] -= bottleneck;
            res_[parent[v] ^ 1] += bottleneck;
        }
        total += bottleneck;
    }
    return total;
}

double FlowNetwork::inflow(std::size_t v) const noexcept {
    double in = 0.0;
    for (std::size_t a : adj_[v]) {
        const double f = flow(a);
        if (f < -kEps) in -= f;
    }
    return in;
}

std::vector<char> FlowNetwork::source_side(std::size_t s) const {
    std::vector<char> seen(adj_.size(), 0);
    std::vector<std::size_t> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
        const std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t a : adj_[v]) {
            const std::size_t w = head_[a];
            if (!seen[w] && res_[a] > kEps) {
                seen[w] = 1;
                stack.push_back(w);
            }
        }
    }
    return seen;
}

MaxFlowSolver::MaxFlowSolver(const Graph& g) : g_(&g), net_(g.node_count()) {
    edge_arc_.reserve(g.edge_count());
    for (const Edge& e : g.edges()) {
        edge_arc_.push_back(g.directed() ? net_.add_arc(e.source, e.target, e.weight)
                                         : net_.add_edge(e.source, e.target, e.weight));
    }
}

double MaxFlowSolver::solve_into(NodeId s, NodeId t, std::vector<double>& through) {
    const std::size_t n = g_->node_count();
    if (s >= n || t >= n) throw_input("flow endpoint out of range");
    net_.reset();
    const double value = net_.max_flow(s, t);
    through.assign(n, 0.0);
    for (NodeId v = 0; v < n; ++v) through[v] = net_.inflow(v);
    through[s] = value;
    through[t] = value;
    return value;
}

MaxFlowResult MaxFlowSolver::solve(NodeId s, NodeId t) {
    MaxFlowResult r;
    r.value = solve_into(s, t, r.throughflow);
    r.edge_flow.resize(edge_arc_.size());
    for (std::size_t e = 0; e < edge_arc_.size(); ++e) r.edge_flow[e] = net_.flow(edge_arc_[e]);
    return r;
}

MaxFlowResult max_flow(const Graph& g, NodeId s, NodeId t) {
    MaxFlowSolver solver(g);
    return solver.solve(s, t);
}

namespace {

// Node-split network: v_in = 2v, v_out = 2v+1.
FlowNetwork split_network(const Graph& g, NodeId s, NodeId t) {
    const std::size_t n = g.node_count();
    const double big = static_cast<double>(n + 1);
    FlowNetwork net(2 * n);
    for (NodeId v = 0; v < n; ++v)
        net.add_arc(2 * v, 2 * v + 1, (v == s || v == t) ? big : 1.0);
    for (const Edge& e : g.edges()) {
        net.add_arc(2 * e.source + 1, 2 * e.target, big);
        if (!g.directed()) net.add_arc(2 * e.target + 1, 2 * e.source, big);
    }
    return net;
}

} // namespace

VertexCut min_vertex_cut(const Graph& g, NodeId s, NodeId t) {
    if (s == t) throw_input("vertex cut requires distinct nodes");
    if (g.has_edge(s, t)) throw_input("vertex cut undefined for adjacent nodes");
    FlowNetwork net = split_network(g, s, t);
    VertexCut cut;
    cut.size = static_cast<std::size_t>(net.max_flow(2 * s + 1, 2 * t) + 0.5);
    const auto side = net.source_side(2 * s + 1);
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (side[2 * v] && !side[2 * v + 1]) cut.nodes.push_back(v);
    return cut;
}

std::optional<std::vector<NodeId>> separator_smaller_than(const Graph& g, std::size_t k) {
    const std::size_t n = g.node_count();
    if (n <= k) return std::vector<NodeId>{};
    if (!is_connected(g)) return std::vector<NodeId>{};
    // Even's reduction: some node among the first k survives any separator of
    // size < k, so it suffices to test pairs whose lower index is below k.
    for (NodeId i = 0; i < std::min(k, n); ++i) {
        for (NodeId j = i + 1; j < n; ++j) {
            if (g.has_edge(i, j)) continue;
            VertexCut cut = min_vertex_cut(g, i, j);
            if (cut.size < k) return cut.nodes;
        }
    }
    return std::nullopt;
}

std::size_t vertex_connectivity(const Graph& g) {
    const std::size_t n = g.node_count();
    if (n <= 1) return 0;
    if (!is_connected(g)) return 0;
    std::size_t best = n - 1;
    for (NodeId i = 0; i < n && i <= best; ++i) {
        for (NodeId j = i + 1; j < n; ++j) {
            if (g.has_edge(i, j)) continue;
            best = std::min(best, min_vertex_cut(g, i, j).size);
        }
    }
    return best;
}

} // namespace netcent
