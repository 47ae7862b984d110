#include "netcent/paths.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <queue>

#include "netcent/errors.hpp"

namespace netcent {

bool SingleSourceSearch::same_length(double a, double b) noexcept {
    if (a == b) return true;
    return std::abs(a - b) <= 1e-12 * std::max({1.0, std::abs(a), std::abs(b)});
}

SingleSourceSearch::SingleSourceSearch(const Graph& g, PathOptions options)
    : g_(&g), cap_(options.cap), lengths_(options.lengths), unit_(options.unit),
      reverse_(options.reverse && g.directed()) {
    if (!lengths_.empty() && lengths_.size() != g.edge_count())
        throw_input("per-edge length vector does not match edge count");
    if (!unit_) {
        // all-unit lengths take the BFS path, so results match the unweighted case bit for bit
        if (lengths_.empty())
            unit_ = !g.weighted() || std::all_of(g.edges().begin(), g.edges().end(),
                                                 [](const Edge& e) { return e.weight == 1.0; });
        else
            unit_ = std::all_of(lengths_.begin(), lengths_.end(), [](double x) { return x == 1.0; });
    }
    dist_.assign(g.node_count(), kInfinity);
    sigma_.assign(g.node_count(), 0.0);
    order_.reserve(g.node_count());
}

void SingleSourceSearch::run(NodeId source) {
    if (source >= g_->node_count()) throw_input("source node out of range");
    source_ = source;
    for (NodeId v : order_) {
        dist_[v] = kInfinity;
        sigma_[v] = 0.0;
    }
    order_.clear();
    dist_[source] = 0.0;
    sigma_[source] = 1.0;
    if (unit_)
        bfs();
    else
        dijkstra();
}

void SingleSourceSearch::bfs() {
    order_.push_back(source_);
    const double limit = cap_.value_or(kInfinity);
    for (std::size_t head = 0; head < order_.size(); ++head) {
        const NodeId v = order_[head];
        const double next = dist_[v] + 1.0;
        if (next > limit) continue;
        for (const Arc& a : forward(v)) {
            const NodeId w = a.node;
            if (dist_[w] == kInfinity) {
                dist_[w] = next;
                order_.push_back(w);
            }
            if (dist_[w] == next) sigma_[w] += sigma_[v];
        }
    }
}

void SingleSourceSearch::dijkstra() {
    using Item = std::pair<double, NodeId>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    const double limit = cap_.value_or(kInfinity);
    // tentative distances live in dist_; settled marks membership in order_
    std::vector<char>& settled = settled_;
    settled.assign(g_->node_count(), 0);
    heap.push({0.0, source_});
    while (!heap.empty()) {
        auto [d, v] = heap.top();
        heap.pop();
        if (settled[v] || d > dist_[v]) continue;
        settled[v] = 1;
        order_.push_back(v);
        for (const Arc& a : forward(v)) {
            const NodeId w = a.node;
            if (settled[w]) continue;
            const double nd = d + length(a);
            if (nd > limit && !same_length(nd, limit)) continue;
            if (dist_[w] != kInfinity && same_length(nd, dist_[w])) {
                sigma_[w] += sigma_[v];
            } else if (nd < dist_[w]) {
                dist_[w] = nd;
                sigma_[w] = sigma_[v];
                heap.push({nd, w});
            }
        }
    }
    // nodes touched but never settled cannot exist: every tentative node gets settled
}

ShortestPaths shortest_paths(const Graph& g, NodeId source, std::optional<double> cap) {
    PathOptions opt;
    opt.cap = cap;
    SingleSourceSearch search(g, opt);
    search.run(source);
    return {search.distance(), search.sigma()};
}

DistanceMatrix all_pairs_distances(const Graph& g, PathOptions options) {
    const std::size_t n = g.node_count();
    DistanceMatrix d(n);
    SingleSourceSearch search(g, options);
    for (NodeId s = 0; s < n; ++s) {
        search.run(s);
        for (NodeId v : search.order()) d(s, v) = search.distance()[v];
    }
    return d;
}

namespace {

constexpr std::size_t kExcluded = static_cast<std::size_t>(-1);

void finish(ComponentLabeling& out) {
    out.giant_size = 0;
    for (std::size_t s : out.sizes) out.giant_size = std::max(out.giant_size, s);
}

ComponentLabeling weak_components(const Graph& g, std::span<const char> alive) {
    const std::size_t n = g.node_count();
    ComponentLabeling out;
    out.component.assign(n, kExcluded);
    std::vector<NodeId> stack;
    for (NodeId s = 0; s < n; ++s) {
        if (out.component[s] != kExcluded || (!alive.empty() && !alive[s])) continue;
        const std::size_t id = out.sizes.size();
        std::size_t size = 0;
        out.component[s] = id;
        stack.push_back(s);
        while (!stack.empty()) {
            const NodeId v = stack.back();
            stack.pop_back();
            ++size;
            auto visit = [&](std::span<const Arc> arcs) {
                for (const Arc& a : arcs) {
                    const NodeId w = a.node;
                    if (out.component[w] != kExcluded || (!alive.empty() && !alive[w])) continue;
                    out.component[w] = id;
                    stack.push_back(w);
                }
            };
            visit(g.out(v));
            if (g.directed()) visit(g.in(v));
        }
        out.sizes.push_back(size);
    }
    finish(out);
    return out;
}

// Iterative Tarjan.
ComponentLabeling strong_components(const Graph& g, std::span<const char> alive) {
    const std::size_t n = g.node_count();
    constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
    ComponentLabeling out;
    out.component.assign(n, kExcluded);
    std::vector<std::size_t> index(n, kUnvisited), low(n, 0);
    std::vector<char> on_stack(n, 0);
    std::vector<NodeId> stack;
    struct Frame {
        NodeId v;
        std::size_t next;
    };
    std::vector<Frame> call;
    std::size_t counter = 0;

    for (NodeId root = 0; root < n; ++root) {
        if (index[root] != kUnvisited || (!alive.empty() && !alive[root])) continue;
        call.push_back({root, 0});
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!call.empty()) {
            Frame& f = call.back();
            auto arcs = g.out(f.v);
            if (f.next < arcs.size()) {
                const NodeId w = arcs[f.next++].node;
                if (!alive.empty() && !alive[w]) continue;
                if (index[w] == kUnvisited) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
                continue;
            }
            const NodeId v = f.v;
            call.pop_back();
            if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
            if (low[v] != index[v]) continue;
            const std::size_t id = out.sizes.size();
            std::size_t size = 0;
            NodeId w;
            do {
                w = stack.back();
                stack.pop_back();
                on_stack[w] = 0;
                out.component[w] = id;
                ++size;
            } while (w != v);
            out.sizes.push_back(size);
        }
    }
    finish(out);
    return out;
}

} // namespace

ComponentLabeling components(const Graph& g, Connectivity mode, std::span<const char> alive) {
    if (!alive.empty() && alive.size() != g.node_count())
        throw_input("alive mask does not match node count");
    if (mode == Connectivity::strong && g.directed()) return strong_components(g, alive);
    return weak_components(g, alive);
}

bool is_connected(const Graph& g) {
    if (g.node_count() == 0) return true;
    return components(g).sizes.size() == 1;
}

} // namespace netcent
