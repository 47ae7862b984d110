#include "netcent/generators.hpp"

#include <algorithm>

#include "netcent/errors.hpp"

namespace netcent {

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) throw_input("empty range");
    // rejection sampling keeps the draw unbiased
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return x % bound;
}

Graph path_graph(std::size_t n) {
    std::vector<std::pair<NodeId, NodeId>> e;
    for (NodeId i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    return make_graph(n, e);
}

Graph cycle_graph(std::size_t n, bool directed) {
    std::vector<std::pair<NodeId, NodeId>> e;
    for (NodeId i = 0; i < n; ++i) e.push_back({i, static_cast<NodeId>((i + 1) % n)});
    return make_graph(n, e, directed);
}

Graph star_graph(std::size_t n) {
    std::vector<std::pair<NodeId, NodeId>> e;
    for (NodeId i = 1; i < n; ++i) e.push_back({0, i});
    return make_graph(n, e);
}

Graph complete_graph(std::size_t n) {
    std::vector<std::pair<NodeId, NodeId>> e;
    for (NodeId i = 0; i < n; ++i)
        for (NodeId j = i + 1; j < n; ++j) e.push_back({i, j});
    return make_graph(n, e);
}

Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed, bool directed) {
    Rng rng(seed);
    std::vector<std::pair<NodeId, NodeId>> e;
    for (NodeId i = 0; i < n; ++i)
        for (NodeId j = directed ? 0 : i + 1; j < n; ++j)
            if (i != j && rng.bernoulli(p)) e.push_back({i, j});
    return make_graph(n, e, directed);
}

Graph barabasi_albert(std::size_t n, std::size_t m, std::uint64_t seed) {
    if (m < 1 || n < m + 1) throw_input("barabasi_albert needs 1 <= m < n");
    Rng rng(seed);
    std::vector<std::pair<NodeId, NodeId>> e;
    std::vector<NodeId> ends; // each node appears once per incident edge
    for (NodeId i = 0; i <= m; ++i)
        for (NodeId j = i + 1; j <= m; ++j) {
            e.push_back({i, j});
            ends.push_back(i);
            ends.push_back(j);
        }
    std::vector<NodeId> picked;
    for (NodeId v = static_cast<NodeId>(m + 1); v < n; ++v) {
        picked.clear();
        while (picked.size() < m) {
            const NodeId t = ends[rng.below(ends.size())];
            if (std::find(picked.begin(), picked.end(), t) == picked.end()) picked.push_back(t);
        }
        for (NodeId t : picked) {
            e.push_back({t, v});
            ends.push_back(t);
            ends.push_back(v);
        }
    }
    return make_graph(n, e);
}

Graph random_orientation(const Graph& g, std::uint64_t seed, double reciprocal) {
    Rng rng(seed);
    std::vector<Edge> arcs;
    for (const Edge& e : g.edges()) {
        if (rng.bernoulli(reciprocal)) {
            arcs.push_back(e);
            arcs.push_back({e.target, e.source, e.weight});
        } else if (rng.bernoulli(0.5)) {
            arcs.push_back(e);
        } else {
            arcs.push_back({e.target, e.source, e.weight});
        }
    }
    return Graph::from_clean_edges(g.labels(), std::move(arcs), true);
}

} // namespace netcent
