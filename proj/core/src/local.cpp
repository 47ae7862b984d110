#include "netcent/local.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "netcent/errors.hpp"

namespace netcent {

namespace {

void require_undirected(const Graph& g, const char* metric) {
    if (g.directed()) throw_input(std::string(metric) + " is defined on undirected graphs only");
}


// Neighbour sets of the undirected skeleton, ascending.
std::vector<std::vector<NodeId>> skeleton(const Graph& g) {
    std::vector<std::vector<NodeId>> nb(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v) {
        for (const Arc& a : g.out(v)) nb[v].push_back(a.node);
        if (g.directed()) {
            for (const Arc& a : g.in(v)) nb[v].push_back(a.node);
            std::sort(nb[v].begin(), nb[v].end());
            nb[v].erase(std::unique(nb[v].begin(), nb[v].end()), nb[v].end());
        }
    }
    return nb;
}

} // namespace

ScoreVector degree_centrality(const Graph& g, DegreeMode mode, bool normalized) {
    if (mode != DegreeMode::total && !g.directed())
        throw_input("in/out degree requires a directed graph");
    const std::size_t n = g.node_count();
    std::vector<double> s(n);
    for (NodeId v = 0; v < n; ++v) {
        switch (mode) {
        case DegreeMode::total: s[v] = static_cast<double>(g.degree(v)); break;
        case DegreeMode::in: s[v] = static_cast<double>(g.in_degree(v)); break;
        case DegreeMode::out: s[v] = static_cast<double>(g.out_degree(v)); break;
        }
        if (normalized) s[v] = n > 1 ? s[v] / static_cast<double>(n - 1) : 0.0;
    }
    const char* id = mode == DegreeMode::total ? "degree" : mode == DegreeMode::in ? "in-degree" : "out-degree";
    return {std::move(s), id};
}

std::vector<std::size_t> two_hop_counts(const Graph& g) {
    const std::size_t n = g.node_count();
    std::vector<std::size_t> d2(n, 0);
    std::vector<NodeId> stamp(n, static_cast<NodeId>(-1));
    for (NodeId w = 0; w < n; ++w) {
        stamp[w] = w;
        std::size_t count = 0;
        for (const Arc& a : g.out(w)) {
            if (stamp[a.node] != w) {
                stamp[a.node] = w;
                ++count;
            }
            for (const Arc& b : g.out(a.node)) {
                if (stamp[b.node] != w) {
                    stamp[b.node] = w;
                    ++count;
                }
            }
        }
        d2[w] = count;
    }
    return d2;
}

namespace {

// m-local(v) pieces: sum over u in N(v) of Q(u), where Q(u) = sum_{w in N(u)} d2(w).
std::vector<double> semi_local_sums(const Graph& g) {
    const std::size_t n = g.node_count();
    const auto d2 = two_hop_counts(g);
    std::vector<double> q(n, 0.0), c(n, 0.0);
    for (NodeId u = 0; u < n; ++u)
        for (const Arc& a : g.out(u)) q[u] += static_cast<double>(d2[a.node]);
    for (NodeId v = 0; v < n; ++v)
        for (const Arc& a : g.out(v)) c[v] += q[a.node];
    return c;
}

} // namespace

ScoreVector semi_local(const Graph& g) {
    require_undirected(g, "semi-local");
    return {semi_local_sums(g), "semi-local"};
}

ScoreVector hybrid_degree(const Graph& g, const MetricParams& params) {
    require_undirected(g, "hybrid-degree");
    const double alpha = params.alpha.value_or(1000.0);
    const double beta = params.beta.value_or(0.1);
    const double p = params.p;
    std::vector<double> s = semi_local_sums(g);
    for (NodeId v = 0; v < g.node_count(); ++v) {
        // modified local centrality: semi-local sum minus twice the neighbour degrees
        double neighbour_degrees = 0.0;
        for (const Arc& a : g.out(v)) neighbour_degrees += static_cast<double>(g.degree(a.node));
        const double m_local = s[v] - 2.0 * neighbour_degrees;
        s[v] = (beta - p) * alpha * static_cast<double>(g.degree(v)) + p * m_local;
    }
    return {std::move(s), "hybrid-degree", params.digest()};
}

ScoreVector volume(const Graph& g, std::size_t h) {
    require_undirected(g, "volume");
    if (h < 1) throw_input("volume needs h >= 1");
    const std::size_t n = g.node_count();
    std::vector<double> s(n, 0.0);
    std::vector<std::size_t> dist(n, static_cast<std::size_t>(-1));
    std::vector<NodeId> frontier;
    for (NodeId v = 0; v < n; ++v) {
        frontier.assign(1, v);
        dist[v] = 0;
        for (std::size_t head = 0; head < frontier.size(); ++head) {
            const NodeId u = frontier[head];
            if (u != v) s[v] += static_cast<double>(g.degree(u));
            if (dist[u] == h) continue;
            for (const Arc& a : g.out(u)) {
                if (dist[a.node] != static_cast<std::size_t>(-1)) continue;
                dist[a.node] = dist[u] + 1;
                frontier.push_back(a.node);
            }
        }
        for (NodeId u : frontier) dist[u] = static_cast<std::size_t>(-1);
    }
    return {std::move(s), "volume"};
}

ScoreVector clustering(const Graph& g) {
    const std::size_t n = g.node_count();
    std::vector<double> s(n, 0.0);
    std::vector<char> mark(n, 0);
    for (NodeId v = 0; v < n; ++v) {
        auto nb = g.out(v);
        const std::size_t k = nb.size();
        if (k < 2) continue;
        for (const Arc& a : nb) mark[a.node] = 1;
        std::size_t links = 0; // ordered pairs (u, w) with an arc u->w
        for (const Arc& a : nb)
            for (const Arc& b : g.out(a.node))
                if (mark[b.node] && b.node != v) ++links;
        for (const Arc& a : nb) mark[a.node] = 0;
        s[v] = static_cast<double>(links) / static_cast<double>(k * (k - 1));
    }
    return {std::move(s), "clustering"};
}

ScoreVector redundancy(const Graph& g) {
    const std::size_t n = g.node_count();
    const auto nb = skeleton(g);
    // symmetrised weight A_uv + A_vu
    auto sym = [&](NodeId u, NodeId v) {
        if (!g.directed()) return 2.0 * g.edge_weight(u, v).value_or(0.0);
        return g.edge_weight(u, v).value_or(0.0) + g.edge_weight(v, u).value_or(0.0);
    };
    std::vector<double> s(n, 0.0);
    std::vector<char> in_ego(n, 0);
    std::vector<NodeId> common;
    for (NodeId v = 0; v < n; ++v) {
        if (nb[v].empty()) continue;
        double total = 0.0;
        for (NodeId r : nb[v]) {
            in_ego[r] = 1;
            total += sym(v, r);
        }
        double sum = 0.0;
        for (NodeId r : nb[v]) {
            common.clear();
            for (NodeId t : nb[r])
                if (in_ego[t]) common.push_back(t);
            if (common.empty()) continue;
            double max_rt = 0.0;
            for (NodeId t : common) max_rt = std::max(max_rt, sym(r, t));
            for (NodeId s_node : common) sum += (sym(v, s_node) / total) * (sym(r, s_node) / max_rt);
        }
        for (NodeId r : nb[v]) in_ego[r] = 0;
        s[v] = sum;
    }
    return {std::move(s), "redundancy"};
}

ScoreVector clusterrank(const Graph& g) {
    if (!g.directed()) throw_input("clusterrank requires a directed graph");
    ScoreVector cc = clustering(g);
    std::vector<double> s(g.node_count(), 0.0);
    for (NodeId v = 0; v < g.node_count(); ++v) {
        double sum = 0.0;
        for (const Arc& a : g.out(v)) sum += static_cast<double>(g.out_degree(a.node)) + 1.0;
        s[v] = std::pow(10.0, -cc[v]) * sum;
    }
    return {std::move(s), "clusterrank"};
}

ScoreVector local_entropy(const Graph& g) {
    const auto nb = skeleton(g);
    std::vector<double> s(g.node_count(), 0.0);
    for (NodeId v = 0; v < g.node_count(); ++v)
        for (NodeId u : nb[v]) {
            const double d = static_cast<double>(nb[u].size());
            s[v] -= d * std::log(d);
        }
    return {std::move(s), "local-entropy"};
}

ScoreVector mapping_entropy(const Graph& g) {
    const auto nb = skeleton(g);
    std::vector<double> s(g.node_count(), 0.0);
    for (NodeId v = 0; v < g.node_count(); ++v) {
        double sum = 0.0;
        for (NodeId u : nb[v]) sum += std::log(static_cast<double>(nb[u].size()));
        s[v] = -static_cast<double>(nb[v].size()) * sum;
    }
    return {std::move(s), "mapping-entropy"};
}

std::size_t h_operator(std::vector<std::size_t> values) {
    std::sort(values.begin(), values.end(), std::greater<>());
    std::size_t h = 0;
    while (h < values.size() && values[h] >= h + 1) ++h;
    return h;
}

ScoreVector h_index(const Graph& g, std::size_t order) {
    if (order < 1) throw_input("h-index order must be at least 1");
    const auto nb = skeleton(g);
    const std::size_t n = g.node_count();
    std::vector<std::size_t> cur(n), next(n);
    for (NodeId v = 0; v < n; ++v) cur[v] = nb[v].size();
    std::vector<std::size_t> inputs;
    for (std::size_t k = 0; k < order; ++k) {
        for (NodeId v = 0; v < n; ++v) {
            inputs.clear();
            for (NodeId u : nb[v]) inputs.push_back(cur[u]);
            next[v] = h_operator(inputs);
        }
        if (next == cur) break; // fixed point reached: coreness
        cur.swap(next);
    }
    std::vector<double> s(cur.begin(), cur.end());
    return {std::move(s), "h-index"};
}

ScoreVector gauss_curvature(const Graph& g, std::size_t k_max) {
    require_undirected(g, "gauss-curvature");
    if (k_max < 1) throw_input("k_max must be at least 1");
    const std::size_t n = g.node_count();
    std::vector<double> s(n, 0.0);
    std::vector<std::size_t> census; // census[j] = number of (j+1)-cliques through v
    // Extends a clique inside N(v); `cand` holds neighbours adjacent to all members,
    // restricted to ids above the last member so each clique is counted once.
    std::function<void(const std::vector<NodeId>&, std::size_t)> grow =
        [&](const std::vector<NodeId>& cand, std::size_t size) {
            for (std::size_t i = 0; i < cand.size(); ++i) {
                ++census[size];
                if (size + 1 >= k_max) continue;
                std::vector<NodeId> next;
                for (std::size_t j = i + 1; j < cand.size(); ++j)
                    if (g.has_edge(cand[i], cand[j])) next.push_back(cand[j]);
                if (!next.empty()) grow(next, size + 1);
            }
        };
    for (NodeId v = 0; v < n; ++v) {
        census.assign(k_max, 0);
        census[0] = 1;
        if (k_max > 1) {
            std::vector<NodeId> nb;
            for (const Arc& a : g.out(v)) nb.push_back(a.node);
            grow(nb, 1);
        }
        double sum = 0.0;
        for (std::size_t k = 0; k < k_max; ++k)
            sum += ((k % 2 == 0) ? 1.0 : -1.0) * static_cast<double>(census[k]) / static_cast<double>(k + 1);
        s[v] = sum;
    }
    return {std::move(s), "gauss-curvature"};
}

} // namespace netcent
