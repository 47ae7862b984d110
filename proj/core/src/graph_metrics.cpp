#include "netcent/graph_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "netcent/errors.hpp"
#include "netcent/flow.hpp"
#include "netcent/generators.hpp"
#include "netcent/global.hpp"
#include "netcent/iterative.hpp"
#include "netcent/local.hpp"
#include "netcent/paths.hpp"

namespace netcent {

namespace {

double as_double(std::size_t x) { return static_cast<double>(x); }

double freeman_sum(const std::vector<double>& c) {
    if (c.empty()) return 0.0;
    const double top = *std::max_element(c.begin(), c.end());
    double sum = 0.0;
    for (double x : c) sum += top - x;
    return sum;
}

void require_cap(const Graph& g, std::size_t cap, const char* what) {
    if (g.node_count() > cap)
        throw_compute(std::string(what) + ": " + std::to_string(g.node_count()) +
                      " nodes exceeds size_cap " + std::to_string(cap) + " (raise size_cap to run anyway)");
}

GraphMetricValue node_set(const char* id, std::vector<NodeId> nodes) {
    std::sort(nodes.begin(), nodes.end());
    GraphMetricValue out;
    out.metric_id = id;
    out.value = as_double(nodes.size());
    out.nodes = std::move(nodes);
    return out;
}

} // namespace

GraphMetricValue dispersion(const Graph& g) {
    GraphMetricValue out;
    out.metric_id = "dispersion";
    SingleSourceSearch search(g);
    for (NodeId s = 0; s < g.node_count(); ++s) {
        search.run(s);
        for (NodeId v : search.order()) out.value += search.distance()[v];
        out.skipped_pairs += g.node_count() - search.order().size();
    }
    return out;
}

GraphMetricValue degree_gc(const Graph& g, bool normalized) {
    const std::size_t n = g.node_count();
    GraphMetricValue out;
    out.metric_id = normalized ? "degree-gc" : "degree-gc-raw";
    if (n == 0) return out;
    std::size_t top = 0;
    for (NodeId v = 0; v < n; ++v) top = std::max(top, g.degree(v));
    if (normalized) {
        if (n < 3) throw_input("normalized degree centralization needs at least 3 nodes");
        double sum = 0.0;
        for (NodeId v = 0; v < n; ++v) sum += as_double(top - g.degree(v));
        out.value = sum / as_double(n * n - 3 * n + 2);
    } else {
        for (NodeId v = 0; v < n; ++v) {
            const double a = 1.0 + as_double(top - g.degree(v));
            out.value += a * (a - 1.0) / 2.0; // binom(a, 2), zero for a = 1
        }
    }
    return out;
}

GraphMetricValue centralization(const Graph& g, CentralizationBase base) {
    const std::size_t n = g.node_count();
    GraphMetricValue out;
    if (n < 3) throw_input("centralization needs at least 3 nodes");
    switch (base) {
    case CentralizationBase::betweenness: {
        out.metric_id = "betweenness-gc";
        out.value = freeman_sum(betweenness(g, true).values) / as_double(n - 1);
        break;
    }
    case CentralizationBase::closeness: {
        out.metric_id = "closeness-gc";
        if (!is_connected(g) || (g.directed() && components(g, Connectivity::strong).sizes.size() != 1))
            throw_input("closeness centralization needs a connected graph");
        std::vector<double> c = closeness(g).values;
        for (double& x : c) x *= as_double(n - 1);
        out.value = freeman_sum(c) / (as_double(n * n - 3 * n + 2) / as_double(2 * n - 3));
        break;
    }
    case CentralizationBase::flow_betweenness: {
        out.metric_id = "flow-betweenness-gc";
        std::vector<double> c = flow_betweenness(g, true).values;
        double pairs = as_double((n - 1) * (n - 2));
        if (!g.directed()) pairs *= 0.5;
        for (double& x : c) x /= pairs;
        out.value = freeman_sum(c) / as_double(n - 1);
        break;
    }
    }
    return out;
}

GraphMetricValue reciprocity(const Graph& g) {
    if (!g.directed()) throw_input("reciprocity requires a directed graph");
    GraphMetricValue out;
    out.metric_id = "reciprocity";
    if (g.edge_count() == 0) return out;
    std::size_t mutual = 0;
    for (const Edge& e : g.edges())
        if (g.has_edge(e.target, e.source)) ++mutual;
    out.value = as_double(mutual) / as_double(g.edge_count());
    return out;
}

GraphMetricValue k_core(const Graph& g, std::size_t k) {
    const auto shell = k_shell(g).shell;
    std::vector<NodeId> nodes;
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (shell[v] >= k) nodes.push_back(v);
    return node_set("k-core", std::move(nodes));
}

GraphMetricValue max_clique(const Graph& g, std::size_t k, std::size_t size_cap) {
    require_cap(g, size_cap, "k-clique");
    if (g.directed()) throw_input("cliques are computed on undirected graphs");
    const std::size_t n = g.node_count();
    std::vector<NodeId> best, current;
    // Branch and bound with a greedy colouring bound (Tomita-style).
    std::function<void(std::vector<NodeId>)> expand = [&](std::vector<NodeId> cand) {
        // colour classes give an upper bound on the clique size within cand
        std::vector<std::vector<NodeId>> classes;
        std::vector<std::pair<NodeId, std::size_t>> coloured;
        for (NodeId v : cand) {
            std::size_t c = 0;
            for (; c < classes.size(); ++c) {
                bool clash = false;
                for (NodeId u : classes[c])
                    if (g.has_edge(u, v)) {
                        clash = true;
                        break;
                    }
                if (!clash) break;
            }
            if (c == classes.size()) classes.emplace_back();
            classes[c].push_back(v);
        }
        for (std::size_t c = 0; c < classes.size(); ++c)
            for (NodeId v : classes[c]) coloured.push_back({v, c + 1});
        while (!coloured.empty()) {
            auto [v, colour] = coloured.back();
            if (current.size() + colour <= best.size()) return;
            coloured.pop_back();
            current.push_back(v);
            std::vector<NodeId> next;
            for (auto [u, c] : coloured)
                if (g.has_edge(u, v)) next.push_back(u);
            if (next.empty()) {
                if (current.size() > best.size()) best = current;
            } else {
                std::sort(next.begin(), next.end());
                expand(next);
            }
            current.pop_back();
        }
    };
    std::vector<NodeId> all(n);
    std::iota(all.begin(), all.end(), 0);
    if (n) expand(all);
    if (best.size() < k) best.clear();
    return node_set("k-clique", std::move(best));
}

GraphMetricValue max_k_plex(const Graph& g, std::size_t k, std::size_t size_cap) {
    require_cap(g, size_cap, "k-plex");
    if (g.directed()) throw_input("k-plexes are computed on undirected graphs");
    if (k < 1) throw_input("k must be at least 1");
    const std::size_t n = g.node_count();
    std::vector<NodeId> best, current;
    std::vector<std::size_t> inner(n, 0); // neighbours inside `current`
    // S + v stays a k-plex iff v and every member keep degree >= |S|+1-k inside.
    auto fits = [&](NodeId v) {
        const std::size_t size = current.size() + 1;
        if (inner[v] + k < size) return false;
        for (NodeId u : current) {
            const std::size_t deg = inner[u] + (g.has_edge(u, v) ? 1 : 0);
            if (deg + k < size) return false;
        }
        return true;
    };
    std::function<void(std::vector<NodeId>)> search = [&](std::vector<NodeId> cand) {
        if (current.size() > best.size()) best = current;
        for (std::size_t i = 0; i < cand.size(); ++i) {
            if (current.size() + (cand.size() - i) <= best.size()) return;
            const NodeId v = cand[i];
            current.push_back(v);
            for (const Arc& a : g.out(v)) ++inner[a.node];
            // k-plexes are hereditary, so infeasible candidates can be dropped for good
            std::vector<NodeId> next;
            for (std::size_t j = i + 1; j < cand.size(); ++j)
                if (fits(cand[j])) next.push_back(cand[j]);
            search(next);
            for (const Arc& a : g.out(v)) --inner[a.node];
            current.pop_back();
        }
    };
    std::vector<NodeId> all(n);
    std::iota(all.begin(), all.end(), 0);
    search(all);
    return node_set("k-plex", std::move(best));
}

GraphMetricValue k_component(const Graph& g, std::size_t k, std::size_t size_cap) {
    require_cap(g, size_cap, "k-component");
    if (g.directed()) throw_input("k-components are computed on undirected graphs");
    if (k < 1) throw_input("k must be at least 1");
    std::vector<NodeId> best;
    // Split along separators smaller than k until the pieces are k-connected.
    std::function<void(const std::vector<NodeId>&)> split = [&](const std::vector<NodeId>& nodes) {
        if (nodes.size() <= k || nodes.size() <= best.size()) return;
        const Graph h = induced_subgraph(g, nodes);
        const ComponentLabeling comp = components(h);
        std::vector<std::vector<NodeId>> parts(comp.sizes.size());
        for (NodeId v = 0; v < h.node_count(); ++v) parts[comp.component[v]].push_back(nodes[v]);
        if (parts.size() > 1) {
            for (const auto& p : parts) split(p);
            return;
        }
        auto sep = separator_smaller_than(h, k);
        if (!sep) {
            if (nodes.size() > best.size()) best = nodes;
            return;
        }
        std::vector<char> cut(h.node_count(), 0), alive(h.node_count(), 1);
        for (NodeId v : *sep) cut[v] = 1, alive[v] = 0;
        const ComponentLabeling rest = components(h, Connectivity::weak, alive);
        std::vector<std::vector<NodeId>> pieces(rest.sizes.size());
        for (NodeId v = 0; v < h.node_count(); ++v)
            if (!cut[v]) pieces[rest.component[v]].push_back(nodes[v]);
        for (auto& piece : pieces) {
            for (NodeId v : *sep) piece.push_back(nodes[v]);
            std::sort(piece.begin(), piece.end());
            split(piece);
        }
    };
    std::vector<NodeId> all(g.node_count());
    std::iota(all.begin(), all.end(), 0);
    split(all);
    return node_set("k-component", std::move(best));
}

GraphMetricValue global_clustering(const Graph& g) {
    GraphMetricValue out;
    out.metric_id = "global-clustering";
    const auto c = clustering(g).values;
    if (!c.empty()) out.value = std::accumulate(c.begin(), c.end(), 0.0) / as_double(c.size());
    return out;
}

namespace {

double pearson(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = as_double(x.size());
    const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
    const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
        syy += (y[i] - my) * (y[i] - my);
    }
    const double scale = std::max(1.0, n);
    if (sxx <= 1e-12 * scale || syy <= 1e-12 * scale)
        throw_compute("assortativity undefined: degree variance is zero");
    return sxy / std::sqrt(sxx * syy);
}

} // namespace

GraphMetricValue assortativity(const Graph& g, AssortativityMode mode) {
    if (g.edge_count() < 2) throw_compute("assortativity undefined: fewer than two edges");
    std::vector<double> x, y;
    if (mode == AssortativityMode::undirected) {
        if (g.directed()) throw_input("undirected assortativity needs an undirected graph");
        for (const Edge& e : g.edges()) {
            const double a = as_double(g.degree(e.source)) - 1.0;
            const double b = as_double(g.degree(e.target)) - 1.0;
            x.push_back(a);
            y.push_back(b);
            x.push_back(b);
            y.push_back(a);
        }
    } else {
        if (!g.directed()) throw_input("directed assortativity needs a directed graph");
        auto deg = [&](NodeId v, bool out) { return as_double(out ? g.out_degree(v) : g.in_degree(v)) - 1.0; };
        const bool src_out = mode != AssortativityMode::in_in;
        const bool dst_out = mode == AssortativityMode::out_out;
        for (const Edge& e : g.edges()) {
            x.push_back(deg(e.source, src_out));
            y.push_back(deg(e.target, dst_out));
        }
    }
    GraphMetricValue out;
    out.metric_id = "assortativity";
    out.value = pearson(x, y);
    return out;
}

ScoreVector local_assortativity(const Graph& g) {
    if (g.directed()) throw_input("local assortativity needs an undirected graph");
    const std::size_t n = g.node_count();
    const double m = as_double(g.edge_count());
    if (g.edge_count() < 2) throw_compute("assortativity undefined: fewer than two edges");
    // moments of the excess degree over edge ends
    double mu = 0.0, sq = 0.0;
    for (NodeId v = 0; v < n; ++v) {
        const double j = as_double(g.degree(v)) - 1.0;
        mu += as_double(g.degree(v)) * j;
        sq += as_double(g.degree(v)) * j * j;
    }
    mu /= 2.0 * m;
    const double var = sq / (2.0 * m) - mu * mu;
    if (var <= 1e-12) throw_compute("assortativity undefined: degree variance is zero");
    std::vector<double> rho(n, 0.0);
    for (NodeId v = 0; v < n; ++v) {
        if (g.degree(v) == 0) continue;
        const double j = as_double(g.degree(v)) - 1.0;
        double kbar = 0.0;
        for (const Arc& a : g.out(v)) kbar += as_double(g.degree(a.node)) - 1.0;
        kbar /= as_double(g.degree(v));
        rho[v] = (j + 1.0) * (j * kbar - mu * mu) / (2.0 * m * var);
    }
    return {std::move(rho), "local-assortativity"};
}

GraphMetricValue delta_hyperbolicity(const Graph& g, std::size_t sample_count, std::uint64_t seed) {
    if (sample_count < 1) throw_input("sample_count must be at least 1");
    if (!is_connected(g)) throw_input("delta-hyperbolicity needs a connected graph");
    const std::size_t n = g.node_count();
    GraphMetricValue out;
    out.metric_id = "delta-hyperbolicity";
    if (n < 3) {
        out.extras = {{"mean", 0.0}, {"mean_ratio", 0.0}, {"triples", 0.0}};
        return out;
    }
    const DistanceMatrix d = all_pairs_distances(g);
    std::vector<double> side_a(n), side_b(n), side_c(n);
    // distance from every node to the union of u-v geodesic vertices
    auto to_geodesics = [&](NodeId u, NodeId v, std::vector<double>& dist) {
        std::fill(dist.begin(), dist.end(), kInfinity);
        for (NodeId w = 0; w < n; ++w) {
            if (!SingleSourceSearch::same_length(d(u, w) + d(w, v), d(u, v))) continue;
            for (NodeId m = 0; m < n; ++m) dist[m] = std::min(dist[m], d(m, w));
        }
    };
    double max_delta = 0.0, sum_delta = 0.0, sum_ratio = 0.0;
    std::size_t triples = 0;
    auto visit = [&](NodeId a, NodeId b, NodeId c) {
        to_geodesics(a, b, side_a);
        to_geodesics(b, c, side_b);
        to_geodesics(a, c, side_c);
        double delta = kInfinity;
        for (NodeId m = 0; m < n; ++m) delta = std::min(delta, std::max({side_a[m], side_b[m], side_c[m]}));
        const double ell = std::min({d(a, b), d(b, c), d(a, c)});
        max_delta = std::max(max_delta, delta);
        sum_delta += delta;
        sum_ratio += delta / ell;
        ++triples;
    };
    const double total = as_double(n) * as_double(n - 1) * as_double(n - 2) / 6.0;
    if (as_double(sample_count) >= total) {
        for (NodeId a = 0; a < n; ++a)
            for (NodeId b = a + 1; b < n; ++b)
                for (NodeId c = b + 1; c < n; ++c) visit(a, b, c);
    } else {
        Rng rng(seed);
        for (std::size_t i = 0; i < sample_count; ++i) {
            NodeId a = static_cast<NodeId>(rng.below(n)), b, c;
            do b = static_cast<NodeId>(rng.below(n)); while (b == a);
            do c = static_cast<NodeId>(rng.below(n)); while (c == a || c == b);
            visit(a, b, c);
        }
    }
    out.value = max_delta;
    out.extras = {{"mean", sum_delta / as_double(triples)},
                  {"mean_ratio", sum_ratio / as_double(triples)},
                  {"triples", as_double(triples)}};
    return out;
}

} // namespace netcent
