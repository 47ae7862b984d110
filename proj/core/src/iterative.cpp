#include "netcent/iterative.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "netcent/errors.hpp"
#include "netcent/linalg.hpp"

namespace netcent {

namespace {

template <typename F>
void for_each_incident(const Graph& g, NodeId v, F&& f) {
    for (const Arc& a : g.out(v)) f(a.node);
    if (g.directed())
        for (const Arc& a : g.in(v)) f(a.node);
}

PowerIterationOptions iteration_options(const MetricParams& params) {
    PowerIterationOptions opt;
    opt.tol = params.tol;
    opt.max_iter = params.max_iter;
    return opt;
}

void require_directed(const Graph& g, const char* metric) {
    if (!g.directed()) throw_input(std::string(metric) + " requires a directed graph");
}

} // namespace

DecompositionResult k_shell(const Graph& g) {
    // Batagelj-Zaversnik bucket pruning
    const std::size_t n = g.node_count();
    DecompositionResult out;
    out.shell.assign(n, 0);
    if (n == 0) return out;
    std::vector<std::size_t> deg(n), pos(n), bin;
    std::vector<NodeId> vert(n);
    std::size_t max_deg = 0;
    for (NodeId v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        max_deg = std::max(max_deg, deg[v]);
    }
    bin.assign(max_deg + 1, 0);
    for (NodeId v = 0; v < n; ++v) ++bin[deg[v]];
    std::size_t start = 0;
    for (std::size_t d = 0; d <= max_deg; ++d) {
        const std::size_t count = bin[d];
        bin[d] = start;
        start += count;
    }
    for (NodeId v = 0; v < n; ++v) {
        pos[v] = bin[deg[v]]++;
        vert[pos[v]] = v;
    }
    for (std::size_t d = max_deg; d > 0; --d) bin[d] = bin[d - 1];
    bin[0] = 0;
    out.removal_order.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const NodeId v = vert[i];
        out.shell[v] = deg[v];
        out.removal_order.push_back({v, deg[v]});
        for_each_incident(g, v, [&](NodeId u) {
            if (deg[u] <= deg[v]) return;
            const std::size_t du = deg[u];
            const std::size_t pu = pos[u];
            const std::size_t pw = bin[du];
            const NodeId w = vert[pw];
            if (u != w) {
                pos[u] = pw;
                vert[pu] = w;
                pos[w] = pu;
                vert[pw] = u;
            }
            ++bin[du];
            --deg[u];
        });
    }
    return out;
}

ScoreVector k_shell_scores(const Graph& g) {
    auto d = k_shell(g);
    return {std::vector<double>(d.shell.begin(), d.shell.end()), "k-shell"};
}

ScoreVector mixed_degree_decomposition(const Graph& g, double lambda) {
    if (!(lambda >= 0.0 && lambda <= 1.0)) throw_input("lambda_mdd must lie in [0,1]");
    const std::size_t n = g.node_count();
    std::vector<double> residual(n), exhausted(n, 0.0), score(n, 0.0);
    std::vector<char> removed(n, 0);
    for (NodeId v = 0; v < n; ++v) residual[v] = static_cast<double>(g.degree(v));
    auto mixed = [&](NodeId v) { return residual[v] + lambda * exhausted[v]; };
    constexpr double slack = 1e-9;
    std::size_t left = n;
    std::vector<NodeId> queue;
    while (left > 0) {
        double m = std::numeric_limits<double>::infinity();
        for (NodeId v = 0; v < n; ++v)
            if (!removed[v]) m = std::min(m, mixed(v));
        queue.clear();
        for (NodeId v = 0; v < n; ++v)
            if (!removed[v] && mixed(v) <= m + slack) {
                removed[v] = 1;
                queue.push_back(v);
            }
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const NodeId v = queue[head];
            score[v] = m;
            --left;
            for_each_incident(g, v, [&](NodeId u) {
                if (removed[u]) return;
                residual[u] -= 1.0;
                exhausted[u] += 1.0;
                if (mixed(u) <= m + slack) {
                    removed[u] = 1;
                    queue.push_back(u);
                }
            });
        }
    }
    return {std::move(score), "mdd"};
}

ScoreVector neighborhood_coreness(const Graph& g) {
    const auto shell = k_shell(g).shell;
    std::vector<double> s(g.node_count(), 0.0);
    for (NodeId v = 0; v < g.node_count(); ++v)
        for_each_incident(g, v, [&](NodeId u) { s[v] += static_cast<double>(shell[u]); });
    return {std::move(s), "nc"};
}

ScoreVector neighborhood_coreness_plus(const Graph& g) {
    const ScoreVector nc = neighborhood_coreness(g);
    std::vector<double> s(g.node_count(), 0.0);
    for (NodeId v = 0; v < g.node_count(); ++v)
        for_each_incident(g, v, [&](NodeId u) { s[v] += nc[u]; });
    return {std::move(s), "nc-plus"};
}

ScoreVector eigenvector_centrality(const Graph& g, const MetricParams& params) {
    const bool out = g.directed() && params.out_neighbors;
    EigenPair p = power_iteration(
        [&](std::span<const double> x, std::span<double> y) {
            if (out)
                apply_out(g, x, y);
            else
                apply_in(g, x, y);
        },
        std::vector<double>(g.node_count(), 1.0), iteration_options(params));
    return {std::move(p.vector), "eigenvector", params.digest()};
}

ScoreVector katz_centrality(const Graph& g, const MetricParams& params) {
    const std::size_t n = g.node_count();
    require_dense_size(n, "katz");
    const double lambda = spectral_radius(g, iteration_options(params));
    const double alpha = params.alpha.value_or(lambda > 0.0 ? 0.85 / lambda : 0.1);
    const double beta = params.beta.value_or(1.0);
    if (!(alpha > 0.0)) throw_input("katz alpha must be positive");
    if (lambda > 0.0 && alpha * lambda >= 1.0)
        throw_input("katz alpha must be below 1/lambda_max = " + std::to_string(1.0 / lambda));
    const bool out = g.directed() && params.out_neighbors;
    DenseMatrix m = DenseMatrix::identity(n);
    for (const Edge& e : g.edges()) {
        // row v collects contributions from in-neighbours u of v (arc u->v)
        const NodeId row = out ? e.source : e.target;
        const NodeId col = out ? e.target : e.source;
        m(row, col) -= alpha * e.weight;
        if (!g.directed()) m(col, row) -= alpha * e.weight;
    }
    std::vector<double> rhs(n, beta);
    return {solve_linear(m, rhs), "katz", params.digest()};
}

ScoreVector pagerank(const Graph& g, const MetricParams& params) {
    const std::size_t n = g.node_count();
    const double alpha = params.alpha.value_or(0.85);
    const double beta = params.beta.value_or(1.0);
    if (!(alpha > 0.0 && alpha < 1.0)) throw_input("pagerank alpha must lie in (0,1)");
    std::vector<double> c(n, beta), next(n), share(n);
    for (std::size_t it = 0; it < params.max_iter; ++it) {
        for (NodeId u = 0; u < n; ++u)
            share[u] = c[u] / static_cast<double>(std::max<std::size_t>(g.out_degree(u), 1));
        double gap = 0.0;
        for (NodeId v = 0; v < n; ++v) {
            double s = 0.0;
            for (const Arc& a : g.in(v)) s += share[a.node];
            next[v] = alpha * s + beta;
            gap = std::max(gap, std::abs(next[v] - c[v]));
        }
        c.swap(next);
        if (gap < params.tol) {
            if (params.normalized) {
                const double total = std::accumulate(c.begin(), c.end(), 0.0);
                for (double& x : c) x /= total;
            }
            return {std::move(c), "pagerank", params.digest()};
        }
    }
    throw_compute("pagerank did not converge in " + std::to_string(params.max_iter) + " iterations");
}

ScoreVector contribution_centrality(const Graph& g, const MetricParams& params) {
    const std::size_t n = g.node_count();
    // neighbourhoods of the undirected skeleton
    std::vector<std::vector<NodeId>> nb(n);
    for (NodeId v = 0; v < n; ++v) {
        for_each_incident(g, v, [&](NodeId u) { nb[v].push_back(u); });
        std::sort(nb[v].begin(), nb[v].end());
        nb[v].erase(std::unique(nb[v].begin(), nb[v].end()), nb[v].end());
    }
    std::vector<double> w(g.edge_count());
    for (EdgeId id = 0; id < g.edge_count(); ++id) {
        const Edge& e = g.edges()[id];
        const auto& a = nb[e.source];
        const auto& b = nb[e.target];
        std::size_t common = 0;
        for (std::size_t i = 0, j = 0; i < a.size() && j < b.size();) {
            if (a[i] == b[j]) {
                ++common;
                ++i;
                ++j;
            } else if (a[i] < b[j]) {
                ++i;
            } else {
                ++j;
            }
        }
        const double uni = static_cast<double>(a.size() + b.size() - common);
        w[id] = e.weight * (1.0 - static_cast<double>(common) / uni);
    }
    EigenPair p = power_iteration(
        [&](std::span<const double> x, std::span<double> y) {
            for (NodeId v = 0; v < n; ++v) {
                double s = 0.0;
                for (const Arc& a : g.in(v)) s += w[a.edge] * x[a.node];
                y[v] = s;
            }
        },
        std::vector<double>(n, 1.0), iteration_options(params));
    return {std::move(p.vector), "contribution", params.digest()};
}

ScoreVector cumulative_nomination(const Graph& g, const MetricParams& params) {
    const std::size_t n = g.node_count();
    if (n == 0) return {{}, "cumulative-nomination"};
    std::vector<double> p(n, 1.0 / static_cast<double>(n)), next(n);
    for (std::size_t it = 0; it < params.max_iter; ++it) {
        double total = 0.0;
        for (NodeId v = 0; v < n; ++v) {
            double s = p[v];
            for (const Arc& a : g.in(v)) s += a.weight * p[a.node];
            next[v] = s;
            total += s;
        }
        double gap = 0.0;
        for (NodeId v = 0; v < n; ++v) {
            next[v] /= total;
            gap = std::max(gap, std::abs(next[v] - p[v]));
        }
        p.swap(next);
        if (gap < params.tol) return {std::move(p), "cumulative-nomination", params.digest()};
    }
    throw_compute("cumulative nomination did not converge in " + std::to_string(params.max_iter) +
                  " iterations");
}

ScoreVector dynamical_influence(const Graph& g, const MetricParams& params) {
    // left eigenvector c of A: (cA)_v = sum over arcs u->v of c_u
    EigenPair p = power_iteration([&](std::span<const double> x, std::span<double> y) { apply_in(g, x, y); },
                                  std::vector<double>(g.node_count(), 1.0), iteration_options(params));
    const double total = std::accumulate(p.vector.begin(), p.vector.end(), 0.0);
    for (double& x : p.vector) x /= total;
    return {std::move(p.vector), "dynamical-influence", params.digest()};
}

HubAuthority hits(const Graph& g, double tol, std::size_t max_iter) {
    require_directed(g, "hits");
    const std::size_t n = g.node_count();
    HubAuthority out;
    if (g.edge_count() == 0) {
        const double u = n ? 1.0 / std::sqrt(static_cast<double>(n)) : 0.0;
        out.authority = {std::vector<double>(n, u), "hits-authority"};
        out.hub = {std::vector<double>(n, u), "hits-hub"};
        out.fallback = true;
        return out;
    }
    std::vector<double> auth(n, 0.0), hub(n, 1.0), na(n), nh(n);
    auto normalize = [](std::vector<double>& v) {
        const double len = norm2(v);
        for (double& x : v) x /= len;
    };
    normalize(hub);
    for (std::size_t it = 0; it < max_iter; ++it) {
        apply_in(g, hub, na);
        normalize(na);
        apply_out(g, na, nh);
        normalize(nh);
        double gap = 0.0;
        for (NodeId v = 0; v < n; ++v)
            gap = std::max({gap, std::abs(na[v] - auth[v]), std::abs(nh[v] - hub[v])});
        auth.swap(na);
        hub.swap(nh);
        if (gap < tol) {
            out.authority = {std::move(auth), "hits-authority"};
            out.hub = {std::move(hub), "hits-hub"};
            return out;
        }
    }
    throw_compute("hits did not converge in " + std::to_string(max_iter) + " iterations");
}

namespace {

// Stationary distribution of one side's two-step chain: step back along an arc
// to a neighbour on the other side, then forward again, each uniformly.
std::vector<double> salsa_side(const Graph& g, bool authority, double tol, std::size_t max_iter) {
    const std::size_t n = g.node_count();
    auto back = [&](NodeId v) { return authority ? g.in(v) : g.out(v); };
    auto fwd = [&](NodeId v) { return authority ? g.out(v) : g.in(v); };
    std::size_t members = 0;
    for (NodeId v = 0; v < n; ++v)
        if (!back(v).empty()) ++members;
    std::vector<double> pi(n, 0.0), mid(n), next(n);
    if (members == 0) return pi;
    for (NodeId v = 0; v < n; ++v)
        if (!back(v).empty()) pi[v] = 1.0 / static_cast<double>(members);
    for (std::size_t it = 0; it < max_iter; ++it) {
        std::fill(mid.begin(), mid.end(), 0.0);
        std::fill(next.begin(), next.end(), 0.0);
        for (NodeId u = 0; u < n; ++u) {
            if (pi[u] == 0.0) continue;
            const auto arcs = back(u);
            const double share = pi[u] / static_cast<double>(arcs.size());
            for (const Arc& a : arcs) mid[a.node] += share;
        }
        for (NodeId x = 0; x < n; ++x) {
            if (mid[x] == 0.0) continue;
            const auto arcs = fwd(x);
            const double share = mid[x] / static_cast<double>(arcs.size());
            for (const Arc& a : arcs) next[a.node] += share;
        }
        double gap = 0.0;
        for (NodeId v = 0; v < n; ++v) gap = std::max(gap, std::abs(next[v] - pi[v]));
        pi.swap(next);
        if (gap < tol) return pi;
    }
    throw_compute("salsa did not converge in " + std::to_string(max_iter) + " iterations");
}

} // namespace

HubAuthority salsa(const Graph& g, double tol, std::size_t max_iter) {
    require_directed(g, "salsa");
    HubAuthority out;
    out.authority = {salsa_side(g, true, tol, max_iter), "salsa-authority"};
    out.hub = {salsa_side(g, false, tol, max_iter), "salsa-hub"};
    return out;
}

namespace {

// One LeaderRank step on the graph augmented with a ground node (index n).
void leader_step(const Graph& g, const std::vector<double>& s, std::vector<double>& next) {
    const std::size_t n = g.node_count();
    std::fill(next.begin(), next.end(), 0.0);
    for (NodeId u = 0; u < n; ++u) {
        const double share = s[u] / static_cast<double>(g.out_degree(u) + 1);
        for (const Arc& a : g.out(u)) next[a.node] += share;
        next[n] += share;
    }
    const double ground = n ? s[n] / static_cast<double>(n) : 0.0;
    for (NodeId v = 0; v < n; ++v) next[v] += ground;
}

} // namespace

ScoreVector leader_rank(const Graph& g, double tol, std::size_t max_iter) {
    require_directed(g, "leaderrank");
    const std::size_t n = g.node_count();
    if (n == 0) return {{}, "leaderrank"};
    std::vector<double> s(n + 1, 1.0), next(n + 1);
    s[n] = 0.0;
    for (std::size_t it = 0; it < max_iter; ++it) {
        leader_step(g, s, next);
        double gap = 0.0;
        for (std::size_t v = 0; v <= n; ++v) gap = std::max(gap, std::abs(next[v] - s[v]));
        s.swap(next);
        if (gap < tol) {
            std::vector<double> out(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(n));
            for (double& x : out) x += s[n] / static_cast<double>(n);
            return {std::move(out), "leaderrank"};
        }
    }
    throw_compute("leaderrank did not converge in " + std::to_string(max_iter) + " iterations");
}

std::vector<double> leader_rank_totals(const Graph& g, std::size_t iterations) {
    const std::size_t n = g.node_count();
    std::vector<double> s(n + 1, 1.0), next(n + 1), totals;
    s[n] = 0.0;
    for (std::size_t it = 0; it < iterations; ++it) {
        leader_step(g, s, next);
        s.swap(next);
        totals.push_back(std::accumulate(s.begin(), s.end(), 0.0));
    }
    return totals;
}

ScoreVector diffusion_centrality(const Graph& g, double q, std::size_t T) {
    if (!(q > 0.0 && q <= 1.0)) throw_input("diffusion q must lie in (0,1]");
    if (T < 1) throw_input("diffusion T must be at least 1");
    const std::size_t n = g.node_count();
    std::vector<double> y(n, 1.0), next(n), acc(n, 0.0);
    for (std::size_t t = 0; t < T; ++t) {
        apply_out(g, y, next);
        for (NodeId v = 0; v < n; ++v) {
            y[v] = q * next[v];
            acc[v] += y[v];
        }
    }
    return {std::move(acc), "diffusion"};
}

ScoreVector subgraph_centrality(const Graph& g) {
    if (g.directed()) throw_input("subgraph centrality is defined on undirected graphs only");
    const std::size_t n = g.node_count();
    require_dense_size(n, "subgraph centrality");
    SymmetricEigen eig = symmetric_eigen(adjacency_matrix(g));
    std::vector<double> s(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        const double e = std::exp(eig.values[j]);
        for (NodeId v = 0; v < n; ++v) s[v] += eig.vectors(v, j) * eig.vectors(v, j) * e;
    }
    return {std::move(s), "subgraph"};
}

} // namespace netcent
