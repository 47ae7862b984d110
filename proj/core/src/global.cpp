#include "netcent/global.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "netcent/errors.hpp"
#include "netcent/flow.hpp"
#include "netcent/generators.hpp"
#include "netcent/iterative.hpp"
#include "netcent/linalg.hpp"
#include "netcent/local.hpp"

namespace netcent {

namespace {

double as_double(std::size_t x) { return static_cast<double>(x); }

// Dependency accumulation over all sources. `source_weight` scales each
// source's contribution (1 when empty). Sums over ordered pairs.
std::vector<double> dependency_sums(const Graph& g, PathOptions opt, std::span<const double> source_weight = {}) {
    const std::size_t n = g.node_count();
    std::vector<double> score(n, 0.0), delta(n, 0.0);
    SingleSourceSearch search(g, opt);
    for (NodeId s = 0; s < n; ++s) {
        search.run(s);
        const auto& order = search.order();
        const auto& sigma = search.sigma();
        for (NodeId v : order) delta[v] = 0.0;
        const double weight = source_weight.empty() ? 1.0 : source_weight[s];
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            const NodeId w = *it;
            const double coeff = (1.0 + delta[w]) / sigma[w];
            search.for_each_predecessor(w, [&](NodeId v) { delta[v] += sigma[v] * coeff; });
            if (w != s) score[w] += weight * delta[w];
        }
    }
    return score;
}

void halve_if_undirected(const Graph& g, std::vector<double>& s) {
    if (!g.directed())
        for (double& x : s) x *= 0.5;
}

std::vector<std::vector<NodeId>> component_members(const Graph& g) {
    ComponentLabeling comp = components(g);
    std::vector<std::vector<NodeId>> members(comp.sizes.size());
    for (NodeId v = 0; v < g.node_count(); ++v) members[comp.component[v]].push_back(v);
    return members;
}

void require_undirected(const Graph& g, const char* metric) {
    if (g.directed()) throw_input(std::string(metric) + " is defined on undirected graphs only");
}

// Inverse of the Laplacian with the last node's row and column removed,
// embedded back into n x n with zeros on the ground row/column.
DenseMatrix grounded_inverse(const Graph& g) {
    const std::size_t n = g.node_count();
    require_dense_size(n, "laplacian inverse");
    DenseMatrix reduced(n - 1, n - 1);
    for (const Edge& e : g.edges()) {
        const std::size_t a = e.source, b = e.target;
        if (a < n - 1) reduced(a, a) += e.weight;
        if (b < n - 1) reduced(b, b) += e.weight;
        if (a < n - 1 && b < n - 1) {
            reduced(a, b) -= e.weight;
            reduced(b, a) -= e.weight;
        }
    }
    DenseMatrix inv = inverse(reduced);
    DenseMatrix t(n, n);
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = 0; j + 1 < n; ++j) t(i, j) = inv(i, j);
    return t;
}

template <typename F>
ScoreVector per_component(const Graph& g, bool allowed, const char* metric, F&& compute) {
    require_undirected(g, metric);
    if (g.node_count() == 0) return {{}, metric};
    auto members = component_members(g);
    if (members.size() == 1) return {compute(g), metric};
    if (!allowed) throw_input(std::string(metric) + " needs a connected graph (or per_component=true)");
    std::vector<double> out(g.node_count(), 0.0);
    for (const auto& m : members) {
        const std::vector<double> part = compute(induced_subgraph(g, m));
        for (std::size_t i = 0; i < m.size(); ++i) out[m[i]] = part[i];
    }
    return {std::move(out), metric};
}

std::vector<double> cfb_connected(const Graph& g) {
    const std::size_t n = g.node_count();
    if (n < 3) return std::vector<double>(n, 0.0);
    const DenseMatrix t = grounded_inverse(g);
    std::vector<double> through(n, 0.0), f(n);
    for (const Edge& e : g.edges()) {
        for (std::size_t s = 0; s < n; ++s) f[s] = e.weight * (t(e.source, s) - t(e.target, s));
        std::sort(f.begin(), f.end());
        // sum over unordered pairs of |f_s - f_t|
        double sum = 0.0;
        for (std::size_t k = 0; k < n; ++k) sum += f[k] * (2.0 * as_double(k) - as_double(n) + 1.0);
        through[e.source] += sum;
        through[e.target] += sum;
    }
    // through[v] includes the n-1 pairs where v is an endpoint (each worth 1 over ordered pairs)
    const double scale = as_double((n - 1) * (n - 2));
    for (double& x : through) x = std::max(0.0, x - as_double(n - 1)) / scale;
    return through;
}

std::vector<double> cfc_connected(const Graph& g) {
    const std::size_t n = g.node_count();
    if (n < 2) return std::vector<double>(n, 0.0);
    const DenseMatrix t = grounded_inverse(g);
    std::vector<double> out(n);
    for (std::size_t v = 0; v < n; ++v) {
        double total = 0.0;
        for (std::size_t w = 0; w < n; ++w)
            if (w != v) total += t(v, v) + t(w, w) - 2.0 * t(v, w);
        out[v] = as_double(n - 1) / total;
    }
    return out;
}

struct Reach {
    std::size_t count = 0;   // reachable nodes other than the source
    double sum = 0.0;        // sum of distances
    double max = 0.0;
};

template <typename F>
void for_each_source(const Graph& g, PathOptions opt, F&& f) {
    SingleSourceSearch search(g, opt);
    for (NodeId s = 0; s < g.node_count(); ++s) {
        search.run(s);
        f(s, search);
    }
}

std::vector<Reach> reach_table(const Graph& g, PathOptions opt = {}) {
    std::vector<Reach> out(g.node_count());
    for_each_source(g, opt, [&](NodeId s, const SingleSourceSearch& search) {
        Reach& r = out[s];
        for (NodeId v : search.order()) {
            if (v == s) continue;
            const double d = search.distance()[v];
            ++r.count;
            r.sum += d;
            r.max = std::max(r.max, d);
        }
    });
    return out;
}

std::size_t unreachable_pairs(const std::vector<Reach>& table) {
    std::size_t skipped = 0;
    const std::size_t n = table.size();
    for (const Reach& r : table) skipped += n - 1 - r.count;
    return skipped;
}

std::vector<double> inverse_weight_lengths(const Graph& g, double alpha) {
    std::vector<double> len(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) len[e] = 1.0 / std::pow(g.edges()[e].weight, alpha);
    return len;
}

} // namespace

ScoreVector betweenness(const Graph& g, bool normalized) {
    std::vector<double> s = dependency_sums(g, {});
    halve_if_undirected(g, s);
    const std::size_t n = g.node_count();
    if (normalized) {
        double denom = n > 2 ? as_double((n - 1) * (n - 2)) : 0.0;
        if (!g.directed()) denom *= 0.5;
        for (double& x : s) x = denom > 0.0 ? x / denom : 0.0;
    }
    return {std::move(s), "betweenness"};
}

ScoreVector l_betweenness(const Graph& g, std::size_t L) {
    if (L < 1) throw_input("L must be at least 1");
    PathOptions opt;
    opt.cap = static_cast<double>(L);
    std::vector<double> s = dependency_sums(g, opt);
    halve_if_undirected(g, s);
    return {std::move(s), "l-betweenness"};
}

ScoreVector betweenness_with_lengths(const Graph& g, std::span<const double> lengths) {
    PathOptions opt;
    opt.lengths = lengths;
    std::vector<double> s = dependency_sums(g, opt);
    halve_if_undirected(g, s);
    return {std::move(s), "betweenness"};
}

ScoreVector percolation_centrality(const Graph& g, const MetricParams& params) {
    const std::size_t n = g.node_count();
    std::vector<double> x = params.percolation_states.value_or(std::vector<double>(n, 1.0));
    if (x.size() != n) throw_input("percolation state vector must have one entry per node");
    for (double v : x)
        if (!(v >= 0.0 && v <= 1.0)) throw_input("percolation states must lie in [0,1]");
    const double total = std::accumulate(x.begin(), x.end(), 0.0);
    if (!(total > 0.0)) throw_input("percolation centrality needs at least one percolated node");
    std::vector<double> s = dependency_sums(g, {}, x);
    for (NodeId v = 0; v < n; ++v) {
        const double denom = (total - x[v]) * (n > 2 ? as_double(n - 2) : 0.0);
        s[v] = denom > 0.0 ? s[v] / denom : 0.0;
    }
    return {std::move(s), "percolation", params.digest()};
}

ScoreVector load_centrality(const Graph& g) {
    const std::size_t n = g.node_count();
    std::vector<double> load(n, 0.0), quantity(n, 0.0);
    PathOptions opt;
    opt.reverse = true; // distances towards the target
    SingleSourceSearch search(g, opt);
    for (NodeId t = 0; t < n; ++t) {
        search.run(t);
        const auto& order = search.order();
        for (NodeId v : order) quantity[v] = 1.0;
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            const NodeId v = *it;
            if (v == t) continue;
            // next hops of v towards t
            std::size_t hops = 0;
            search.for_each_predecessor(v, [&](NodeId) { ++hops; });
            const double share = quantity[v] / as_double(hops);
            search.for_each_predecessor(v, [&](NodeId w) { quantity[w] += share; });
            load[v] += quantity[v] - 1.0;
        }
    }
    halve_if_undirected(g, load);
    return {std::move(load), "load"};
}

ScoreVector flow_betweenness(const Graph& g, bool normalized, std::size_t cap) {
    const std::size_t n = g.node_count();
    if (n > cap)
        throw_compute("flow-betweenness: " + std::to_string(n) + " nodes exceeds the size cap of " +
                      std::to_string(cap));
    std::vector<double> s(n, 0.0), through;
    MaxFlowSolver solver(g);
    for (NodeId a = 0; a < n; ++a) {
        for (NodeId b = g.directed() ? 0 : a + 1; b < n; ++b) {
            if (a == b) continue;
            const double value = solver.solve_into(a, b, through);
            if (value <= 0.0) continue;
            for (NodeId v = 0; v < n; ++v) {
                if (v == a || v == b) continue;
                s[v] += normalized ? through[v] / value : through[v];
            }
        }
    }
    return {std::move(s), normalized ? "flow-betweenness-normalized" : "flow-betweenness"};
}

ScoreVector current_flow_betweenness(const Graph& g, bool per_comp) {
    return per_component(g, per_comp, "current-flow-betweenness", cfb_connected);
}

ScoreVector current_flow_closeness(const Graph& g, bool per_comp) {
    return per_component(g, per_comp, "current-flow-closeness", cfc_connected);
}

ScoreVector random_walk_betweenness(const Graph& g, std::size_t cap) {
    require_undirected(g, "random-walk-betweenness");
    const std::size_t n = g.node_count();
    if (n > cap)
        throw_compute("random-walk-betweenness: " + std::to_string(n) + " nodes exceeds the size cap of " +
                      std::to_string(cap));
    if (n < 2) return {std::vector<double>(n, 0.0), "random-walk-betweenness"};
    if (!is_connected(g)) throw_input("random-walk-betweenness needs a connected graph");
    const DenseMatrix t = grounded_inverse(g);
    std::vector<double> s(n, 0.0);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            for (NodeId v = 0; v < n; ++v) {
                if (v == a || v == b) {
                    s[v] += 1.0;
                    continue;
                }
                double current = 0.0;
                for (const Arc& arc : g.out(v))
                    current += arc.weight * std::abs(t(v, a) - t(v, b) - t(arc.node, a) + t(arc.node, b));
                s[v] += 0.5 * current;
            }
        }
    }
    const double pairs = 0.5 * as_double(n) * as_double(n - 1);
    for (double& x : s) x /= pairs;
    return {std::move(s), "random-walk-betweenness"};
}

ScoreVector information_centrality(const Graph& g) {
    require_undirected(g, "information");
    const std::size_t n = g.node_count();
    if (n == 0) return {{}, "information"};
    if (!is_connected(g)) throw_input("information centrality needs a connected graph");
    if (n == 1) return {{0.0}, "information"};
    require_dense_size(n, "information");
    DenseMatrix c(n, n, 1.0);
    for (const Edge& e : g.edges()) {
        c(e.source, e.source) += e.weight;
        c(e.target, e.target) += e.weight;
        c(e.source, e.target) -= e.weight;
        c(e.target, e.source) -= e.weight;
    }
    const DenseMatrix b = inverse(c);
    std::vector<double> out(n);
    for (std::size_t v = 0; v < n; ++v) {
        double total = 0.0;
        for (std::size_t u = 0; u < n; ++u)
            if (u != v) total += b(u, u) + b(v, v) - 2.0 * b(u, v);
        out[v] = as_double(n) / total;
    }
    return {std::move(out), "information"};
}

ScoreVector closeness(const Graph& g, bool normalized) {
    const auto table = reach_table(g);
    const std::size_t n = g.node_count();
    std::vector<double> s(n, 0.0);
    for (NodeId v = 0; v < n; ++v) {
        const Reach& r = table[v];
        if (r.count == 0) continue;
        s[v] = 1.0 / r.sum;
        if (normalized) s[v] *= as_double(r.count) * as_double(r.count) / as_double(n - 1);
    }
    return {std::move(s), "closeness", {}, unreachable_pairs(table)};
}

ScoreVector bavelas_closeness(const Graph& g) {
    ScoreVector c = closeness(g);
    const double total = std::accumulate(c.values.begin(), c.values.end(), 0.0);
    for (double& x : c.values) x = total > 0.0 ? x / total : 0.0;
    c.metric_id = "bavelas";
    return c;
}

ScoreVector decay_centrality(const Graph& g, double delta) {
    if (!(delta > 0.0 && delta < 1.0)) throw_input("decay base must lie in (0,1)");
    std::vector<double> s(g.node_count(), 0.0);
    std::size_t skipped = 0;
    for_each_source(g, {}, [&](NodeId v, const SingleSourceSearch& search) {
        for (NodeId u : search.order())
            if (u != v) s[v] += std::pow(delta, search.distance()[u]);
        skipped += g.node_count() - search.order().size();
    });
    return {std::move(s), "decay", {}, skipped};
}

ScoreVector residual_closeness(const Graph& g) {
    ScoreVector s = decay_centrality(g, 0.5);
    s.metric_id = "residual";
    return s;
}

ScoreVector eccentricity(const Graph& g) {
    const auto table = reach_table(g);
    std::vector<double> s(g.node_count(), 0.0);
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (table[v].count > 0) s[v] = 1.0 / table[v].max;
    return {std::move(s), "eccentricity", {}, unreachable_pairs(table)};
}

ScoreVector straightness(const Graph& g) {
    if (!g.has_coordinates()) throw_input("straightness needs node coordinates");
    const auto& xy = g.coordinates();
    std::vector<double> s(g.node_count(), 0.0);
    std::size_t skipped = 0;
    for_each_source(g, {}, [&](NodeId v, const SingleSourceSearch& search) {
        double sum = 0.0;
        std::size_t count = 0;
        for (NodeId u : search.order()) {
            if (u == v) continue;
            sum += std::hypot(xy[v].x - xy[u].x, xy[v].y - xy[u].y) / search.distance()[u];
            ++count;
        }
        skipped += g.node_count() - 1 - count;
        if (count) s[v] = sum / as_double(count);
    });
    return {std::move(s), "straightness", {}, skipped};
}

ImprovedMethodResult improved_method(const Graph& g) {
    const std::size_t n = g.node_count();
    ImprovedMethodResult out;
    out.shell = k_shell(g).shell;
    out.theta.assign(n, 0.0);
    if (n == 0) return out;
    const std::size_t top = *std::max_element(out.shell.begin(), out.shell.end());
    std::vector<char> core(n, 0);
    for (NodeId v = 0; v < n; ++v) core[v] = out.shell[v] == top;
    for_each_source(g, {}, [&](NodeId v, const SingleSourceSearch& search) {
        double sum = 0.0;
        for (NodeId u = 0; u < n; ++u) {
            if (!core[u]) continue;
            const double d = search.distance()[u];
            if (d == kInfinity)
                ++out.skipped_pairs;
            else
                sum += d;
        }
        out.theta[v] = as_double(top - out.shell[v] + 1) * sum;
    });
    out.ranking.resize(n);
    std::iota(out.ranking.begin(), out.ranking.end(), 0);
    std::stable_sort(out.ranking.begin(), out.ranking.end(), [&](NodeId a, NodeId b) {
        if (out.shell[a] != out.shell[b]) return out.shell[a] > out.shell[b];
        return out.theta[a] < out.theta[b];
    });
    return out;
}

ScoreVector ImprovedMethodResult::scores() const {
    const double max_theta = theta.empty() ? 0.0 : *std::max_element(theta.begin(), theta.end());
    std::vector<double> s(shell.size());
    for (std::size_t v = 0; v < s.size(); ++v) s[v] = as_double(shell[v]) - theta[v] / (max_theta + 1.0);
    return {std::move(s), "improved-method", {}, skipped_pairs};
}

ScoreVector gdsp_degree(const Graph& g, double alpha) {
    if (!(alpha >= 0.0)) throw_input("gdsp alpha must be non-negative");
    std::vector<double> s(g.node_count(), 0.0);
    for (NodeId v = 0; v < g.node_count(); ++v) {
        const double k = as_double(g.degree(v));
        if (k == 0.0) continue;
        s[v] = k * std::pow(g.strength(v) / k, alpha); // k^(1-a) s^a, exact when s == k
    }
    return {std::move(s), "gdsp-degree"};
}

ScoreVector gdsp_closeness(const Graph& g, double alpha) {
    if (!(alpha >= 0.0)) throw_input("gdsp alpha must be non-negative");
    const auto len = inverse_weight_lengths(g, alpha);
    PathOptions opt;
    opt.lengths = len;
    const auto table = reach_table(g, opt);
    std::vector<double> s(g.node_count(), 0.0);
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (table[v].count > 0) s[v] = 1.0 / table[v].sum;
    return {std::move(s), "gdsp-closeness", {}, unreachable_pairs(table)};
}

ScoreVector gdsp_betweenness(const Graph& g, double alpha) {
    if (!(alpha >= 0.0)) throw_input("gdsp alpha must be non-negative");
    const auto len = inverse_weight_lengths(g, alpha);
    ScoreVector s = betweenness_with_lengths(g, len);
    s.metric_id = "gdsp-betweenness";
    return s;
}

ScoreVector weight_neighborhood(const Graph& g, const std::string& benchmark, double alpha) {
    if (g.directed()) throw_input("weight-neighborhood is defined on undirected graphs only");
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw_input("weight-neighborhood alpha must lie in [0,1]");
    std::vector<double> phi;
    if (benchmark == "degree")
        phi = degree_centrality(g).values;
    else if (benchmark == "betweenness")
        phi = betweenness(g).values;
    else if (benchmark == "k-shell")
        phi = k_shell_scores(g).values;
    else
        throw_input("weight-neighborhood benchmark must be degree, betweenness or k-shell, got '" +
                    benchmark + "'");
    const std::size_t n = g.node_count();
    auto w = [&](NodeId u, NodeId v) { return std::pow(as_double(g.degree(u)) * as_double(g.degree(v)), alpha); };
    double mean = 0.0;
    for (const Edge& e : g.edges()) mean += w(e.source, e.target);
    if (g.edge_count()) mean /= as_double(g.edge_count());
    std::vector<double> s(phi);
    for (NodeId v = 0; v < n; ++v)
        for (const Arc& a : g.out(v)) s[v] += w(a.node, v) / mean * phi[a.node];
    return {std::move(s), "weight-neighborhood"};
}

std::vector<double> si_spread(const Graph& g, double beta, std::size_t steps, std::size_t runs,
                              std::uint64_t seed) {
    const std::size_t n = g.node_count();
    std::vector<double> f(n, 0.0);
    if (n == 0) return f;
    std::vector<char> infected(n, 0);
    std::vector<NodeId> members, fresh;
    for (NodeId i = 0; i < n; ++i) {
        double total = 0.0;
        for (std::size_t r = 0; r < runs; ++r) {
            Rng rng(seed + static_cast<std::uint64_t>(i) * runs + r);
            members.assign(1, i);
            infected[i] = 1;
            for (std::size_t t = 0; t < steps; ++t) {
                fresh.clear();
                for (NodeId u : members)
                    for (const Arc& a : g.out(u))
                        if (!infected[a.node] && rng.bernoulli(beta)) {
                            infected[a.node] = 1;
                            fresh.push_back(a.node);
                        }
                members.insert(members.end(), fresh.begin(), fresh.end());
            }
            total += as_double(members.size()) / as_double(n);
            for (NodeId u : members) infected[u] = 0;
        }
        f[i] = total / as_double(runs);
    }
    return f;
}

ScoreVector ahp_centrality(const Graph& g, const MetricParams& params) {
    const std::size_t n = g.node_count();
    if (n == 0) return {{}, "ahp"};
    std::vector<std::vector<double>> d = {
        degree_centrality(g).values,
        betweenness(g).values,
        closeness(g).values,
        si_spread(g, params.si_beta, params.si_steps, params.si_runs, params.rng_seed),
    };
    // an attribute that is zero everywhere (betweenness on a clique) carries no
    // preference, so its share is uniform
    std::vector<std::vector<double>> r(4, std::vector<double>(n, 1.0 / as_double(n)));
    for (std::size_t j = 0; j < 4; ++j) {
        const double total = std::accumulate(d[j].begin(), d[j].end(), 0.0);
        if (total > 0.0)
            for (std::size_t i = 0; i < n; ++i) r[j][i] = d[j][i] / total;
    }
    double e[3] = {0.0, 0.0, 0.0};
    for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t i = 0; i < n; ++i) e[j] += 1.0 / std::max(std::abs(r[j][i] - r[3][i]), 1e-12);
    const double e_total = e[0] + e[1] + e[2];

    PowerIterationOptions opt;
    opt.tol = params.tol;
    opt.max_iter = params.max_iter;
    opt.shift = 0.0;
    std::vector<double> score(n, 0.0);
    for (std::size_t j = 0; j < 3; ++j) {
        std::vector<double> col(d[j]);
        for (double& x : col) x = std::max(x, 1e-12); // zero entries would make B undefined
        // B_ik = col_i / col_k, applied without materialising the n x n matrix
        EigenPair p = power_iteration(
            [&](std::span<const double> x, std::span<double> y) {
                double acc = 0.0;
                for (std::size_t k = 0; k < n; ++k) acc += x[k] / col[k];
                for (std::size_t i = 0; i < n; ++i) y[i] = col[i] * acc;
            },
            std::vector<double>(n, 1.0), opt);
        const double sum = std::accumulate(p.vector.begin(), p.vector.end(), 0.0);
        for (std::size_t i = 0; i < n; ++i) score[i] += (e[j] / e_total) * p.vector[i] / sum;
    }
    return {std::move(score), "ahp", params.digest()};
}

} // namespace netcent
