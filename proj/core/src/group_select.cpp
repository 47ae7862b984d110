#include "netcent/group_select.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

#include "netcent/errors.hpp"
#include "netcent/paths.hpp"

namespace netcent {

void GroupSelectParams::validate() const {
    if (budget < 1) throw_input("budget must be at least 1");
    if (t_td < 0 || theta < 0 || beta_inf < 0) throw_input("thresholds must be non-negative");
    if (p < 0 || p > 1) throw_input("p must lie in [0,1]");
    if (omega && (*omega < 0 || *omega > 1)) throw_input("omega must lie in [0,1]");
    if (r < 2) throw_input("r must be at least 2");
    if (ell < 1) throw_input("ell must be at least 1");
}

namespace {

Graph skeleton(const Graph& g) { return g.directed() ? as_undirected(g) : g; }

void check_budget(const Graph& g, std::size_t budget) {
    if (budget < 1) throw_input("budget must be at least 1");
    if (budget > g.node_count())
        throw_input("budget " + std::to_string(budget) + " exceeds node count " +
                    std::to_string(g.node_count()));
}

/// Greedy loop shared by the score-driven strategies: picks the best unchosen
/// node, then lets `update` adjust scores.
template <class Update>
SelectionResult greedy(std::vector<double> score, std::size_t budget, Update update) {
    const std::size_t n = score.size();
    std::vector<char> chosen(n, 0);
    SelectionResult out;
    while (out.seeds.size() < budget) {
        NodeId best = kNoNode;
        for (NodeId v = 0; v < n; ++v)
            if (!chosen[v] && (best == kNoNode || score[v] > score[best])) best = v;
        if (best == kNoNode) {
            out.stop_reason = StopReason::exhausted;
            break;
        }
        chosen[best] = 1;
        out.seeds.push_back(best);
        out.per_step.push_back({best, score[best], 0});
        update(best, score);
    }
    return out;
}

} // namespace

SelectionResult degree_distance(const Graph& input, const GroupSelectParams& params, DistanceVariant variant) {
    params.validate();
    check_budget(input, params.budget);
    const Graph g = skeleton(input);
    const std::size_t n = g.node_count();
    std::vector<NodeId> order(n);
    for (NodeId v = 0; v < n; ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(),
                     [&](NodeId a, NodeId b) { return g.degree(a) > g.degree(b); });

    PathOptions hops;
    hops.unit = true;
    SingleSourceSearch search(g, hops);
    std::vector<std::vector<double>> seed_dist; // hop distances from each seed
    std::vector<std::vector<char>> seed_n1, seed_n2;

    auto rings = [&](NodeId v, std::vector<char>& n1, std::vector<char>& n2) {
        search.run(v);
        n1.assign(n, 0);
        n2.assign(n, 0);
        for (NodeId u : search.order()) {
            if (search.distance()[u] == 1.0) n1[u] = 1;
            else if (search.distance()[u] == 2.0) n2[u] = 1;
        }
        return search.distance();
    };

    SelectionResult out;
    std::size_t rejected = 0;
    std::vector<char> n1, n2;
    for (NodeId u : order) {
        if (out.seeds.size() == params.budget) break;
        bool admit = true;
        bool rings_ready = false;
        std::size_t pooled = 0;
        for (std::size_t i = 0; i < out.seeds.size() && admit; ++i) {
            if (seed_dist[i][u] >= params.t_td) continue;
            if (variant == DistanceVariant::plain) {
                admit = false;
                break;
            }
            if (!rings_ready) {
                rings(u, n1, n2);
                rings_ready = true;
            }
            std::size_t cn1 = 0, cn2 = 0;
            for (NodeId x = 0; x < n; ++x) {
                cn1 += n1[x] && seed_n1[i][x];
                cn2 += n2[x] && seed_n2[i][x];
            }
            pooled += cn1 + cn2;
            if (static_cast<double>(pooled) >= params.theta) admit = false;
            if (admit && variant == DistanceVariant::sidd) {
                const double direct = seed_n1[i][u] ? params.p : 0.0;
                const double influence = direct + static_cast<double>(cn1) * params.p * params.p;
                if (influence > params.beta_inf) admit = false;
            }
        }
        if (!admit) {
            ++rejected;
            continue;
        }
        seed_n1.emplace_back();
        seed_n2.emplace_back();
        seed_dist.push_back(rings(u, seed_n1.back(), seed_n2.back()));
        out.seeds.push_back(u);
        out.per_step.push_back({u, static_cast<double>(g.degree(u)), rejected});
        rejected = 0;
    }
    if (out.seeds.size() < params.budget) out.stop_reason = StopReason::exhausted;
    return out;
}

SelectionResult single_discount(const Graph& input, std::size_t budget) {
    check_budget(input, budget);
    const Graph g = skeleton(input);
    std::vector<double> score(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v) score[v] = static_cast<double>(g.degree(v));
    return greedy(std::move(score), budget, [&](NodeId s, std::vector<double>& sc) {
        for (const Arc& a : g.out(s)) sc[a.node] -= 1.0;
    });
}

SelectionResult degree_discount(const Graph& input, std::size_t budget, double p) {
    check_budget(input, budget);
    if (p < 0 || p > 1) throw_input("p must lie in [0,1]");
    const Graph g = skeleton(input);
    const std::size_t n = g.node_count();
    std::vector<double> t(n, 0.0), score(n);
    for (NodeId v = 0; v < n; ++v) score[v] = static_cast<double>(g.degree(v));
    return greedy(std::move(score), budget, [&](NodeId s, std::vector<double>& sc) {
        for (const Arc& a : g.out(s)) {
            const double d = static_cast<double>(g.degree(a.node));
            t[a.node] += 1.0;
            sc[a.node] = d - 2.0 * t[a.node] - (d - t[a.node]) * t[a.node] * p;
        }
    });
}

SelectionResult degree_punishment(const Graph& input, std::size_t budget, double omega, std::size_t r) {
    check_budget(input, budget);
    if (omega < 0 || omega > 1) throw_input("omega must lie in [0,1]");
    if (r < 2) throw_input("r must be at least 2");
    const Graph g = skeleton(input);
    const std::size_t n = g.node_count();
    std::vector<double> score(n);
    for (NodeId v = 0; v < n; ++v) score[v] = static_cast<double>(g.degree(v));
    std::vector<double> walks(n), next(n);
    return greedy(std::move(score), budget, [&](NodeId s, std::vector<double>& sc) {
        // walk counts (A^h)_{s,v} for h = 1..r-1
        std::fill(walks.begin(), walks.end(), 0.0);
        walks[s] = 1.0;
        double weight = 1.0;
        const double ds = static_cast<double>(g.degree(s));
        for (std::size_t h = 1; h < r; ++h) {
            std::fill(next.begin(), next.end(), 0.0);
            for (NodeId u = 0; u < n; ++u)
                if (walks[u] != 0.0)
                    for (const Arc& a : g.out(u)) next[a.node] += walks[u];
            walks.swap(next);
            weight *= omega;
            for (NodeId v = 0; v < n; ++v) sc[v] -= ds * walks[v] * weight;
        }
    });
}

namespace {

class ResidualCi {
public:
    ResidualCi(const Graph& g, std::size_t ell)
        : g_(g), ell_(ell), alive_(g.node_count(), 1), degree_(g.node_count()), depth_(g.node_count(), kNoDepth) {
        for (NodeId v = 0; v < g.node_count(); ++v) degree_[v] = g.degree(v);
    }

    double ci(NodeId v) {
        if (degree_[v] == 0) return 0.0;
        double frontier = 0.0;
        ball(v, ell_, [&](NodeId u, std::size_t d) {
            if (d == ell_) frontier += static_cast<double>(degree_[u]) - 1.0;
        });
        return (static_cast<double>(degree_[v]) - 1.0) * frontier;
    }

    void remove(NodeId v) {
        alive_[v] = 0;
        for (const Arc& a : g_.out(v))
            if (alive_[a.node]) --degree_[a.node];
        degree_[v] = 0;
    }

    bool alive(NodeId v) const { return alive_[v]; }

    /// Visits alive nodes within `radius` hops of v (v itself at depth 0).
    template <class F>
    void ball(NodeId v, std::size_t radius, F visit) {
        std::deque<NodeId> queue{v};
        std::vector<NodeId> touched{v};
        depth_[v] = 0;
        while (!queue.empty()) {
            const NodeId u = queue.front();
            queue.pop_front();
            visit(u, depth_[u]);
            if (depth_[u] == radius) continue;
            for (const Arc& a : g_.out(u)) {
                if (!alive_[a.node] || depth_[a.node] != kNoDepth) continue;
                depth_[a.node] = depth_[u] + 1;
                touched.push_back(a.node);
                queue.push_back(a.node);
            }
        }
        for (NodeId u : touched) depth_[u] = kNoDepth;
    }

private:
    static constexpr std::size_t kNoDepth = static_cast<std::size_t>(-1);
    const Graph& g_;
    std::size_t ell_;
    std::vector<char> alive_;
    std::vector<std::size_t> degree_;
    std::vector<std::size_t> depth_;
};

double lambda_from(double ci_sum, const Graph& g, std::size_t ell) {
    const double n = static_cast<double>(g.node_count());
    const double mean_degree = 2.0 * static_cast<double>(g.edge_count()) / n;
    if (mean_degree == 0.0) return 0.0;
    return std::pow(std::max(0.0, ci_sum) / (n * mean_degree), 1.0 / static_cast<double>(ell + 1));
}

} // namespace

double ci_lambda(const Graph& input, const std::vector<NodeId>& removed, std::size_t ell) {
    const Graph g = skeleton(input);
    if (g.node_count() == 0) return 0.0;
    ResidualCi state(g, ell);
    for (NodeId v : removed) state.remove(v);
    double sum = 0.0;
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (state.alive(v)) sum += state.ci(v);
    return lambda_from(sum, g, ell);
}

SelectionResult collective_influence(const Graph& input, const GroupSelectParams& params) {
    params.validate();
    check_budget(input, params.budget);
    const Graph g = skeleton(input);
    const std::size_t n = g.node_count();
    ResidualCi state(g, params.ell);
    std::vector<double> ci(n);
    double sum = 0.0;
    for (NodeId v = 0; v < n; ++v) sum += ci[v] = state.ci(v);

    SelectionResult out;
    while (out.seeds.size() < params.budget) {
        if (params.stop_at_threshold && lambda_from(sum, g, params.ell) <= 1.0) {
            out.stop_reason = StopReason::stopping_rule;
            return out;
        }
        NodeId best = kNoNode;
        for (NodeId v = 0; v < n; ++v)
            if (state.alive(v) && (best == kNoNode || ci[v] > ci[best])) best = v;
        if (best == kNoNode) {
            out.stop_reason = StopReason::exhausted;
            return out;
        }
        out.seeds.push_back(best);
        out.per_step.push_back({best, ci[best], 0});
        // only nodes within ell + 1 hops can see their CI change
        std::vector<NodeId> affected;
        state.ball(best, params.ell + 1, [&](NodeId u, std::size_t) { affected.push_back(u); });
        state.remove(best);
        for (NodeId u : affected) {
            sum -= ci[u];
            ci[u] = state.alive(u) ? state.ci(u) : 0.0;
            sum += ci[u];
        }
    }
    if (params.stop_at_threshold && lambda_from(sum, g, params.ell) <= 1.0)
        out.stop_reason = StopReason::stopping_rule;
    return out;
}

} // namespace netcent
