#include "netcent/resilience.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <thread>

#include "netcent/errors.hpp"
#include "netcent/generators.hpp"
#include "netcent/registry.hpp"

namespace netcent {

std::vector<NodeId> rank_targets(const ScoreVector& scores) {
    std::vector<NodeId> order(scores.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](NodeId a, NodeId b) { return scores[a] > scores[b]; });
    return order;
}

namespace {

std::vector<NodeId> shuffled(std::size_t n, Rng& rng) {
    std::vector<NodeId> order(n);
    std::iota(order.begin(), order.end(), 0);
    for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
    return order;
}

} // namespace

std::vector<NodeId> random_ordering(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    return shuffled(n, rng);
}

std::size_t removal_count(double phi, std::size_t n) {
    const double x = phi * static_cast<double>(n);
    const double r = std::round(x);
    if (std::abs(x - r) < 1e-9) return static_cast<std::size_t>(r);
    return std::min(n, static_cast<std::size_t>(std::ceil(x)));
}

double giant_fraction(const Graph& g, std::span<const char> alive, Connectivity mode) {
    if (g.node_count() == 0) return 0.0;
    return static_cast<double>(components(g, mode, alive).giant_size) / static_cast<double>(g.node_count());
}

std::vector<AttackPoint> non_infectious_attack(const Graph& g, std::span<const NodeId> ordering,
                                               std::span<const double> phi_grid, Connectivity mode) {
    const std::size_t n = g.node_count();
    std::vector<AttackPoint> out;
    for (double phi : phi_grid) {
        const std::size_t k = std::min(removal_count(phi, n), ordering.size());
        std::vector<char> alive(n, 1);
        for (std::size_t i = 0; i < k; ++i) alive[ordering[i]] = 0;
        out.push_back({phi, k, giant_fraction(g, alive, mode)});
    }
    return out;
}

namespace {

InfectionOutcome cascade(const Graph& g, std::span<const NodeId> seeds, double beta, Rng& rng,
                         Connectivity mode) {
    const std::size_t n = g.node_count();
    InfectionOutcome out;
    out.states.assign(n, NodeState::susceptible);
    std::vector<char> immune(n, 0);
    std::vector<NodeId> current;
    for (NodeId s : seeds) {
        if (s >= n) throw_input("seed node out of range");
        if (out.states[s] == NodeState::susceptible) {
            out.states[s] = NodeState::infected;
            current.push_back(s);
        }
    }
    out.seeds = current.size();
    out.infected_total = current.size();
    std::vector<NodeId> next;
    while (!current.empty()) {
        next.clear();
        for (NodeId v : current) {
            for (const Arc& a : g.out(v)) {
                const NodeId u = a.node;
                if (out.states[u] != NodeState::susceptible || immune[u]) continue;
                if (rng.bernoulli(beta)) {
                    out.states[u] = NodeState::infected;
                    next.push_back(u);
                } else {
                    immune[u] = 1;
                }
            }
        }
        for (NodeId v : current) out.states[v] = NodeState::removed;
        out.infected_total += next.size();
        current.swap(next);
    }
    std::vector<char> alive(n);
    for (NodeId v = 0; v < n; ++v) alive[v] = out.states[v] == NodeState::susceptible;
    out.giant_fraction = giant_fraction(g, alive, mode);
    return out;
}

} // namespace

InfectionOutcome infectious_attack(const Graph& g, std::span<const NodeId> seeds, double beta,
                                   std::uint64_t rng_seed, Connectivity mode) {
    if (!(beta >= 0.0 && beta <= 1.0)) throw_input("beta must lie in [0,1]");
    if (seeds.empty()) throw_input("infectious attack needs at least one seed");
    Rng rng(rng_seed);
    return cascade(g, seeds, beta, rng, mode);
}

double mean_infected_per_attacker(const InfectionOutcome& outcome) {
    if (outcome.seeds == 0) throw_input("mean infected per attacker needs at least one seed");
    return static_cast<double>(outcome.infected_total - outcome.seeds) / static_cast<double>(outcome.seeds);
}

double rgc(double gc_before, double gc_after) {
    if (gc_before == 0.0) throw_input("RGC undefined for a zero baseline");
    return (gc_before - gc_after) / gc_before;
}

void AttackPlan::validate() const {
    if (targets.empty()) throw_input("attack plan lists no targets");
    if (phi_grid.empty()) throw_input("attack plan has an empty phi grid");
    for (std::size_t i = 0; i < phi_grid.size(); ++i) {
        if (!(phi_grid[i] >= 0.0 && phi_grid[i] <= 1.0)) throw_input("phi values must lie in [0,1]");
        if (i && phi_grid[i] < phi_grid[i - 1]) throw_input("phi grid must be sorted");
    }
    if (!(beta >= 0.0 && beta <= 1.0)) throw_input("beta must lie in [0,1]");
    if (runs < 1) throw_input("runs must be at least 1");
    for (const TargetSource& t : targets) {
        if (t.kind == TargetSource::Kind::metric) find_point_metric(t.id);
        if (t.kind == TargetSource::Kind::group) find_group_strategy(t.id);
        t.params.validate();
    }
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct Job {
    std::size_t target;
    std::size_t run;
};

/// Rows for one (target, replicate): one per phi.
std::vector<AttackRow> run_replicate(const AttackPlan& plan, const Graph& g, const TargetSource& target,
                                     const std::vector<NodeId>& fixed_order, std::size_t r, bool timing) {
    const std::size_t n = g.node_count();
    Rng rng(plan.rng_seed + r);
    const std::vector<NodeId> order = target.kind == TargetSource::Kind::random ? shuffled(n, rng) : fixed_order;
    std::vector<AttackRow> rows;
    for (double phi : plan.phi_grid) {
        const auto start = Clock::now();
        const std::size_t k = std::min(removal_count(phi, n), order.size());
        AttackRow row;
        row.metric = target.label();
        row.phi = phi;
        row.run = r;
        if (plan.kind == AttackKind::non_infectious) {
            std::vector<char> alive(n, 1);
            for (std::size_t i = 0; i < k; ++i) alive[order[i]] = 0;
            row.giant_frac = giant_fraction(g, alive, plan.connectivity);
        } else {
            const InfectionOutcome o =
                cascade(g, std::span<const NodeId>(order.data(), k), plan.beta, rng, plan.connectivity);
            row.giant_frac = o.giant_fraction;
            row.infected_frac = n ? static_cast<double>(o.infected_total - o.seeds) / static_cast<double>(n) : 0.0;
        }
        if (timing) row.elapsed_ms = ms_since(start);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::pair<double, double> mean_std(const std::vector<double>& xs) {
    const double n = static_cast<double>(xs.size());
    const double mean = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
    if (xs.size() < 2) return {mean, 0.0};
    double ss = 0.0;
    for (double x : xs) ss += (x - mean) * (x - mean);
    return {mean, std::sqrt(ss / (n - 1.0))};
}

} // namespace

ExperimentResult run_experiment(const AttackPlan& plan, const Graph& g, RunOptions options) {
    plan.validate();
    const std::size_t n = g.node_count();
    ExperimentResult result;

    // Orderings are fixed per target: metric rankings and group selections are computed once.
    std::vector<std::vector<NodeId>> orders(plan.targets.size());
    std::vector<char> usable(plan.targets.size(), 1);
    std::size_t max_k = 0;
    for (double phi : plan.phi_grid) max_k = std::max(max_k, removal_count(phi, n));
    for (std::size_t t = 0; t < plan.targets.size(); ++t) {
        const TargetSource& target = plan.targets[t];
        try {
            if (target.kind == TargetSource::Kind::metric) {
                orders[t] = rank_targets(compute_point_metric(g, target.id, target.params));
            } else if (target.kind == TargetSource::Kind::group && max_k > 0) {
                orders[t] = run_group_strategy(g, target.id, max_k, target.params).seeds;
            }
        } catch (const std::exception& e) {
            usable[t] = 0;
            result.errors.emplace_back(target.label(), e.what());
        }
    }

    std::vector<Job> jobs;
    for (std::size_t t = 0; t < plan.targets.size(); ++t) {
        if (!usable[t]) continue;
        const bool deterministic = plan.kind == AttackKind::non_infectious &&
                                   plan.targets[t].kind != TargetSource::Kind::random;
        const std::size_t runs = deterministic ? 1 : plan.runs;
        for (std::size_t r = 0; r < runs; ++r) jobs.push_back({t, r});
    }

    std::vector<std::vector<AttackRow>> job_rows(jobs.size());
    std::vector<std::string> job_errors(jobs.size());
    const std::size_t workers = std::max<std::size_t>(1, std::min(options.threads, jobs.size()));
    auto work = [&](std::size_t w) {
        for (std::size_t j = w; j < jobs.size(); j += workers) {
            try {
                job_rows[j] = run_replicate(plan, g, plan.targets[jobs[j].target], orders[jobs[j].target],
                                            jobs[j].run, options.timing);
            } catch (const std::exception& e) {
                job_errors[j] = e.what();
            }
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }

    // Reassemble in metric, phi, run order.
    for (std::size_t t = 0; t < plan.targets.size(); ++t) {
        std::vector<const std::vector<AttackRow>*> reps;
        for (std::size_t j = 0; j < jobs.size(); ++j) {
            if (jobs[j].target != t) continue;
            if (!job_errors[j].empty()) {
                result.errors.emplace_back(plan.targets[t].label(), job_errors[j]);
                reps.clear();
                break;
            }
            reps.push_back(&job_rows[j]);
        }
        if (reps.empty()) continue;
        for (std::size_t p = 0; p < plan.phi_grid.size(); ++p) {
            std::vector<double> giant, infected;
            for (const auto* rows : reps) {
                const AttackRow& row = (*rows)[p];
                result.rows.push_back(row);
                giant.push_back(row.giant_frac);
                if (row.infected_frac) infected.push_back(*row.infected_frac);
            }
            SummaryRow s;
            s.metric = plan.targets[t].label();
            s.phi = plan.phi_grid[p];
            s.runs = reps.size();
            std::tie(s.giant_mean, s.giant_std) = mean_std(giant);
            if (!infected.empty()) {
                const auto [m, sd] = mean_std(infected);
                s.infected_mean = m;
                s.infected_std = sd;
            }
            result.summary.push_back(std::move(s));
        }
    }
    return result;
}

} // namespace netcent
