#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "netcent/graph.hpp"
#include "netcent/params.hpp"
#include "netcent/paths.hpp"

namespace netcent {

/// Descending score, ascending id on ties.
std::vector<NodeId> rank_targets(const ScoreVector& scores);
/// Uniform random permutation of 0..n-1.
std::vector<NodeId> random_ordering(std::size_t n, std::uint64_t seed);
/// ceil(phi * n), guarded against round-off just above an integer.
std::size_t removal_count(double phi, std::size_t n);

/// Largest component among alive nodes divided by the full node count.
double giant_fraction(const Graph& g, std::span<const char> alive,
                      Connectivity mode = Connectivity::weak);

struct AttackPoint {
    double phi;
    std::size_t removed;
    double giant_fraction;
};

/// Removes the first ceil(phi*n) nodes of a fixed ordering for each phi.
std::vector<AttackPoint> non_infectious_attack(const Graph& g, std::span<const NodeId> ordering,
                                               std::span<const double> phi_grid,
                                               Connectivity mode = Connectivity::weak);

enum class NodeState : std::uint8_t { susceptible, infected, removed };

struct InfectionOutcome {
    std::vector<NodeState> states;
    std::size_t seeds = 0;
    std::size_t infected_total = 0; ///< every node ever infected, seeds included
    double giant_fraction = 0.0;    ///< over the susceptible-induced subgraph, divided by n
};

/// Single-attempt SIR: each infected node tries every susceptible out-neighbour once,
/// then is removed. A node that survives an attempt becomes immune.
InfectionOutcome infectious_attack(const Graph& g, std::span<const NodeId> seeds, double beta,
                                   std::uint64_t rng_seed, Connectivity mode = Connectivity::weak);

/// (infected_total - seeds) / seeds.
double mean_infected_per_attacker(const InfectionOutcome& outcome);
/// (before - after) / before.
double rgc(double gc_before, double gc_after);

enum class AttackKind { non_infectious, infectious };

struct TargetSource {
    enum class Kind { metric, group, random };
    Kind kind = Kind::metric;
    std::string id;  ///< metric or strategy id, ignored for random
    MetricParams params;

    std::string label() const { return kind == Kind::random ? "random" : id; }
};

struct AttackPlan {
    AttackKind kind = AttackKind::non_infectious;
    std::vector<TargetSource> targets;
    std::vector<double> phi_grid;
    double beta = 0.05;
    std::size_t runs = 100;
    std::uint64_t rng_seed = 0;
    Connectivity connectivity = Connectivity::weak;

    void validate() const;
};

struct AttackRow {
    std::string metric;
    double phi = 0.0;
    std::size_t run = 0;
    double giant_frac = 0.0;
    std::optional<double> infected_frac; ///< (infected_total - seeds) / n, infectious runs only
    std::optional<double> elapsed_ms;
};

struct SummaryRow {
    std::string metric;
    double phi = 0.0;
    std::size_t runs = 0;
    double giant_mean = 0.0;
    double giant_std = 0.0;
    std::optional<double> infected_mean;
    std::optional<double> infected_std;
};

struct ExperimentResult {
    std::vector<AttackRow> rows; ///< metric (plan order), then phi, then run
    std::vector<SummaryRow> summary;
    std::vector<std::pair<std::string, std::string>> errors; ///< (target label, message)
};

struct RunOptions {
    std::size_t threads = 1;
    bool timing = false;
};

/// Runs every target of the plan. Non-infectious plans with a metric or group
/// ordering involve no randomness and emit run 0 only; everything else uses
/// replicate seeds rng_seed + r.
ExperimentResult run_experiment(const AttackPlan& plan, const Graph& g, RunOptions options = {});

} // namespace netcent
