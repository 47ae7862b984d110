#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace netcent {

/**
 * Tunables shared by the metric families. Fields left as std::nullopt have a
 * per-metric default (e.g. Katz alpha depends on the spectral radius).
 */
struct MetricParams {
    std::size_t h = 2;                 // hop radius (volume)
    double p = 0.05;                   // spreading probability
    std::optional<double> alpha;
    std::optional<double> beta;
    double q = 0.1;                    // diffusion passing probability
    std::size_t T = 5;                 // diffusion horizon
    double lambda_mdd = 0.7;
    std::size_t L = 2;                 // L-betweenness cap
    double delta_decay = 0.5;
    std::optional<double> omega;       // DegreePunishment weaken factor, defaults to p
    std::size_t r = 2;
    double tol = 1e-10;
    std::size_t max_iter = 100000;
    std::optional<std::vector<double>> percolation_states;
    double si_beta = 0.05;
    std::size_t si_steps = 5;
    std::size_t si_runs = 100;
    std::size_t sample_count = 1000;
    std::uint64_t rng_seed = 0;

    std::size_t order = 1;             // h-index order
    std::size_t k_max = 3;             // gauss curvature clique cap
    std::size_t ell = 2;               // collective influence radius
    bool normalized = false;
    bool per_component = false;        // current-flow metrics on disconnected graphs
    bool out_neighbors = false;        // eigenvector/Katz on digraphs: aggregate out- instead of in-neighbours
    std::string benchmark = "degree";  // weight-neighborhood base metric

    std::size_t k = 2;                 // cohesive subgroups
    std::size_t size_cap = 200;        // exact clique / plex / k-component solvers
    double t_td = 2.0;                 // DegreeDistance threshold distance
    double theta = 2.0;                // FIDD pooled common-neighbour threshold
    double beta_inf = 0.1;             // SIDD influence threshold
    bool stop_at_threshold = false;    // collective influence spectral stopping rule

    /// Sets a field from its textual form ("alpha", "0.3"). Throws InputError
    /// for unknown keys or values of the wrong type.
    void set(std::string_view key, std::string_view value);
    static std::vector<std::string> keys();

    /// Throws InputError when an invariant is broken.
    void validate() const;

    /// Canonical "key=value;..." listing of every field, sorted by key.
    std::string digest() const;
};

/// Per-node scores. Construction rejects non-finite entries.
struct ScoreVector {
    std::vector<double> values;
    std::string metric_id;
    std::string params_digest;
    std::size_t skipped_pairs = 0;

    ScoreVector() = default;
    ScoreVector(std::vector<double> v, std::string metric, std::string digest = {},
                std::size_t skipped = 0);

    std::size_t size() const noexcept { return values.size(); }
    double operator[](std::size_t i) const noexcept { return values[i]; }
};

} // namespace netcent
