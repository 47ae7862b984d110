#pragma once

#include <optional>
#include <vector>

#include "netcent/graph.hpp"

namespace netcent {

enum class StopReason { budget, stopping_rule, exhausted };

struct SelectionStep {
    NodeId node;
    double score;            // strategy score when the node was picked
    std::size_t excluded;    // candidates rejected while searching for this pick
};

struct SelectionResult {
    std::vector<NodeId> seeds;
    std::vector<SelectionStep> per_step;
    StopReason stop_reason = StopReason::budget;
};

struct GroupSelectParams {
    std::size_t budget = 1;
    double t_td = 2.0;          // DegreeDistance threshold distance
    double theta = 2.0;         // FIDD pooled common-neighbour threshold
    double beta_inf = 0.1;      // SIDD influence threshold
    double p = 0.05;            // activation / propagation probability
    std::optional<double> omega; // DegreePunishment weaken factor, defaults to p
    std::size_t r = 2;          // DegreePunishment radius
    std::size_t ell = 2;        // collective influence ball radius
    bool stop_at_threshold = false; // CI: stop once lambda(ell; q) <= 1

    void validate() const;
};

enum class DistanceVariant { plain, fidd, sidd };

/// All strategies read digraphs through their undirected skeleton. Ties go to
/// the lowest node id.
SelectionResult degree_distance(const Graph& g, const GroupSelectParams& params,
                                DistanceVariant variant = DistanceVariant::plain);
SelectionResult single_discount(const Graph& g, std::size_t budget);
SelectionResult degree_discount(const Graph& g, std::size_t budget, double p);
SelectionResult degree_punishment(const Graph& g, std::size_t budget, double omega, std::size_t r);
SelectionResult collective_influence(const Graph& g, const GroupSelectParams& params);

/// lambda(ell; q) = (sum CI / (n <k>))^(1/(ell+1)) on the graph with `removed` taken out;
/// n and <k> refer to the intact graph.
double ci_lambda(const Graph& g, const std::vector<NodeId>& removed, std::size_t ell);

} // namespace netcent
