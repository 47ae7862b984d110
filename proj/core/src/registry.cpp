#include "netcent/registry.hpp"

#include <algorithm>

#include "netcent/errors.hpp"
#include "netcent/global.hpp"
#include "netcent/iterative.hpp"
#include "netcent/linalg.hpp"
#include "netcent/local.hpp"

namespace netcent {

namespace {

using Params = const MetricParams&;
constexpr Orientation kDirected = Orientation::directed_only;
constexpr Orientation kUndirected = Orientation::undirected_only;
constexpr Orientation kAny = Orientation::any;
constexpr std::size_t kNoCap = std::numeric_limits<std::size_t>::max();

std::size_t hits_iters(Params p) { return std::min<std::size_t>(p.max_iter, 10000); }

template <class Entry>
const Entry& find_in(const std::vector<Entry>& table, std::string_view id, const char* what) {
    for (const Entry& e : table)
        if (e.id == id) return e;
    std::string valid;
    for (const Entry& e : table) valid += (valid.empty() ? "" : ", ") + e.id;
    throw_input("unknown " + std::string(what) + " '" + std::string(id) + "'; valid ids: " + valid);
}

} // namespace

bool PointMetric::applicable(const Graph& g) const {
    if (orientation == kDirected && !g.directed()) return false;
    if (orientation == kUndirected && g.directed()) return false;
    if (g.node_count() > max_nodes) return false;
    if (needs_coordinates && g.coordinates().empty()) return false;
    return true;
}

const std::vector<PointMetric>& point_metrics() {
    static const std::vector<PointMetric> table = {
        {"degree", "number of incident edges (in+out on digraphs)", kAny, kNoCap, false,
         [](const Graph& g, Params p) { return degree_centrality(g, DegreeMode::total, p.normalized); }},
        {"in-degree", "number of incoming arcs", kDirected, kNoCap, false,
         [](const Graph& g, Params p) { return degree_centrality(g, DegreeMode::in, p.normalized); }},
        {"out-degree", "number of outgoing arcs", kDirected, kNoCap, false,
         [](const Graph& g, Params p) { return degree_centrality(g, DegreeMode::out, p.normalized); }},
        {"semi-local", "two-hop neighbourhood sizes summed over neighbours", kUndirected, kNoCap, false,
         [](const Graph& g, Params) { return semi_local(g); }},
        {"hybrid-degree", "degree and semi-local blend weighted by p", kUndirected, kNoCap, false,
         [](const Graph& g, Params p) { return hybrid_degree(g, p); }},
        {"volume", "edges within h hops", kUndirected, kNoCap, false,
         [](const Graph& g, Params p) { return volume(g, p.h); }},
        {"clustering", "local clustering coefficient", kAny, kNoCap, false,
         [](const Graph& g, Params) { return clustering(g); }},
        {"redundancy", "Burt's redundancy", kAny, kNoCap, false,
         [](const Graph& g, Params) { return redundancy(g); }},
        {"clusterrank", "clustering-discounted out-neighbour degree sum", kDirected, kNoCap, false,
         [](const Graph& g, Params) { return clusterrank(g); }},
        {"local-entropy", "entropy of neighbour degree shares", kAny, kNoCap, false,
         [](const Graph& g, Params) { return local_entropy(g); }},
        {"mapping-entropy", "degree-weighted entropy of neighbour degree shares", kAny, kNoCap, false,
         [](const Graph& g, Params) { return mapping_entropy(g); }},
        {"h-index", "order-k h-index (param order)", kAny, kNoCap, false,
         [](const Graph& g, Params p) { return h_index(g, p.order); }},
        {"gauss-curvature", "combinatorial curvature truncated at cliques of size k_max", kUndirected, kNoCap, false,
         [](const Graph& g, Params p) { return gauss_curvature(g, p.k_max); }},
        {"k-shell", "coreness from iterative minimum-degree pruning", kAny, kNoCap, false,
         [](const Graph& g, Params) { return k_shell_scores(g); }},
        {"mixed-degree", "mixed degree decomposition (lambda_mdd)", kAny, kNoCap, false,
         [](const Graph& g, Params p) { return mixed_degree_decomposition(g, p.lambda_mdd); }},
        {"nc", "neighbourhood coreness", kAny, kNoCap, false,
         [](const Graph& g, Params) { return neighborhood_coreness(g); }},
        {"nc-plus", "extended neighbourhood coreness", kAny, kNoCap, false,
         [](const Graph& g, Params) { return neighborhood_coreness_plus(g); }},
        {"eigenvector", "principal eigenvector of the adjacency matrix", kAny, kNoCap, false,
         [](const Graph& g, Params p) { return eigenvector_centrality(g, p); }},
        {"katz", "Katz centrality (alpha, beta)", kAny, kDenseCap, false,
         [](const Graph& g, Params p) { return katz_centrality(g, p); }},
        {"pagerank", "PageRank (alpha = damping)", kAny, kNoCap, false,
         [](const Graph& g, Params p) { return pagerank(g, p); }},
        {"contribution", "eigenvector of the Jaccard-dissimilarity weighted adjacency", kAny, kNoCap, false,
         [](const Graph& g, Params p) { return contribution_centrality(g, p); }},
        {"cumulative-nomination", "cumulative nomination fixed point", kAny, kNoCap, false,
         [](const Graph& g, Params p) { return cumulative_nomination(g, p); }},
        {"dynamical-influence", "left principal eigenvector of A, summing to 1", kAny, kNoCap, false,
         [](const Graph& g, Params p) { return dynamical_influence(g, p); }},
        {"authority", "HITS authority", kDirected, kNoCap, false,
         [](const Graph& g, Params p) { return hits(g, p.tol, hits_iters(p)).authority; }},
        {"hub", "HITS hub", kDirected, kNoCap, false,
         [](const Graph& g, Params p) { return hits(g, p.tol, hits_iters(p)).hub; }},
        {"salsa-authority", "SALSA authority", kDirected, kNoCap, false,
         [](const Graph& g, Params p) { return salsa(g, p.tol, hits_iters(p)).authority; }},
        {"salsa-hub", "SALSA hub", kDirected, kNoCap, false,
         [](const Graph& g, Params p) { return salsa(g, p.tol, hits_iters(p)).hub; }},
        {"leaderrank", "LeaderRank with a ground node", kDirected, kNoCap, false,
         [](const Graph& g, Params p) { return leader_rank(g, p.tol, p.max_iter); }},
        {"diffusion", "expected diffusion reach (q, T)", kAny, kNoCap, false,
         [](const Graph& g, Params p) { return diffusion_centrality(g, p.q, p.T); }},
        {"subgraph", "weighted closed-walk count", kUndirected, kDenseCap, false,
         [](const Graph& g, Params) { return subgraph_centrality(g); }},
        {"betweenness", "shortest-path betweenness", kAny, kNoCap, false,
         [](const Graph& g, Params p) { return betweenness(g, p.normalized); }},
        {"l-betweenness", "betweenness over paths of length at most L", kAny, kNoCap, false,
         [](const Graph& g, Params p) { return l_betweenness(g, p.L); }},
        {"percolation", "percolation centrality (percolation_states)", kAny, kNoCap, false,
         [](const Graph& g, Params p) { return percolation_centrality(g, p); }},
        {"load", "load centrality", kAny, kNoCap, false,
         [](const Graph& g, Params) { return load_centrality(g); }},
        {"flow-betweenness", "max-flow betweenness", kAny, kFlowCap, false,
         [](const Graph& g, Params p) { return flow_betweenness(g, p.normalized); }},
        {"current-flow-betweenness", "electrical current betweenness", kUndirected, kDenseCap, false,
         [](const Graph& g, Params p) { return current_flow_betweenness(g, p.per_component); }},
        {"current-flow-closeness", "electrical closeness", kUndirected, kDenseCap, false,
         [](const Graph& g, Params p) { return current_flow_closeness(g, p.per_component); }},
        {"random-walk-betweenness", "random-walk betweenness", kUndirected, kFlowCap, false,
         [](const Graph& g, Params) { return random_walk_betweenness(g); }},
        {"information", "information centrality", kUndirected, kDenseCap, false,
         [](const Graph& g, Params) { return information_centrality(g); }},
        {"closeness", "reciprocal farness within the reachable set", kAny, kNoCap, false,
         [](const Graph& g, Params p) { return closeness(g, p.normalized); }},
        {"bavelas", "closeness share of the total", kAny, kNoCap, false,
         [](const Graph& g, Params) { return bavelas_closeness(g); }},
        {"decay", "sum of delta_decay^distance", kAny, kNoCap, false,
         [](const Graph& g, Params p) { return decay_centrality(g, p.delta_decay); }},
        {"residual", "residual closeness (base 1/2)", kAny, kNoCap, false,
         [](const Graph& g, Params) { return residual_closeness(g); }},
        {"eccentricity", "reciprocal of the largest distance", kAny, kNoCap, false,
         [](const Graph& g, Params) { return eccentricity(g); }},
        {"straightness", "mean Euclidean-to-graph distance ratio", kAny, kNoCap, true,
         [](const Graph& g, Params) { return straightness(g); }},
        {"improved-method", "shell first, then distance to the top shell", kAny, kNoCap, false,
         [](const Graph& g, Params) { return improved_method(g).scores(); }},
        {"gdsp-degree", "generalized weighted degree (alpha)", kAny, kNoCap, false,
         [](const Graph& g, Params p) { return gdsp_degree(g, p.alpha.value_or(0.5)); }},
        {"gdsp-closeness", "generalized weighted closeness (alpha)", kAny, kNoCap, false,
         [](const Graph& g, Params p) { return gdsp_closeness(g, p.alpha.value_or(0.5)); }},
        {"gdsp-betweenness", "generalized weighted betweenness (alpha)", kAny, kNoCap, false,
         [](const Graph& g, Params p) { return gdsp_betweenness(g, p.alpha.value_or(0.5)); }},
        {"weight-neighborhood", "benchmark score plus weighted neighbour scores", kUndirected, kNoCap, false,
         [](const Graph& g, Params p) { return weight_neighborhood(g, p.benchmark, p.alpha.value_or(0.5)); }},
        {"ahp", "analytic hierarchy blend of degree, betweenness, closeness and SI spread", kAny, kNoCap, false,
         [](const Graph& g, Params p) { return ahp_centrality(g, p); }},
        {"local-assortativity", "per-node share of degree assortativity", kUndirected, kNoCap, false,
         [](const Graph& g, Params) { return local_assortativity(g); }},
    };
    return table;
}

const std::vector<WholeGraphMetric>& graph_metrics() {
    static const std::vector<WholeGraphMetric> table = {
        {"dispersion", "sum of distances over reachable ordered pairs",
         [](const Graph& g, Params) { return dispersion(g); }},
        {"degree-gc", "normalized degree centralization", [](const Graph& g, Params) { return degree_gc(g, true); }},
        {"degree-gc-raw", "raw degree centralization", [](const Graph& g, Params) { return degree_gc(g, false); }},
        {"betweenness-gc", "betweenness centralization",
         [](const Graph& g, Params) { return centralization(g, CentralizationBase::betweenness); }},
        {"closeness-gc", "closeness centralization",
         [](const Graph& g, Params) { return centralization(g, CentralizationBase::closeness); }},
        {"flow-betweenness-gc", "flow betweenness centralization",
         [](const Graph& g, Params) { return centralization(g, CentralizationBase::flow_betweenness); }},
        {"reciprocity", "share of arcs with a reverse arc", [](const Graph& g, Params) { return reciprocity(g); }},
        {"k-core", "maximal k-core (param k)", [](const Graph& g, Params p) { return k_core(g, p.k); }},
        {"k-clique", "maximum clique if it has at least k nodes",
         [](const Graph& g, Params p) { return max_clique(g, p.k, p.size_cap); }},
        {"k-plex", "maximum k-plex", [](const Graph& g, Params p) { return max_k_plex(g, p.k, p.size_cap); }},
        {"k-component", "largest k-vertex-connected node set",
         [](const Graph& g, Params p) { return k_component(g, p.k, p.size_cap); }},
        {"global-clustering", "mean local clustering", [](const Graph& g, Params) { return global_clustering(g); }},
        {"assortativity", "degree assortativity", [](const Graph& g, Params) { return assortativity(g); }},
        {"assortativity-out-in", "source out-degree vs target in-degree",
         [](const Graph& g, Params) { return assortativity(g, AssortativityMode::out_in); }},
        {"assortativity-in-in", "source in-degree vs target in-degree",
         [](const Graph& g, Params) { return assortativity(g, AssortativityMode::in_in); }},
        {"assortativity-out-out", "source out-degree vs target out-degree",
         [](const Graph& g, Params) { return assortativity(g, AssortativityMode::out_out); }},
        {"delta-hyperbolicity", "thin-triangle delta over sample_count triples",
         [](const Graph& g, Params p) { return delta_hyperbolicity(g, p.sample_count, p.rng_seed); }},
    };
    return table;
}

GroupSelectParams group_params(const MetricParams& p, std::size_t budget) {
    GroupSelectParams out;
    out.budget = budget;
    out.t_td = p.t_td;
    out.theta = p.theta;
    out.beta_inf = p.beta_inf;
    out.p = p.p;
    out.omega = p.omega;
    out.r = p.r;
    out.ell = p.ell;
    out.stop_at_threshold = p.stop_at_threshold;
    return out;
}

const std::vector<GroupStrategy>& group_strategies() {
    static const std::vector<GroupStrategy> table = {
        {"degree-distance", "highest degree at distance >= t_td from chosen seeds",
         [](const Graph& g, std::size_t k, Params p) { return degree_distance(g, group_params(p, k)); }},
        {"fidd", "degree distance admitting close nodes with few shared neighbours (theta)",
         [](const Graph& g, std::size_t k, Params p) {
             return degree_distance(g, group_params(p, k), DistanceVariant::fidd);
         }},
        {"sidd", "fidd plus an influence threshold (beta_inf, p)",
         [](const Graph& g, std::size_t k, Params p) {
             return degree_distance(g, group_params(p, k), DistanceVariant::sidd);
         }},
        {"single-discount", "degree minus links into the seed set",
         [](const Graph& g, std::size_t k, Params) { return single_discount(g, k); }},
        {"degree-discount", "degree discounted by expected activation (p)",
         [](const Graph& g, std::size_t k, Params p) { return degree_discount(g, k, p.p); }},
        {"degree-punishment", "degree minus walk-based punishment (omega, r)",
         [](const Graph& g, std::size_t k, Params p) { return degree_punishment(g, k, p.omega.value_or(p.p), p.r); }},
        {"collective-influence", "adaptive removal by collective influence (ell)",
         [](const Graph& g, std::size_t k, Params p) { return collective_influence(g, group_params(p, k)); }},
    };
    return table;
}

const PointMetric& find_point_metric(std::string_view id) { return find_in(point_metrics(), id, "metric"); }
const WholeGraphMetric& find_graph_metric(std::string_view id) {
    return find_in(graph_metrics(), id, "graph metric");
}
const GroupStrategy& find_group_strategy(std::string_view id) {
    return find_in(group_strategies(), id, "strategy");
}

ScoreVector compute_point_metric(const Graph& g, std::string_view id, const MetricParams& params) {
    const PointMetric& m = find_point_metric(id);
    params.validate();
    if (m.orientation == kDirected && !g.directed()) throw_input(m.id + " requires a directed graph");
    if (m.orientation == kUndirected && g.directed()) throw_input(m.id + " requires an undirected graph");
    if (m.needs_coordinates && g.coordinates().empty()) throw_input(m.id + " requires node coordinates");
    ScoreVector out = m.run(g, params);
    out.metric_id = m.id;
    out.params_digest = params.digest();
    return out;
}

GraphMetricValue compute_graph_metric(const Graph& g, std::string_view id, const MetricParams& params) {
    const WholeGraphMetric& m = find_graph_metric(id);
    params.validate();
    GraphMetricValue out = m.run(g, params);
    out.metric_id = m.id;
    return out;
}

SelectionResult run_group_strategy(const Graph& g, std::string_view id, std::size_t budget,
                                   const MetricParams& params) {
    const GroupStrategy& s = find_group_strategy(id);
    params.validate();
    return s.run(g, budget, params);
}

} // namespace netcent
