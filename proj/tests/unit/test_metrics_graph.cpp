#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "corpus.hpp"
#include "netcent/errors.hpp"
#include "netcent/generators.hpp"
#include "netcent/graph_metrics.hpp"
#include "netcent/local.hpp"
#include "netcent/paths.hpp"
#include "oracles.hpp"

using namespace netcent;

namespace {

std::vector<NodeId> members(std::uint32_t mask, std::size_t n) {
    std::vector<NodeId> out;
    for (NodeId v = 0; v < n; ++v)
        if (mask >> v & 1u) out.push_back(v);
    return out;
}

std::size_t inside_degree(const Graph& g, NodeId v, std::uint32_t mask) {
    std::size_t d = 0;
    for (const Arc& a : g.out(v)) d += mask >> a.node & 1u;
    return d;
}

bool connected_within(const Graph& g, std::uint32_t mask) {
    if (mask == 0) return true;
    const NodeId start = static_cast<NodeId>(std::countr_zero(mask));
    std::uint32_t seen = 1u << start;
    std::vector<NodeId> stack{start};
    while (!stack.empty()) {
        const NodeId v = stack.back();
        stack.pop_back();
        for (const Arc& a : g.out(v))
            if ((mask >> a.node & 1u) && !(seen >> a.node & 1u)) {
                seen |= 1u << a.node;
                stack.push_back(a.node);
            }
    }
    return seen == mask;
}

// k-connected: more than k nodes and no separator of size k-1 or less.
bool k_connected(const Graph& g, std::uint32_t mask, std::size_t k) {
    if (static_cast<std::size_t>(std::popcount(mask)) <= k) return false;
    for (std::uint32_t cut = mask;; cut = (cut - 1) & mask) {
        if (static_cast<std::size_t>(std::popcount(cut)) < k && !connected_within(g, mask & ~cut)) return false;
        if (cut == 0) break;
    }
    return true;
}

std::size_t brute_largest(const Graph& g, auto&& ok) {
    std::size_t best = 0;
    const std::uint32_t full = (1u << g.node_count()) - 1;
    for (std::uint32_t m = 1; m <= full; ++m)
        if (ok(m)) best = std::max<std::size_t>(best, std::popcount(m));
    return best;
}

double brute_assortativity(const Graph& g) {
    std::vector<double> x, y;
    for (const Edge& e : g.edges()) {
        const double a = static_cast<double>(g.degree(e.source)) - 1, b = static_cast<double>(g.degree(e.target)) - 1;
        x.insert(x.end(), {a, b});
        y.insert(y.end(), {b, a});
    }
    const double n = static_cast<double>(x.size());
    const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n, my = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double sxy = 0, sxx = 0, syy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
        syy += (y[i] - my) * (y[i] - my);
    }
    return sxy / std::sqrt(sxx * syy);
}

// Max thin-triangle delta over every triple, straight from the definition.
double brute_delta(const Graph& g) {
    const auto d = ref::floyd_warshall(g);
    const std::size_t n = g.node_count();
    auto to_geodesic = [&](NodeId m, NodeId u, NodeId v) {
        double best = kInfinity;
        for (NodeId w = 0; w < n; ++w)
            if (d[u][w] + d[w][v] == d[u][v]) best = std::min(best, d[m][w]);
        return best;
    };
    double worst = 0;
    for (NodeId a = 0; a < n; ++a)
        for (NodeId b = a + 1; b < n; ++b)
            for (NodeId c = b + 1; c < n; ++c) {
                double delta = kInfinity;
                for (NodeId m = 0; m < n; ++m)
                    delta = std::min(delta, std::max({to_geodesic(m, a, b), to_geodesic(m, a, c), to_geodesic(m, b, c)}));
                worst = std::max(worst, delta);
            }
    return worst;
}

} // namespace

TEST(Dispersion, Examples) {
    EXPECT_EQ(dispersion(path_graph(3)).value, 8.0);
    EXPECT_EQ(dispersion(complete_graph(3)).value, 6.0);
    const auto iso = dispersion(make_graph(2, {}));
    EXPECT_EQ(iso.value, 0.0);
    EXPECT_EQ(iso.skipped_pairs, 2u);
}

TEST(DegreeGc, Examples) {
    EXPECT_EQ(degree_gc(complete_graph(3), false).value, 0.0);
    EXPECT_DOUBLE_EQ(degree_gc(star_graph(5), true).value, 1.0);
    EXPECT_EQ(degree_gc(star_graph(5), false).value, 24.0);
    EXPECT_THROW(degree_gc(path_graph(2), true), InputError);
}

TEST(Centralization, StarAndComplete) {
    for (auto base : {CentralizationBase::betweenness, CentralizationBase::closeness,
                      CentralizationBase::flow_betweenness}) {
        for (std::size_t n : {4, 5, 9}) EXPECT_NEAR(centralization(star_graph(n), base).value, 1.0, 1e-12);
        EXPECT_NEAR(centralization(complete_graph(6), base).value, 0.0, 1e-12);
    }
    EXPECT_NEAR(degree_gc(complete_graph(6)).value, 0.0, 1e-12);
}

TEST(Centralization, WithinUnitIntervalOnCorpus) {
    for (const Graph& g : ref::corpus_with_min_nodes(3))
        for (auto base : {CentralizationBase::betweenness, CentralizationBase::closeness,
                          CentralizationBase::flow_betweenness}) {
            const double c = centralization(g, base).value;
            ASSERT_GE(c, -1e-12);
            ASSERT_LE(c, 1 + 1e-12);
        }
}

TEST(Centralization, ClosenessNeedsConnected) {
    EXPECT_THROW(centralization(make_graph(4, {{0, 1}, {2, 3}}), CentralizationBase::closeness), InputError);
}

TEST(Reciprocity, Examples) {
    EXPECT_DOUBLE_EQ(reciprocity(make_graph(2, {{0, 1}, {1, 0}}, true)).value, 1.0);
    EXPECT_DOUBLE_EQ(reciprocity(cycle_graph(3, true)).value, 0.0);
    EXPECT_DOUBLE_EQ(reciprocity(make_graph(3, {{0, 1}, {1, 0}, {1, 2}}, true)).value, 2.0 / 3.0);
    EXPECT_THROW(reciprocity(path_graph(3)), InputError);
    for (std::uint64_t s = 0; s < 10; ++s) {
        const double r = reciprocity(random_orientation(erdos_renyi(20, 0.2, s), s, 0.3)).value;
        EXPECT_GE(r, 0.0);
        EXPECT_LE(r, 1.0);
    }
}

TEST(Cohesion, Examples) {
    EXPECT_EQ(max_clique(complete_graph(4)).nodes->size(), 4u);
    EXPECT_TRUE(k_core(path_graph(3), 2).nodes->empty());
    EXPECT_EQ(*k_component(complete_graph(4), 3).nodes, (std::vector<NodeId>{0, 1, 2, 3}));
    EXPECT_TRUE(max_clique(complete_graph(4), 6).nodes->empty());
    EXPECT_THROW(max_clique(path_graph(10), 1, 5), ComputeError);
}

TEST(Cohesion, KCoreAgreesWithShells) {
    for (const Graph& g : ref::er_corpus()) {
        const auto shell = ref::brute_k_shell(g);
        const std::size_t top = static_cast<std::size_t>(*std::max_element(shell.begin(), shell.end()));
        EXPECT_FALSE(k_core(g, top).nodes->empty());
        EXPECT_TRUE(k_core(g, top + 1).nodes->empty());
        std::vector<NodeId> expect;
        for (NodeId v = 0; v < g.node_count(); ++v)
            if (shell[v] >= 2) expect.push_back(v);
        EXPECT_EQ(*k_core(g, 2).nodes, expect);
    }
}

TEST(Cohesion, ExactSolversMatchSubsetSearch) {
    for (const Graph& g : ref::corpus_with_min_nodes(5)) {
        const std::size_t n = g.node_count();
        const auto clique = max_clique(g).nodes.value();
        const std::size_t want_clique = brute_largest(g, [&](std::uint32_t m) {
            for (NodeId v : members(m, n))
                if (inside_degree(g, v, m) + 1 != static_cast<std::size_t>(std::popcount(m))) return false;
            return true;
        });
        ASSERT_EQ(clique.size(), want_clique);
        for (NodeId u : clique)
            for (NodeId v : clique) ASSERT_TRUE(u == v || g.has_edge(u, v));

        const std::size_t k = 2;
        const auto plex = max_k_plex(g, k).nodes.value();
        const std::size_t want_plex = brute_largest(g, [&](std::uint32_t m) {
            for (NodeId v : members(m, n))
                if (inside_degree(g, v, m) + k < static_cast<std::size_t>(std::popcount(m))) return false;
            return true;
        });
        ASSERT_EQ(plex.size(), want_plex);
    }
}

TEST(Cohesion, KComponentIsLargestKConnectedSet) {
    for (const Graph& g : ref::corpus_with_min_nodes(5))
        for (std::size_t k : {2u, 3u}) {
            const auto got = k_component(g, k).nodes.value();
            std::uint32_t mask = 0;
            for (NodeId v : got) mask |= 1u << v;
            if (!got.empty()) {
                ASSERT_TRUE(k_connected(g, mask, k));
            }
            ASSERT_EQ(got.size(), brute_largest(g, [&](std::uint32_t m) { return k_connected(g, m, k); }));
        }
}

TEST(GlobalClustering, Examples) {
    EXPECT_DOUBLE_EQ(global_clustering(complete_graph(3)).value, 1.0);
    EXPECT_DOUBLE_EQ(global_clustering(star_graph(5)).value, 0.0);
    // K4 minus {2,3}: nodes 0,1 see two of three pairs closed, nodes 2,3 are closed.
    const Graph g = make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    EXPECT_DOUBLE_EQ(global_clustering(g).value, (2.0 / 3 + 2.0 / 3 + 1 + 1) / 4);
}

TEST(Assortativity, Examples) {
    EXPECT_NEAR(assortativity(path_graph(4)).value, -0.5, 1e-12);
    // Star endpoints pair excess degree 3 with 0: perfectly disassortative, not degenerate.
    EXPECT_NEAR(assortativity(star_graph(5)).value, -1.0, 1e-12);
    EXPECT_THROW(assortativity(cycle_graph(5)), ComputeError);
    EXPECT_THROW(assortativity(make_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}})), ComputeError);
    EXPECT_THROW(assortativity(path_graph(2)), ComputeError);
    EXPECT_THROW(assortativity(path_graph(4), AssortativityMode::out_in), InputError);
}

TEST(Assortativity, MatchesEndpointCorrelation) {
    for (const Graph& g : ref::er_corpus()) {
        const double r = assortativity(g).value;
        EXPECT_NEAR(r, brute_assortativity(g), 1e-9);
        EXPECT_GE(r, -1 - 1e-12);
        EXPECT_LE(r, 1 + 1e-12);
    }
}

TEST(Assortativity, DirectedModesRun) {
    const Graph g = random_orientation(erdos_renyi(30, 0.2, 4), 4, 0.2);
    for (auto m : {AssortativityMode::out_in, AssortativityMode::in_in, AssortativityMode::out_out}) {
        const double r = assortativity(g, m).value;
        EXPECT_GE(r, -1 - 1e-12);
        EXPECT_LE(r, 1 + 1e-12);
    }
}

TEST(LocalAssortativity, SumsToGlobal) {
    for (const Graph& g : ref::er_corpus()) {
        const auto local = local_assortativity(g);
        ASSERT_EQ(local.size(), g.node_count());
        EXPECT_NEAR(std::accumulate(local.values.begin(), local.values.end(), 0.0), assortativity(g).value, 1e-6);
    }
    const auto p4 = local_assortativity(path_graph(4));
    EXPECT_DOUBLE_EQ(p4[0], p4[3]);
    EXPECT_DOUBLE_EQ(p4[1], p4[2]);
    EXPECT_THROW(local_assortativity(cycle_graph(6)), ComputeError);
}

TEST(Hyperbolicity, TreesAreZero) {
    for (std::uint64_t s = 0; s < 5; ++s) {
        const Graph t = barabasi_albert(40, 1, s);
        const auto h = delta_hyperbolicity(t, 500, s);
        EXPECT_EQ(h.value, 0.0);
    }
}

TEST(Hyperbolicity, DeterministicPerSeed) {
    const Graph g = barabasi_albert(60, 2, 3);
    const auto a = delta_hyperbolicity(g, 300, 11), b = delta_hyperbolicity(g, 300, 11);
    EXPECT_EQ(a.value, b.value);
    EXPECT_EQ(a.extras, b.extras);
}

TEST(Hyperbolicity, ExhaustiveMatchesDefinition) {
    for (const Graph& g : ref::corpus_with_min_nodes(4)) {
        const std::size_t n = g.node_count();
        ASSERT_EQ(delta_hyperbolicity(g, n * (n - 1) * (n - 2) / 6, 1).value, brute_delta(g));
    }
    const Graph g = erdos_renyi(12, 0.3, 2);
    if (is_connected(g)) {
        EXPECT_EQ(delta_hyperbolicity(g, 220, 1).value, brute_delta(g));
        EXPECT_LE(delta_hyperbolicity(g, 20, 1).value, brute_delta(g));
    }
    EXPECT_THROW(delta_hyperbolicity(make_graph(4, {{0, 1}, {2, 3}}), 5, 1), InputError);
}
