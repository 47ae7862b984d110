#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "netcent/errors.hpp"
#include "netcent/generators.hpp"
#include "netcent/group_select.hpp"
#include "netcent/registry.hpp"

using namespace netcent;

namespace {

// a-b-c-d-e as ids 0..4
const Graph kP5 = path_graph(5);

GroupSelectParams with_budget(std::size_t k) {
    GroupSelectParams p;
    p.budget = k;
    return p;
}

void expect_well_formed(const SelectionResult& r, std::size_t budget) {
    EXPECT_LE(r.seeds.size(), budget);
    EXPECT_EQ(r.per_step.size(), r.seeds.size());
    EXPECT_EQ(std::set<NodeId>(r.seeds.begin(), r.seeds.end()).size(), r.seeds.size());
    for (std::size_t i = 0; i < r.seeds.size(); ++i) EXPECT_EQ(r.per_step[i].node, r.seeds[i]);
}

std::vector<NodeId> by_degree(const Graph& g, std::size_t k) {
    std::vector<NodeId> ids(g.node_count());
    for (NodeId v = 0; v < ids.size(); ++v) ids[v] = v;
    std::stable_sort(ids.begin(), ids.end(), [&](NodeId a, NodeId b) { return g.degree(a) > g.degree(b); });
    ids.resize(k);
    return ids;
}

} // namespace

TEST(DegreeDistance, PathTrace) {
    auto p = with_budget(2);
    p.t_td = 2;
    const auto r = degree_distance(kP5, p);
    EXPECT_EQ(r.seeds, (std::vector<NodeId>{1, 3}));
    EXPECT_EQ(r.stop_reason, StopReason::budget);
    expect_well_formed(r, 2);
}

TEST(DegreeDistance, UnitThresholdIsTopDegree) {
    const Graph g = barabasi_albert(60, 2, 8);
    auto p = with_budget(10);
    p.t_td = 1;
    EXPECT_EQ(degree_distance(g, p).seeds, by_degree(g, 10));
    EXPECT_EQ(degree_distance(g, with_budget(1)).seeds, by_degree(g, 1));
}

TEST(DegreeDistance, InfeasibleBudgetTruncates) {
    auto p = with_budget(2);
    p.t_td = 3;
    const auto r = degree_distance(path_graph(3), p);
    EXPECT_EQ(r.seeds, (std::vector<NodeId>{1}));
    EXPECT_EQ(r.stop_reason, StopReason::exhausted);
    EXPECT_EQ(r.per_step[0].excluded, 0u);
}

TEST(DegreeDistance, VariantsRelaxThePlainRule) {
    const Graph g = barabasi_albert(80, 2, 3);
    auto p = with_budget(15);
    p.t_td = 3;
    p.theta = 0;
    const auto plain = degree_distance(g, p);
    EXPECT_EQ(degree_distance(g, p, DistanceVariant::fidd).seeds, plain.seeds);
    p.theta = 1e9;
    EXPECT_EQ(degree_distance(g, p, DistanceVariant::fidd).seeds, by_degree(g, 15));
    p.beta_inf = 1e9;
    EXPECT_EQ(degree_distance(g, p, DistanceVariant::sidd).seeds, by_degree(g, 15));
    p.beta_inf = 0;
    const auto strict = degree_distance(g, p, DistanceVariant::sidd);
    expect_well_formed(strict, 15);
    for (NodeId u : strict.seeds)
        for (NodeId v : strict.seeds) EXPECT_TRUE(u == v || !g.has_edge(u, v));
}

TEST(SingleDiscount, Examples) {
    const auto r = single_discount(star_graph(5), 2);
    EXPECT_EQ(r.seeds, (std::vector<NodeId>{0, 1}));
    EXPECT_EQ(r.per_step[1].score, 0.0);
    auto all = single_discount(barabasi_albert(30, 2, 1), 30).seeds;
    std::sort(all.begin(), all.end());
    for (NodeId v = 0; v < 30; ++v) EXPECT_EQ(all[v], v);
    EXPECT_EQ(single_discount(make_graph(4, {}), 4).seeds, (std::vector<NodeId>{0, 1, 2, 3}));
}

TEST(DegreeDiscount, Examples) {
    const auto r = degree_discount(star_graph(5), 2, 0.1);
    EXPECT_EQ(r.seeds, (std::vector<NodeId>{0, 1}));
    EXPECT_DOUBLE_EQ(r.per_step[1].score, -1.0);
    const Graph g = barabasi_albert(50, 3, 2);
    EXPECT_EQ(degree_discount(g, 1, 0.3).seeds, by_degree(g, 1));
    // p = 0: score d - 2t; the first pick always matches single discount
    for (std::uint64_t s = 0; s < 10; ++s) {
        const Graph h = erdos_renyi(25, 0.2, s);
        EXPECT_EQ(degree_discount(h, 1, 0.0).seeds, single_discount(h, 1).seeds);
    }
}

TEST(DegreePunishment, OneStepTable) {
    // c=0 sits between b=2 and d=3; a=1 hangs off b, e=4 off d.
    const Graph g = make_graph(5, {{0, 2}, {0, 3}, {1, 2}, {3, 4}});
    const auto r = degree_punishment(g, 2, 0.1, 2);
    ASSERT_EQ(r.seeds.size(), 2u);
    EXPECT_EQ(r.seeds[0], 0u);
    EXPECT_EQ(r.seeds[1], 2u);
    EXPECT_NEAR(r.per_step[1].score, 1.8, 1e-12);
}

TEST(DegreePunishment, ZeroOmegaIsRepeatedMaxDegree) {
    const Graph g = barabasi_albert(60, 2, 5);
    EXPECT_EQ(degree_punishment(g, 12, 0.0, 3).seeds, by_degree(g, 12));
}

TEST(DegreePunishment, RadiusTwoPunishesOnlyNeighbours) {
    const Graph g = path_graph(7);
    // after picking 1, node 3 is two hops away and keeps its full degree at r=2
    const auto r2 = degree_punishment(g, 2, 0.5, 2);
    EXPECT_EQ(r2.seeds, (std::vector<NodeId>{1, 3}));
    EXPECT_DOUBLE_EQ(r2.per_step[1].score, 2.0);
    // at r=3 node 3 loses deg(1)*omega^2 = 0.5, so the unpunished node 4 wins
    const auto r3 = degree_punishment(g, 2, 0.5, 3);
    EXPECT_EQ(r3.seeds, (std::vector<NodeId>{1, 4}));
}

TEST(CollectiveInfluence, FirstPicks) {
    auto p = with_budget(1);
    p.ell = 1;
    const auto r = collective_influence(kP5, p);
    EXPECT_EQ(r.seeds, (std::vector<NodeId>{2}));
    EXPECT_EQ(r.per_step[0].score, 2.0);
    const auto s = collective_influence(star_graph(6), p);
    EXPECT_EQ(s.seeds, (std::vector<NodeId>{0}));
    EXPECT_EQ(s.per_step[0].score, 0.0);
}

TEST(CollectiveInfluence, StoppingRuleReachesThreshold) {
    const Graph g = barabasi_albert(500, 2, 1);
    auto p = with_budget(500);
    p.ell = 2;
    p.stop_at_threshold = true;
    const auto r = collective_influence(g, p);
    EXPECT_EQ(r.stop_reason, StopReason::stopping_rule);
    EXPECT_LT(r.seeds.size(), g.node_count());
    EXPECT_LE(ci_lambda(g, r.seeds, 2), 1.0);
    expect_well_formed(r, 500);
}

TEST(CollectiveInfluence, LambdaUsesOriginalMeanDegree) {
    // removing every node leaves no CI mass
    const Graph g = cycle_graph(6);
    EXPECT_DOUBLE_EQ(ci_lambda(g, {0, 1, 2, 3, 4, 5}, 1), 0.0);
    // intact ring: CI = 1 * 2 per node, n<k> = 12, lambda = (12/12)^(1/2)
    EXPECT_DOUBLE_EQ(ci_lambda(g, {}, 1), 1.0);
}

TEST(GroupSelect, AllStrategiesDeterministic) {
    const Graph g = random_orientation(barabasi_albert(120, 2, 9), 9, 0.2);
    for (const auto& s : group_strategies()) {
        const auto a = run_group_strategy(g, s.id, 10), b = run_group_strategy(g, s.id, 10);
        EXPECT_EQ(a.seeds, b.seeds) << s.id;
        expect_well_formed(a, 10);
    }
    EXPECT_THROW(run_group_strategy(g, "nope", 3), InputError);
}

TEST(GroupSelect, ParamValidation) {
    GroupSelectParams p;
    p.r = 1;
    EXPECT_THROW(p.validate(), InputError);
    p = {};
    p.p = 1.5;
    EXPECT_THROW(p.validate(), InputError);
    p = {};
    p.ell = 0;
    EXPECT_THROW(p.validate(), InputError);
    p = {};
    p.t_td = -1;
    EXPECT_THROW(p.validate(), InputError);
}
