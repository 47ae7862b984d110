#include <benchmark/benchmark.h>

#include "netcent/generators.hpp"
#include "netcent/registry.hpp"
#include "netcent/resilience.hpp"

namespace {

// Roughly the size of the email datasets: n = 1100, m ~ 5500.
const netcent::Graph& email_sized() {
    static const netcent::Graph g = netcent::barabasi_albert(1100, 5, 42);
    return g;
}

void point_metric(benchmark::State& state, const char* id) {
    const auto& g = email_sized();
    for (auto _ : state) benchmark::DoNotOptimize(netcent::compute_point_metric(g, id));
}

void register_point_metrics() {
    for (const auto& m : netcent::point_metrics())
        if (!m.capped() && m.applicable(email_sized()))
            benchmark::RegisterBenchmark(("point/" + m.id).c_str(), point_metric, m.id.c_str())
                ->Unit(benchmark::kMillisecond);
}

void BM_FlowBetweenness(benchmark::State& state) {
    const auto g = netcent::barabasi_albert(static_cast<std::size_t>(state.range(0)), 2, 7);
    for (auto _ : state) benchmark::DoNotOptimize(netcent::compute_point_metric(g, "flow-betweenness"));
}
BENCHMARK(BM_FlowBetweenness)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_SirCascade(benchmark::State& state) {
    const auto g = netcent::erdos_renyi(1000, 0.01, 3);
    const std::vector<netcent::NodeId> seeds{0, 1, 2, 3, 4};
    std::uint64_t seed = 0;
    for (auto _ : state) benchmark::DoNotOptimize(netcent::infectious_attack(g, seeds, 0.2, seed++));
}
BENCHMARK(BM_SirCascade);

void BM_CollectiveInfluence(benchmark::State& state) {
    const auto& g = email_sized();
    netcent::MetricParams p;
    for (auto _ : state)
        benchmark::DoNotOptimize(netcent::run_group_strategy(g, "collective-influence", 100, p));
}
BENCHMARK(BM_CollectiveInfluence)->Unit(benchmark::kMillisecond);

} // namespace

int main(int argc, char** argv) {
    register_point_metrics();
    benchmark::Initialize(&argc, argv);
    if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
    benchmark::RunSpecifiedBenchmarks();
    benchmark::Shutdown();
    return 0;
}
