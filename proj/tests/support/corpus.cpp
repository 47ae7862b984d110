#include "corpus.hpp"

#include <fstream>
#include <stdexcept>
#include <string>

#include "netcent/generators.hpp"

#ifndef NETCENT_TEST_DATA_DIR
#error "NETCENT_TEST_DATA_DIR must be defined"
#endif

namespace netcent::ref {

Graph from_graph6(std::string_view record) {
    if (record.empty() || record[0] < 63 || record[0] > 125) throw std::runtime_error("bad graph6 record");
    const std::size_t n = static_cast<std::size_t>(record[0] - 63);
    std::vector<std::pair<NodeId, NodeId>> edges;
    std::size_t bit = 0;
    auto next_bit = [&]() {
        const std::size_t byte = 1 + bit / 6;
        if (byte >= record.size()) throw std::runtime_error("truncated graph6 record");
        const int value = record[byte] - 63;
        const bool set = (value >> (5 - bit % 6)) & 1;
        ++bit;
        return set;
    };
    for (NodeId j = 1; j < n; ++j)
        for (NodeId i = 0; i < j; ++i)
            if (next_bit()) edges.emplace_back(i, j);
    return make_graph(n, edges);
}

const std::vector<Graph>& connected_corpus() {
    static const std::vector<Graph> corpus = [] {
        std::ifstream in(std::string(NETCENT_TEST_DATA_DIR) + "/connected_upto7.g6");
        if (!in) throw std::runtime_error("missing corpus file connected_upto7.g6");
        std::vector<Graph> out;
        std::string line;
        while (std::getline(in, line))
            if (!line.empty()) out.push_back(from_graph6(line));
        return out;
    }();
    return corpus;
}

std::vector<Graph> corpus_with_min_nodes(std::size_t min_nodes) {
    std::vector<Graph> out;
    for (const Graph& g : connected_corpus())
        if (g.node_count() >= min_nodes) out.push_back(g);
    return out;
}

const std::vector<Graph>& er_corpus() {
    static const std::vector<Graph> corpus = [] {
        std::vector<Graph> out;
        for (std::uint64_t seed = 1; seed <= 50; ++seed) out.push_back(erdos_renyi(30, 0.2, seed));
        return out;
    }();
    return corpus;
}

} // namespace netcent::ref
