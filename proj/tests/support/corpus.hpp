#pragma once

#include <string_view>
#include <vector>

#include "netcent/graph.hpp"

namespace netcent::ref {

/// graph6 record (n <= 62) to an undirected graph.
Graph from_graph6(std::string_view record);

/// All 996 connected graphs with 1..7 nodes, up to isomorphism.
const std::vector<Graph>& connected_corpus();

/// Connected corpus graphs with at least `min_nodes` nodes.
std::vector<Graph> corpus_with_min_nodes(std::size_t min_nodes);

/// 50 seeded G(30, 0.2) graphs (seeds 1..50).
const std::vector<Graph>& er_corpus();

} // namespace netcent::ref
