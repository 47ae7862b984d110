#pragma once

#include <cstdint>
#include <limits>
#include <random>

#include "netcent/graph.hpp"

namespace netcent {

/// The one random source used everywhere: 64-bit Mersenne Twister plus a
/// portable 53-bit uniform, so results do not depend on the standard
/// library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    /// Uniform integer in [0, bound).
    std::uint64_t below(std::uint64_t bound);
    bool bernoulli(double p) { return uniform() < p; }

private:
    std::mt19937_64 engine_;
};

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n, bool directed = false);
Graph star_graph(std::size_t n); ///< node 0 is the centre
Graph complete_graph(std::size_t n);

/// G(n, p); directed draws each ordered pair independently.
Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed, bool directed = false);

/// Preferential attachment starting from a clique on m+1 nodes; each new node
/// attaches to m distinct existing nodes with probability proportional to degree.
Graph barabasi_albert(std::size_t n, std::size_t m, std::uint64_t seed);

/// Gives every undirected edge a random orientation; with probability
/// `reciprocal` both arcs are kept.
Graph random_orientation(const Graph& g, std::uint64_t seed, double reciprocal = 0.0);

} // namespace netcent
