#ifndef QEC_RANDOM_GRAPHS_HPP
#define QEC_RANDOM_GRAPHS_HPP

#include <cstdint>
#include <random>

#include "qec/graph.hpp"

namespace qec {

// Unbiased integer in [0, m); hand-rolled so seeded sweeps reproduce across
// standard libraries.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t m);

// Each vertex pair becomes an edge with probability 1/2.
Graph random_graph(std::mt19937_64& rng, int n);

// Uniform order in [n_min, n_max], resampled until connected.
Graph random_connected_graph(std::mt19937_64& rng, int n_min, int n_max);

// Random circulant graph on n vertices (i ~ i+s mod n for a random stride
// subset); always regular, possibly disconnected or empty.
Graph random_circulant(std::mt19937_64& rng, int n);

} // namespace qec

#endif
