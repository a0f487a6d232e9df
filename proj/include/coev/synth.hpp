#pragma once

#include <cstdint>
#include <string>

#include "coev/graph.hpp"

namespace coev::synth {

// Preferential-attachment graph: node v attaches to `m_per_node` distinct
// earlier nodes chosen with probability proportional to degree. Connected.
Graph preferential_attachment(std::size_t n, std::size_t m_per_node, std::uint64_t seed);

// Connected graph with exactly `n_nodes` nodes and `n_edges` edges: a
// preferentially grown spanning tree plus degree-biased extra edges. Gives
// heavy-tailed degree sequences comparable to the benchmark networks.
Graph sized_network(std::size_t n_nodes, std::size_t n_edges, std::uint64_t seed);

struct BenchmarkDims {
  std::string name;
  std::size_t nodes;
  std::size_t edges;
};

// Node/edge counts of the benchmark networks used across the experiments.
const std::vector<BenchmarkDims>& benchmark_dims();

// Seeded stand-in with the named benchmark's exact node and edge counts.
Graph benchmark_network(const std::string& name, std::uint64_t seed = 42);

}  // namespace coev::synth
