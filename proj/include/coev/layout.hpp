#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "coev/graph.hpp"

namespace coev {

enum class LayoutAlgo { KamadaKawai, FruchtermanReingold, GraphOpt };

std::string to_string(LayoutAlgo a);
LayoutAlgo layout_algo_from_string(const std::string& s);

struct LayoutKind {
  LayoutAlgo algo = LayoutAlgo::KamadaKawai;
  std::size_t iterations = 0;  // 0 selects the per-algorithm default
  std::uint64_t rng_seed = 0;

  std::size_t effective_iterations() const;
};

// Coordinates by dense node index.
using Positions = std::vector<std::pair<double, double>>;

// Stress-minimizing layout (majorization over BFS distances). Requires a
// connected graph; stress is non-increasing over iterations.
Positions layout_kk(const Graph& g, const LayoutKind& cfg);

// Spring-electrical layout with linear cooling.
Positions layout_fr(const Graph& g, const LayoutKind& cfg);

// Spring-electrical forces with annealed random kicks.
Positions layout_graphopt(const Graph& g, const LayoutKind& cfg);

// Dispatch plus per-component packing for disconnected graphs.
Positions compute_layout(const Graph& g, const LayoutKind& cfg);

// Weighted stress of an embedding against BFS distances (test hook).
double layout_stress(const Graph& g, const Positions& pos);

}  // namespace coev
