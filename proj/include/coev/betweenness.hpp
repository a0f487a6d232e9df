#pragma once

#include "coev/graph.hpp"

namespace coev {

// Unnormalized shortest-path betweenness (endpoints excluded), computed by
// Brandes' single-source accumulation. Values are indexed by dense node
// index; use g.id_at() to map back to ids.
//
// Two implementations of the same accumulation:
//   betweenness_serial    - plain source loop, the reference kept for testing
//   betweenness_parallel  - sources processed in fixed blocks under OpenMP;
//                           block partials are reduced in block order, so the
//                           result is identical for any thread count
std::vector<double> betweenness_serial(const Graph& g);
std::vector<double> betweenness_parallel(const Graph& g);

// Production entry point (the parallel kernel).
inline std::vector<double> betweenness_centrality(const Graph& g) {
  return betweenness_parallel(g);
}

}  // namespace coev
