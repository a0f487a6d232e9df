#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>

#include "coev/graph.hpp"

namespace coev {

// A fixed-size node set with cached fitness. Nodes are kept sorted.
struct Candidate {
  std::vector<NodeId> nodes;
  std::optional<double> fitness;
  int home_domain = -1;

  bool contains(NodeId v) const;
  void canonicalize();  // sort + dedup
};

using FitnessFn = std::function<double(const std::vector<NodeId>&)>;

// Expected diffusion value: |S| plus, for every outside one-hop neighbor b,
// the probability 1 - (1-p)^{delta(b)} that at least one of its delta(b)
// edges into S fires. Always evaluated against the original graph.
double edv(const Graph& g, const std::vector<NodeId>& s, double p);

// Independent-cascade spread estimated by seeded Monte-Carlo simulation.
// Trials are independent; the parallel kernel derives one RNG per trial from
// (seed, trial index) and sums integer activation counts, so it returns
// exactly the serial result.
double ic_spread_serial(const Graph& g, const std::vector<NodeId>& s, double p,
                        std::size_t trials, std::uint64_t rng_seed);
double ic_spread_parallel(const Graph& g, const std::vector<NodeId>& s, double p,
                          std::size_t trials, std::uint64_t rng_seed);

inline double ic_spread_monte_carlo(const Graph& g, const std::vector<NodeId>& s,
                                    double p, std::size_t trials,
                                    std::uint64_t rng_seed) {
  return ic_spread_parallel(g, s, p, trials, rng_seed);
}

// Number of edges with exactly one endpoint in s.
std::size_t immunization_cut_edges(const Graph& g, const std::vector<NodeId>& s);

// Normalized step sum of |LCC|/|V| over the removal sequence, including the
// intact graph: sum_{t=0..T} lcc_t / |V| / (T+1). Lower is better.
double lcc_auc(const Graph& g, const std::vector<NodeId>& removal_sequence);

// Euclidean cycle length of a tour over all coordinate keys.
double tsp_tour_length(const std::map<NodeId, std::pair<double, double>>& coords,
                       const std::vector<NodeId>& tour);

}  // namespace coev
