#include "coev/fitness.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "coev/rng.hpp"

namespace coev {

bool Candidate::contains(NodeId v) const {
  return std::binary_search(nodes.begin(), nodes.end(), v);
}

void Candidate::canonicalize() {
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
}

double edv(const Graph& g, const std::vector<NodeId>& s, double p) {
  if (s.empty()) throw std::invalid_argument("edv: seed set must be non-empty");
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("edv: p must lie in [0,1]");
  std::vector<NodeId> sorted = s;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  double value = static_cast<double>(sorted.size());
  auto boundary = one_hop_neighborhood(g, sorted);
  for (NodeId b : boundary) {
    if (std::binary_search(sorted.begin(), sorted.end(), b)) continue;
    std::size_t edges_into_s = 0;
    for (NodeId nb : g.neighbors(b))
      if (std::binary_search(sorted.begin(), sorted.end(), nb)) ++edges_into_s;
    value += 1.0 - std::pow(1.0 - p, static_cast<double>(edges_into_s));
  }
  return value;
}

namespace {

// One seeded cascade; returns the number of activated nodes. Frontier and
// neighbor order are fixed (ascending index), so a trial is a pure function
// of its seed.
std::size_t run_cascade(const Graph& g, const std::vector<std::uint32_t>& seed_idx,
                        double p, std::uint64_t trial_seed) {
  Rng rng(trial_seed);
  std::vector<char> active(g.node_count(), 0);
  std::vector<std::uint32_t> frontier = seed_idx;
  for (auto i : frontier) active[i] = 1;
  std::size_t count = frontier.size();
  while (!frontier.empty()) {
    std::vector<std::uint32_t> next;
    for (auto u : frontier) {
      for (auto v : g.neighbors_at(u)) {
        if (active[v]) continue;
        if (rng.uniform01() < p) {
          active[v] = 1;
          next.push_back(v);
          ++count;
        }
      }
    }
    std::sort(next.begin(), next.end());
    frontier = std::move(next);
  }
  return count;
}

std::vector<std::uint32_t> seed_indices(const Graph& g, const std::vector<NodeId>& s) {
  std::vector<std::uint32_t> idx;
  idx.reserve(s.size());
  for (NodeId v : s) idx.push_back(static_cast<std::uint32_t>(g.index_of(v)));
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  return idx;
}

}  // namespace

double ic_spread_serial(const Graph& g, const std::vector<NodeId>& s, double p,
                        std::size_t trials, std::uint64_t rng_seed) {
  if (trials < 1) throw std::invalid_argument("ic_spread: trials must be >= 1");
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("ic_spread: p must lie in [0,1]");
  auto idx = seed_indices(g, s);
  std::uint64_t total = 0;
  for (std::size_t t = 0; t < trials; ++t)
    total += run_cascade(g, idx, p, mix_seed(rng_seed, t));
  return static_cast<double>(total) / static_cast<double>(trials);
}

double ic_spread_parallel(const Graph& g, const std::vector<NodeId>& s, double p,
                          std::size_t trials, std::uint64_t rng_seed) {
  if (trials < 1) throw std::invalid_argument("ic_spread: trials must be >= 1");
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("ic_spread: p must lie in [0,1]");
  auto idx = seed_indices(g, s);
  std::uint64_t total = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(+ : total)
#endif
  for (std::int64_t t = 0; t < static_cast<std::int64_t>(trials); ++t)
    total += run_cascade(g, idx, p, mix_seed(rng_seed, static_cast<std::uint64_t>(t)));
  return static_cast<double>(total) / static_cast<double>(trials);
}

std::size_t immunization_cut_edges(const Graph& g, const std::vector<NodeId>& s) {
  std::vector<NodeId> sorted = s;
  std::sort(sorted.begin(), sorted.end());
  auto in_s = [&](NodeId v) { return std::binary_search(sorted.begin(), sorted.end(), v); };
  for (NodeId v : sorted) g.index_of(v);  // reject unknown nodes
  std::size_t cut = 0;
  for (const auto& [u, v] : g.edges())
    if (in_s(u) != in_s(v)) ++cut;
  return cut;
}

double lcc_auc(const Graph& g, const std::vector<NodeId>& removal_sequence) {
  if (g.empty()) throw std::invalid_argument("lcc_auc: empty graph");
  std::vector<NodeId> seen;
  for (NodeId v : removal_sequence) {
    g.index_of(v);
    if (std::find(seen.begin(), seen.end(), v) != seen.end())
      throw std::invalid_argument("lcc_auc: duplicate node " + std::to_string(v) +
                                  " in removal sequence");
    seen.push_back(v);
  }

  const double n = static_cast<double>(g.node_count());
  std::vector<NodeId> remaining = g.nodes();
  double sum = 0.0;
  auto lcc_fraction = [&]() {
    if (remaining.empty()) return 0.0;
    Graph sub = g.induced_subgraph(remaining);
    return static_cast<double>(largest_connected_component(sub).node_count()) / n;
  };
  sum += lcc_fraction();
  for (NodeId v : removal_sequence) {
    remaining.erase(std::remove(remaining.begin(), remaining.end(), v), remaining.end());
    sum += lcc_fraction();
  }
  return sum / static_cast<double>(removal_sequence.size() + 1);
}

double tsp_tour_length(const std::map<NodeId, std::pair<double, double>>& coords,
                       const std::vector<NodeId>& tour) {
  if (tour.size() != coords.size() || tour.size() < 3)
    throw std::invalid_argument("tsp_tour_length: tour must visit every city once");
  std::vector<NodeId> sorted = tour;
  std::sort(sorted.begin(), sorted.end());
  auto it = sorted.begin();
  for (const auto& [id, xy] : coords) {
    (void)xy;
    if (it == sorted.end() || *it != id)
      throw std::invalid_argument("tsp_tour_length: tour is not a permutation of the cities");
    ++it;
  }

  double length = 0.0;
  for (std::size_t i = 0; i < tour.size(); ++i) {
    const auto& [x1, y1] = coords.at(tour[i]);
    const auto& [x2, y2] = coords.at(tour[(i + 1) % tour.size()]);
    length += std::hypot(x2 - x1, y2 - y1);
  }
  return length;
}

}  // namespace coev
