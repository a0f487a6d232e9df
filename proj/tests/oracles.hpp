#pragma once

// Independent brute-force oracles used only by tests. Each one recomputes a
// quantity from first principles along a different code path than the
// library implementation it checks.

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <vector>

#include "coev/graph.hpp"
#include "coev/rng.hpp"

namespace oracle {

using coev::Graph;
using coev::NodeId;

// All-pairs shortest-path betweenness by explicit path enumeration over the
// BFS predecessor DAG. Exponential in the worst case; fine for <= 8 nodes.
inline std::map<NodeId, double> brute_betweenness(const Graph& g) {
  std::map<NodeId, double> bc;
  for (NodeId v : g.nodes()) bc[v] = 0.0;
  const auto& nodes = g.nodes();
  const std::size_t n = nodes.size();

  for (std::size_t si = 0; si < n; ++si) {
    // BFS from source.
    std::vector<int> dist(n, -1);
    std::vector<std::vector<std::size_t>> preds(n);
    std::vector<std::size_t> queue{si};
    dist[si] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      auto u = queue[head];
      for (auto w : g.neighbors_at(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          queue.push_back(w);
        }
        if (dist[w] == dist[u] + 1) preds[w].push_back(u);
      }
    }
    for (std::size_t ti = si + 1; ti < n; ++ti) {
      if (dist[ti] < 0) continue;
      // Enumerate every shortest path from si to ti by walking predecessors.
      std::vector<std::vector<std::size_t>> paths;
      std::vector<std::size_t> cur{ti};
      std::function<void(std::size_t)> walk = [&](std::size_t v) {
        if (v == si) {
          paths.push_back(cur);
          return;
        }
        for (auto p : preds[v]) {
          cur.push_back(p);
          walk(p);
          cur.pop_back();
        }
      };
      walk(ti);
      const double total = static_cast<double>(paths.size());
      for (const auto& path : paths)
        for (std::size_t i = 1; i + 1 < path.size(); ++i)
          bc[nodes[path[i]]] += 1.0 / total;
    }
  }
  return bc;
}

// Re-implementation of the expected diffusion value: scan every non-seed
// node, count its edges into the seed set directly from the edge list.
inline double edv_reference(const Graph& g, const std::vector<NodeId>& s, double p) {
  std::vector<NodeId> seed = s;
  std::sort(seed.begin(), seed.end());
  seed.erase(std::unique(seed.begin(), seed.end()), seed.end());
  auto in_seed = [&](NodeId v) {
    return std::binary_search(seed.begin(), seed.end(), v);
  };
  const auto edges = g.edges();
  double value = static_cast<double>(seed.size());
  for (NodeId b : g.nodes()) {
    if (in_seed(b)) continue;
    std::size_t delta = 0;
    for (const auto& [u, v] : edges) {
      if (u == b && in_seed(v)) ++delta;
      if (v == b && in_seed(u)) ++delta;
    }
    if (delta > 0) value += 1.0 - std::pow(1.0 - p, static_cast<double>(delta));
  }
  return value;
}

// Exact expected independent-cascade spread by enumerating the liveness of
// every edge (2^|E| outcomes). Only usable on tiny graphs.
inline double exact_ic_spread(const Graph& g, const std::vector<NodeId>& s, double p) {
  const auto edges = g.edges();
  const std::size_t m = edges.size();
  const auto& nodes = g.nodes();
  std::vector<std::size_t> seed_idx;
  for (NodeId v : s) seed_idx.push_back(g.index_of(v));

  double expectation = 0.0;
  for (std::uint64_t mask = 0; mask < (1ULL << m); ++mask) {
    double prob = 1.0;
    for (std::size_t e = 0; e < m; ++e)
      prob *= (mask >> e) & 1 ? p : (1.0 - p);
    // Reachability over live edges.
    std::vector<char> active(nodes.size(), 0);
    std::vector<std::size_t> stack = seed_idx;
    for (auto i : stack) active[i] = 1;
    while (!stack.empty()) {
      auto u = stack.back();
      stack.pop_back();
      for (std::size_t e = 0; e < m; ++e) {
        if (!((mask >> e) & 1)) continue;
        auto iu = g.index_of(edges[e].first);
        auto iv = g.index_of(edges[e].second);
        if (iu == u && !active[iv]) {
          active[iv] = 1;
          stack.push_back(iv);
        } else if (iv == u && !active[iu]) {
          active[iu] = 1;
          stack.push_back(iu);
        }
      }
    }
    std::size_t count = 0;
    for (char a : active) count += a;
    expectation += prob * static_cast<double>(count);
  }
  return expectation;
}

// Exact one-hop expected activation: seeds plus each boundary node activated
// independently through its edges into S. Equals the diffusion surrogate by
// construction and is computed by outcome enumeration per boundary node.
inline double exact_one_hop_spread(const Graph& g, const std::vector<NodeId>& s,
                                   double p) {
  std::vector<NodeId> seed = s;
  std::sort(seed.begin(), seed.end());
  seed.erase(std::unique(seed.begin(), seed.end()), seed.end());
  auto in_seed = [&](NodeId v) {
    return std::binary_search(seed.begin(), seed.end(), v);
  };
  double expectation = static_cast<double>(seed.size());
  for (NodeId b : g.nodes()) {
    if (in_seed(b)) continue;
    std::size_t delta = 0;
    for (NodeId nb : g.neighbors(b))
      if (in_seed(nb)) ++delta;
    if (delta == 0) continue;
    // Enumerate liveness outcomes of the delta incoming edges.
    double p_active = 0.0;
    for (std::uint64_t mask = 0; mask < (1ULL << delta); ++mask) {
      if (mask == 0) continue;
      double prob = 1.0;
      for (std::size_t e = 0; e < delta; ++e)
        prob *= (mask >> e) & 1 ? p : (1.0 - p);
      p_active += prob;
    }
    expectation += p_active;
  }
  return expectation;
}

// Connected Erdos-Renyi-style random graph on n nodes (retries until
// connected). Node ids are 0..n-1.
inline Graph random_connected_graph(std::size_t n, double edge_prob,
                                    std::uint64_t seed) {
  coev::Rng rng(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (NodeId u = 0; u < n; ++u)
      for (NodeId v = u + 1; v < n; ++v)
        if (rng.uniform01() < edge_prob) edges.push_back({u, v});
    std::vector<NodeId> all(n);
    for (NodeId v = 0; v < n; ++v) all[v] = v;
    Graph g = Graph::from_edges(edges, all);
    if (g.is_connected()) return g;
  }
  throw std::runtime_error("random_connected_graph: could not build a connected graph");
}

// Exact two-sided Mann-Whitney rank-sum p-value by enumerating every
// assignment of ranks to the first sample. Feasible up to n1+n2 ~ 20.
double exact_rank_sum_p(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace oracle
