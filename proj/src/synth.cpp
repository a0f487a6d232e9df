#include "coev/synth.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "coev/rng.hpp"

namespace coev::synth {

namespace {

std::uint64_t edge_key(std::uint64_t u, std::uint64_t v) {
  if (u > v) std::swap(u, v);
  return (u << 32) | v;
}

}  // namespace

Graph preferential_attachment(std::size_t n, std::size_t m_per_node, std::uint64_t seed) {
  if (n < 2 || m_per_node < 1) throw std::invalid_argument("preferential_attachment: n >= 2, m >= 1");
  Rng rng(seed);
  std::vector<std::pair<NodeId, NodeId>> edges;
  std::vector<NodeId> ends;  // node repeated once per incident edge end
  ends.push_back(0);
  for (NodeId v = 1; v < n; ++v) {
    std::unordered_set<NodeId> targets;
    const std::size_t want = std::min<std::size_t>(m_per_node, static_cast<std::size_t>(v));
    while (targets.size() < want) {
      NodeId t = ends[rng.index(ends.size())];
      targets.insert(t);
    }
    std::vector<NodeId> sorted(targets.begin(), targets.end());
    std::sort(sorted.begin(), sorted.end());
    for (NodeId t : sorted) {
      edges.push_back({v, t});
      ends.push_back(v);
      ends.push_back(t);
    }
  }
  return Graph::from_edges(edges);
}

Graph sized_network(std::size_t n_nodes, std::size_t n_edges, std::uint64_t seed) {
  if (n_nodes < 2) throw std::invalid_argument("sized_network: need at least 2 nodes");
  if (n_edges < n_nodes - 1)
    throw std::invalid_argument("sized_network: too few edges for a connected graph");
  const std::size_t max_edges = n_nodes * (n_nodes - 1) / 2;
  if (n_edges > max_edges) throw std::invalid_argument("sized_network: too many edges");

  Rng rng(seed);
  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(n_edges);
  std::unordered_set<std::uint64_t> present;
  std::vector<NodeId> ends;

  // Spanning tree grown with preferential attachment.
  ends.push_back(0);
  for (NodeId v = 1; v < n_nodes; ++v) {
    NodeId t = ends[rng.index(ends.size())];
    edges.push_back({v, t});
    present.insert(edge_key(v, t));
    ends.push_back(v);
    ends.push_back(t);
  }

  // Extra edges with degree-biased endpoints.
  while (edges.size() < n_edges) {
    NodeId u = ends[rng.index(ends.size())];
    NodeId v = rng.bernoulli(0.5) ? ends[rng.index(ends.size())]
                                  : static_cast<NodeId>(rng.index(n_nodes));
    if (u == v) continue;
    auto key = edge_key(u, v);
    if (present.count(key)) continue;
    present.insert(key);
    edges.push_back({u, v});
    ends.push_back(u);
    ends.push_back(v);
  }
  return Graph::from_edges(edges);
}

const std::vector<BenchmarkDims>& benchmark_dims() {
  static const std::vector<BenchmarkDims> dims = {
      {"usair", 332, 2126},      {"netscience", 379, 914},
      {"polblogs", 1222, 16717}, {"facebook", 4039, 88234},
      {"wikivote", 7066, 100736}, {"rutgers89", 24568, 784596},
      {"msu24", 32361, 1118767}, {"texas84", 36365, 1590651},
  };
  return dims;
}

Graph benchmark_network(const std::string& name, std::uint64_t seed) {
  for (const auto& d : benchmark_dims()) {
    if (d.name == name)
      return sized_network(d.nodes, d.edges, mix_seed(seed, fnv1a64(name)));
  }
  throw std::invalid_argument("unknown benchmark network: " + name);
}

}  // namespace coev::synth
