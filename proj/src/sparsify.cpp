#include "coev/sparsify.hpp"

#include <algorithm>
#include <stdexcept>

#include "coev/betweenness.hpp"
#include "coev/community.hpp"
#include "coev/rng.hpp"

namespace coev {

std::string to_string(SparsifyStrategy s) {
  return s == SparsifyStrategy::DegreeBased ? "degree" : "community";
}

std::string to_string(FillStrategy f) {
  return f == FillStrategy::Heuristic ? "heuristic" : "random";
}

SparsifyStrategy sparsify_strategy_from_string(const std::string& s) {
  if (s == "degree") return SparsifyStrategy::DegreeBased;
  if (s == "community") return SparsifyStrategy::CommunityBased;
  throw std::invalid_argument("unknown sparsification strategy: " + s);
}

FillStrategy fill_strategy_from_string(const std::string& s) {
  if (s == "heuristic") return FillStrategy::Heuristic;
  if (s == "random") return FillStrategy::Random;
  throw std::invalid_argument("unknown fill strategy: " + s);
}

void SparsifyConfig::validate() const {
  if (n_nodes_target < 2) throw std::invalid_argument("sparsify: node target must be >= 2");
  if (n_edges_target < 1) throw std::invalid_argument("sparsify: edge target must be >= 1");
}

SparsifiedDomain make_domain(Graph subgraph, SparsifyConfig cfg) {
  SparsifiedDomain d;
  d.origin_nodes = subgraph.nodes();
  d.subgraph_betweenness = betweenness_centrality(subgraph);
  d.subgraph = std::move(subgraph);
  d.config = cfg;
  return d;
}

SparsifiedDomain refine_subgraph(const Graph& g, const std::vector<NodeId>& v_s,
                                 const SparsifyConfig& cfg) {
  cfg.validate();
  Graph induced = g.induced_subgraph(v_s);
  auto edges = induced.edges();
  if (edges.size() > cfg.n_edges_target) {
    Rng rng(mix_seed(cfg.rng_seed, fnv1a64("refine")));
    rng.shuffle(edges);
    edges.resize(cfg.n_edges_target);
    std::sort(edges.begin(), edges.end());
    induced = Graph::from_edges(edges, induced.nodes());
  }
  std::vector<NodeId> non_isolated;
  for (NodeId v : induced.nodes())
    if (induced.degree(v) > 0) non_isolated.push_back(v);
  if (non_isolated.empty())
    throw GraphError("refine_subgraph: all nodes isolated after pruning");
  return make_domain(largest_connected_component(induced.induced_subgraph(non_isolated)),
                     cfg);
}

std::vector<NodeId> select_by_degree(const Graph& g, std::size_t n_target) {
  if (g.node_count() < n_target)
    throw GraphError("sparsify_by_degree: graph smaller than node target");
  std::vector<NodeId> ranked = g.nodes();
  std::stable_sort(ranked.begin(), ranked.end(), [&](NodeId a, NodeId b) {
    auto da = g.degree(a), db = g.degree(b);
    if (da != db) return da > db;
    return a < b;
  });
  ranked.resize(n_target);
  return ranked;
}

SparsifiedDomain sparsify_by_degree(const Graph& g, const SparsifyConfig& cfg) {
  cfg.validate();
  return refine_subgraph(g, select_by_degree(g, cfg.n_nodes_target), cfg);
}

std::vector<NodeId> select_by_community(const Graph& g, std::size_t n_target) {
  if (g.node_count() < n_target)
    throw GraphError("sparsify_by_community: graph smaller than node target");

  const Graph lcc = largest_connected_component(g);
  const CommunityPartition part = detect_communities(lcc);
  const auto bc = betweenness_centrality(g);  // full-graph centrality

  auto more_central = [&](NodeId a, NodeId b) {
    const double ba = bc[g.index_of(a)], bb = bc[g.index_of(b)];
    if (ba != bb) return ba > bb;
    return a < b;
  };

  // Members of each community ranked by betweenness.
  const std::size_t n_comm = part.community_count();
  std::vector<std::vector<NodeId>> ranked(n_comm);
  for (std::size_t i = 0; i < part.nodes.size(); ++i)
    ranked[part.community[i]].push_back(part.nodes[i]);
  for (auto& members : ranked) std::sort(members.begin(), members.end(), more_central);

  // floor(|C_i| / |V| * N) computed in integers to keep the floor exact.
  const std::size_t v_total = lcc.node_count();
  std::vector<std::size_t> quota(n_comm);
  std::size_t assigned = 0;
  for (std::size_t c = 0; c < n_comm; ++c) {
    quota[c] = part.community_sizes[c] * n_target / v_total;
    quota[c] = std::min(quota[c], ranked[c].size());
    assigned += quota[c];
  }

  // Floors can undershoot the target; hand out one extra slot per community
  // in descending size order until the target is met or nothing is left.
  std::vector<std::size_t> comm_order(n_comm);
  for (std::size_t c = 0; c < n_comm; ++c) comm_order[c] = c;
  std::stable_sort(comm_order.begin(), comm_order.end(), [&](std::size_t a, std::size_t b) {
    return part.community_sizes[a] > part.community_sizes[b];
  });
  while (assigned < n_target) {
    bool progressed = false;
    for (auto c : comm_order) {
      if (assigned >= n_target) break;
      if (quota[c] < ranked[c].size()) {
        ++quota[c];
        ++assigned;
        progressed = true;
      }
    }
    if (!progressed) break;
  }

  std::vector<NodeId> selected;
  selected.reserve(assigned);
  for (std::size_t c = 0; c < n_comm; ++c)
    selected.insert(selected.end(), ranked[c].begin(), ranked[c].begin() + quota[c]);
  return selected;
}

SparsifiedDomain sparsify_by_community(const Graph& g, const SparsifyConfig& cfg) {
  cfg.validate();
  return refine_subgraph(g, select_by_community(g, cfg.n_nodes_target), cfg);
}

SparsifiedDomain sparsify(const Graph& g, const SparsifyConfig& cfg) {
  return cfg.strategy == SparsifyStrategy::DegreeBased ? sparsify_by_degree(g, cfg)
                                                       : sparsify_by_community(g, cfg);
}

std::vector<NodeId> project_to_original(const SparsifiedDomain& d,
                                        const std::vector<NodeId>& s) {
  for (NodeId v : s)
    if (!d.contains(v))
      throw GraphError("project_to_original: node " + std::to_string(v) +
                       " not in domain");
  std::vector<NodeId> out = s;
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<NodeId> inject_to_domain(const SparsifiedDomain& d,
                                     const std::vector<NodeId>& s) {
  std::vector<NodeId> out;
  for (NodeId v : s)
    if (d.contains(v)) out.push_back(v);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<NodeId> proj_with_fill(const SparsifiedDomain& d, const std::vector<NodeId>& s,
                                   std::size_t k, FillStrategy fill,
                                   std::uint64_t rng_seed) {
  if (d.subgraph.node_count() < k)
    throw GraphError("proj_with_fill: domain smaller than k");
  std::vector<NodeId> picked = inject_to_domain(d, s);
  if (picked.size() > k)
    throw std::invalid_argument("proj_with_fill: injected set exceeds k");
  if (picked.size() == k) return picked;

  std::vector<NodeId> candidates;
  for (NodeId v : d.subgraph.nodes())
    if (!std::binary_search(picked.begin(), picked.end(), v)) candidates.push_back(v);

  if (fill == FillStrategy::Heuristic) {
    std::stable_sort(candidates.begin(), candidates.end(), [&](NodeId a, NodeId b) {
      const double ba = d.subgraph_betweenness[d.subgraph.index_of(a)];
      const double bb = d.subgraph_betweenness[d.subgraph.index_of(b)];
      if (ba != bb) return ba > bb;
      return a < b;
    });
    picked.insert(picked.end(), candidates.begin(),
                  candidates.begin() + static_cast<std::ptrdiff_t>(k - picked.size()));
  } else {
    Rng rng(mix_seed(rng_seed, fnv1a64("fill")));
    auto chosen = rng.sample_indices(candidates.size(), k - picked.size());
    for (auto idx : chosen) picked.push_back(candidates[idx]);
  }
  std::sort(picked.begin(), picked.end());
  return picked;
}

nlohmann::json domain_manifest(const SparsifiedDomain& d) {
  nlohmann::json j;
  j["strategy"] = to_string(d.config.strategy);
  j["seed"] = d.config.rng_seed;
  j["n_nodes_target"] = d.config.n_nodes_target;
  j["n_edges_target"] = d.config.n_edges_target;
  j["nodes"] = d.subgraph.nodes();
  auto edges = nlohmann::json::array();
  for (const auto& [u, v] : d.subgraph.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  return j;
}

SparsifiedDomain domain_from_manifest(const nlohmann::json& j) {
  SparsifyConfig cfg;
  cfg.strategy = sparsify_strategy_from_string(j.at("strategy").get<std::string>());
  cfg.rng_seed = j.at("seed").get<std::uint64_t>();
  cfg.n_nodes_target = j.at("n_nodes_target").get<std::size_t>();
  cfg.n_edges_target = j.at("n_edges_target").get<std::size_t>();
  std::vector<NodeId> nodes = j.at("nodes").get<std::vector<NodeId>>();
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (const auto& e : j.at("edges"))
    edges.push_back({e.at(0).get<NodeId>(), e.at(1).get<NodeId>()});
  return make_domain(Graph::from_edges(edges, nodes), cfg);
}

}  // namespace coev
