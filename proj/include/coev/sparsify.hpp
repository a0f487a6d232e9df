#pragma once

#include <cstdint>
#include <string>

#include "coev/graph.hpp"

#include "json.hpp"

namespace coev {

enum class SparsifyStrategy { DegreeBased, CommunityBased };
enum class FillStrategy { Heuristic, Random };

std::string to_string(SparsifyStrategy s);
std::string to_string(FillStrategy f);
SparsifyStrategy sparsify_strategy_from_string(const std::string& s);
FillStrategy fill_strategy_from_string(const std::string& s);

struct SparsifyConfig {
  std::size_t n_nodes_target = 50;
  std::size_t n_edges_target = 100;
  SparsifyStrategy strategy = SparsifyStrategy::DegreeBased;
  std::uint64_t rng_seed = 0;

  void validate() const;
};

// A small connected subgraph of the original network. Node ids are preserved,
// so the projection back to the original graph is the identity embedding and
// injection is set intersection.
struct SparsifiedDomain {
  Graph subgraph;
  std::vector<NodeId> origin_nodes;  // == subgraph.nodes()
  SparsifyConfig config;
  // Subgraph betweenness by dense index, cached for heuristic filling.
  std::vector<double> subgraph_betweenness;

  bool contains(NodeId v) const { return subgraph.has_node(v); }
};

SparsifiedDomain make_domain(Graph subgraph, SparsifyConfig cfg);

// Candidate node selections before refinement (exposed for inspection).
std::vector<NodeId> select_by_degree(const Graph& g, std::size_t n_target);
std::vector<NodeId> select_by_community(const Graph& g, std::size_t n_target);

// Top nodes by degree (ties by smaller id), then refinement.
SparsifiedDomain sparsify_by_degree(const Graph& g, const SparsifyConfig& cfg);

// Per-community quotas of floor(|C_i|/|V| * N_v*); within each community the
// highest-betweenness nodes (computed on the full graph) are taken. Leftover
// slots from the floor go one per community in descending community size.
SparsifiedDomain sparsify_by_community(const Graph& g, const SparsifyConfig& cfg);

SparsifiedDomain sparsify(const Graph& g, const SparsifyConfig& cfg);

// Induces the edge set, randomly prunes down to the edge target (seeded),
// drops isolated nodes and keeps the largest connected component.
SparsifiedDomain refine_subgraph(const Graph& g, const std::vector<NodeId>& v_s,
                                 const SparsifyConfig& cfg);

// phi: identity on retained nodes. Throws if s leaves the domain.
std::vector<NodeId> project_to_original(const SparsifiedDomain& d,
                                        const std::vector<NodeId>& s);

// phi-minus: intersection with the domain's node set; may shrink.
std::vector<NodeId> inject_to_domain(const SparsifiedDomain& d,
                                     const std::vector<NodeId>& s);

// Injection topped up to exactly k nodes. Heuristic filling takes the
// highest-betweenness non-members of the domain subgraph (ties by id);
// random filling draws uniformly (seeded).
std::vector<NodeId> proj_with_fill(const SparsifiedDomain& d, const std::vector<NodeId>& s,
                                   std::size_t k, FillStrategy fill, std::uint64_t rng_seed);

// Replayable description: node list, edge list, strategy, seed.
nlohmann::json domain_manifest(const SparsifiedDomain& d);
SparsifiedDomain domain_from_manifest(const nlohmann::json& j);

}  // namespace coev
