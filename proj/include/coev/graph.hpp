#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace coev {

using NodeId = std::uint64_t;

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Immutable undirected simple graph. Node identifiers are the input integers
// and are never renumbered; subgraph extraction preserves them. Internally
// nodes are addressed by their rank in the sorted id list, so index order and
// id order coincide.
class Graph {
 public:
  Graph() = default;

  // Deduplicates edges and drops self-loops.
  static Graph from_edges(const std::vector<std::pair<NodeId, NodeId>>& edges,
                          const std::vector<NodeId>& extra_nodes = {});

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  bool empty() const { return nodes_.empty(); }

  const std::vector<NodeId>& nodes() const { return nodes_; }
  bool has_node(NodeId v) const;

  // Dense index of a node id (rank in sorted id order). Throws on unknown id.
  std::size_t index_of(NodeId v) const;
  NodeId id_at(std::size_t idx) const { return nodes_[idx]; }

  std::size_t degree(NodeId v) const { return adj_[index_of(v)].size(); }
  std::size_t degree_at(std::size_t idx) const { return adj_[idx].size(); }

  // Neighbor ids in ascending order.
  std::vector<NodeId> neighbors(NodeId v) const;
  // Neighbor dense indices in ascending order.
  std::span<const std::uint32_t> neighbors_at(std::size_t idx) const {
    return adj_[idx];
  }

  bool has_edge(NodeId u, NodeId v) const;

  // Edges as (u, v) pairs with u < v, sorted.
  std::vector<std::pair<NodeId, NodeId>> edges() const;

  // Induced subgraph on the given nodes; ids preserved. Unknown ids rejected.
  Graph induced_subgraph(const std::vector<NodeId>& keep) const;

  bool is_connected() const;

  // Connected components as sorted id lists, largest first; equal sizes
  // ordered by smallest minimum id.
  std::vector<std::vector<NodeId>> connected_components() const;

 private:
  std::vector<NodeId> nodes_;                   // sorted
  std::vector<std::vector<std::uint32_t>> adj_; // dense indices, sorted
  std::size_t edge_count_ = 0;
};

struct LoadResult {
  Graph graph;
  std::size_t self_loops_dropped = 0;
  std::size_t duplicate_edges_dropped = 0;
};

// Reads a whitespace- or comma-delimited edge list. Lines starting with '#'
// and blank lines are skipped. Each data line must hold exactly two integer
// tokens; violations raise GraphError naming the line number. Directed input
// is symmetrized by construction.
LoadResult load_edge_list(const std::string& path);

// Same parser over an in-memory buffer (used by tests and generators).
LoadResult parse_edge_list(const std::string& text, const std::string& origin = "<memory>");

void write_edge_list(const Graph& g, const std::string& path);

// S together with all neighbors of S.
std::vector<NodeId> one_hop_neighborhood(const Graph& g, const std::vector<NodeId>& s);

// Induced subgraph on the largest component; ties broken by the component
// containing the smallest node id. Idempotent.
Graph largest_connected_component(const Graph& g);

}  // namespace coev
