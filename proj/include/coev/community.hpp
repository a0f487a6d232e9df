#pragma once

#include <cstdint>

#include "coev/graph.hpp"

namespace coev {

struct CommunityPartition {
  std::vector<NodeId> nodes;             // sorted, same order as graph ids
  std::vector<std::uint32_t> community;  // parallel to nodes
  std::vector<std::size_t> community_sizes;

  std::size_t community_count() const { return community_sizes.size(); }
  std::uint32_t community_of(NodeId v) const;
  std::vector<NodeId> members_of(std::uint32_t c) const;
};

// Newman modularity of a partition: sum over communities of
// (within-edges / m) - (degree-sum / 2m)^2.
double modularity(const Graph& g, const CommunityPartition& p);

// Greedy modularity agglomeration (fast-greedy). Requires a connected,
// non-empty graph; the partition at peak modularity is returned.
// Deterministic: merge ties resolved by smallest community-index pair, and
// final community indices assigned by smallest member id.
CommunityPartition detect_communities(const Graph& g);

}  // namespace coev
