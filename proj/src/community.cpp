#include "coev/community.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <tuple>

namespace coev {

std::uint32_t CommunityPartition::community_of(NodeId v) const {
  auto it = std::lower_bound(nodes.begin(), nodes.end(), v);
  if (it == nodes.end() || *it != v)
    throw GraphError("node " + std::to_string(v) + " not in partition");
  return community[static_cast<std::size_t>(it - nodes.begin())];
}

std::vector<NodeId> CommunityPartition::members_of(std::uint32_t c) const {
  std::vector<NodeId> out;
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (community[i] == c) out.push_back(nodes[i]);
  return out;
}

double modularity(const Graph& g, const CommunityPartition& p) {
  const double m = static_cast<double>(g.edge_count());
  if (m == 0.0) return 0.0;
  std::vector<double> within(p.community_count(), 0.0);
  std::vector<double> degsum(p.community_count(), 0.0);
  for (std::size_t i = 0; i < p.nodes.size(); ++i)
    degsum[p.community[i]] += static_cast<double>(g.degree_at(g.index_of(p.nodes[i])));
  for (const auto& [u, v] : g.edges())
    if (p.community_of(u) == p.community_of(v)) within[p.community_of(u)] += 1.0;
  double q = 0.0;
  for (std::size_t c = 0; c < p.community_count(); ++c) {
    const double a = degsum[c] / (2.0 * m);
    q += within[c] / m - a * a;
  }
  return q;
}

namespace {

struct MergeCandidate {
  double dq;
  std::uint32_t i, j;
  std::uint64_t stamp_i, stamp_j;
};

struct CandidateLess {
  bool operator()(const MergeCandidate& a, const MergeCandidate& b) const {
    if (a.dq != b.dq) return a.dq < b.dq;
    if (a.i != b.i) return a.i > b.i;
    return a.j > b.j;
  }
};

}  // namespace

CommunityPartition detect_communities(const Graph& g) {
  if (g.empty()) throw GraphError("detect_communities: empty graph");
  if (!g.is_connected())
    throw GraphError("detect_communities: graph must be connected (pass the LCC)");

  const std::size_t n = g.node_count();
  const double m = static_cast<double>(g.edge_count());

  CommunityPartition out;
  out.nodes = g.nodes();
  out.community.assign(n, 0);

  if (g.edge_count() == 0) {
    // Connected with no edges means a single node.
    out.community_sizes = {n};
    return out;
  }

  // Community state during agglomeration. Communities are labeled by the
  // dense index of their first member; `links[i]` holds inter-community edge
  // counts keyed by neighbor label.
  std::vector<std::map<std::uint32_t, double>> links(n);
  std::vector<double> degsum(n, 0.0);
  std::vector<std::uint64_t> stamp(n, 0);
  std::vector<char> alive(n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    degsum[i] = static_cast<double>(g.degree_at(i));
    for (auto j : g.neighbors_at(i)) links[i][j] = 1.0;
  }

  auto delta_q = [&](std::uint32_t i, std::uint32_t j, double e_ij) {
    return e_ij / m - degsum[i] * degsum[j] / (2.0 * m * m);
  };

  std::priority_queue<MergeCandidate, std::vector<MergeCandidate>, CandidateLess> heap;
  for (std::uint32_t i = 0; i < n; ++i)
    for (const auto& [j, e] : links[i])
      if (j > i) heap.push({delta_q(i, j, e), i, j, stamp[i], stamp[j]});

  // Merge all the way down, remembering where modularity peaks.
  double q = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double a = degsum[i] / (2.0 * m);
    q -= a * a;
  }
  double best_q = q;
  std::size_t best_step = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> merges;  // (absorbed, into)

  while (merges.size() + 1 < n) {
    MergeCandidate top;
    bool found = false;
    while (!heap.empty()) {
      top = heap.top();
      heap.pop();
      if (alive[top.i] && alive[top.j] && stamp[top.i] == top.stamp_i &&
          stamp[top.j] == top.stamp_j) {
        found = true;
        break;
      }
    }
    if (!found) break;  // cannot happen on a connected graph, kept as a guard

    const std::uint32_t i = top.i, j = top.j;
    q += top.dq;
    merges.push_back({j, i});

    // Fold j into i.
    alive[j] = 0;
    ++stamp[i];
    ++stamp[j];
    links[i].erase(j);
    links[j].erase(i);
    for (const auto& [k, e] : links[j]) {
      links[i][k] += e;
      links[k].erase(j);
      links[k][i] = links[i][k];
    }
    links[j].clear();
    degsum[i] += degsum[j];

    for (const auto& [k, e] : links[i]) {
      ++stamp[k];
      const auto a = std::min(i, k);
      const auto b = std::max(i, k);
      heap.push({delta_q(a, b, e), a, b, stamp[a], stamp[b]});
    }

    if (q > best_q + 1e-12) {
      best_q = q;
      best_step = merges.size();
    }
  }

  // Replay merges up to the peak.
  std::vector<std::uint32_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<std::uint32_t> find_stack;
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) {
      find_stack.push_back(x);
      x = parent[x];
    }
    for (auto y : find_stack) parent[y] = x;
    find_stack.clear();
    return x;
  };
  for (std::size_t s = 0; s < best_step; ++s) parent[find(merges[s].first)] = find(merges[s].second);

  // Dense community indices in order of smallest member id (= smallest dense
  // index, since ids are sorted).
  std::vector<std::int64_t> label(n, -1);
  std::uint32_t next = 0;
  for (std::uint32_t v = 0; v < n; ++v) {
    auto r = find(v);
    if (label[r] < 0) label[r] = next++;
    out.community[v] = static_cast<std::uint32_t>(label[r]);
  }
  out.community_sizes.assign(next, 0);
  for (auto c : out.community) ++out.community_sizes[c];
  return out;
}

}  // namespace coev
