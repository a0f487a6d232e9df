#include "coev/graph.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace coev {

Graph Graph::from_edges(const std::vector<std::pair<NodeId, NodeId>>& edges,
                        const std::vector<NodeId>& extra_nodes) {
  Graph g;
  g.nodes_.reserve(edges.size() * 2 + extra_nodes.size());
  for (const auto& [u, v] : edges) {
    g.nodes_.push_back(u);
    g.nodes_.push_back(v);
  }
  g.nodes_.insert(g.nodes_.end(), extra_nodes.begin(), extra_nodes.end());
  std::sort(g.nodes_.begin(), g.nodes_.end());
  g.nodes_.erase(std::unique(g.nodes_.begin(), g.nodes_.end()), g.nodes_.end());

  std::vector<std::pair<std::uint32_t, std::uint32_t>> dense;
  dense.reserve(edges.size());
  for (const auto& [u, v] : edges) {
    if (u == v) continue;
    auto iu = static_cast<std::uint32_t>(g.index_of(u));
    auto iv = static_cast<std::uint32_t>(g.index_of(v));
    if (iu > iv) std::swap(iu, iv);
    dense.emplace_back(iu, iv);
  }
  std::sort(dense.begin(), dense.end());
  dense.erase(std::unique(dense.begin(), dense.end()), dense.end());

  g.adj_.resize(g.nodes_.size());
  for (const auto& [iu, iv] : dense) {
    g.adj_[iu].push_back(iv);
    g.adj_[iv].push_back(iu);
  }
  for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
  g.edge_count_ = dense.size();
  return g;
}

bool Graph::has_node(NodeId v) const {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), v);
  return it != nodes_.end() && *it == v;
}

std::size_t Graph::index_of(NodeId v) const {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), v);
  if (it == nodes_.end() || *it != v)
    throw GraphError("unknown node id " + std::to_string(v));
  return static_cast<std::size_t>(it - nodes_.begin());
}

std::vector<NodeId> Graph::neighbors(NodeId v) const {
  const auto& nbrs = adj_[index_of(v)];
  std::vector<NodeId> out;
  out.reserve(nbrs.size());
  for (auto idx : nbrs) out.push_back(nodes_[idx]);
  return out;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  const auto iu = index_of(u);
  const auto iv = static_cast<std::uint32_t>(index_of(v));
  const auto& nbrs = adj_[iu];
  return std::binary_search(nbrs.begin(), nbrs.end(), iv);
}

std::vector<std::pair<NodeId, NodeId>> Graph::edges() const {
  std::vector<std::pair<NodeId, NodeId>> out;
  out.reserve(edge_count_);
  for (std::size_t i = 0; i < adj_.size(); ++i) {
    for (auto j : adj_[i]) {
      if (j > i) out.emplace_back(nodes_[i], nodes_[j]);
    }
  }
  return out;
}

Graph Graph::induced_subgraph(const std::vector<NodeId>& keep) const {
  std::vector<NodeId> sorted = keep;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  std::vector<std::pair<NodeId, NodeId>> sub_edges;
  for (NodeId u : sorted) {
    const auto iu = index_of(u);  // throws on unknown id
    for (auto jv : adj_[iu]) {
      NodeId v = nodes_[jv];
      if (v > u && std::binary_search(sorted.begin(), sorted.end(), v))
        sub_edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(sub_edges, sorted);
}

std::vector<std::vector<NodeId>> Graph::connected_components() const {
  std::vector<std::vector<NodeId>> comps;
  std::vector<char> seen(nodes_.size(), 0);
  std::vector<std::uint32_t> stack;
  for (std::size_t start = 0; start < nodes_.size(); ++start) {
    if (seen[start]) continue;
    std::vector<NodeId> comp;
    stack.push_back(static_cast<std::uint32_t>(start));
    seen[start] = 1;
    while (!stack.empty()) {
      auto cur = stack.back();
      stack.pop_back();
      comp.push_back(nodes_[cur]);
      for (auto nb : adj_[cur]) {
        if (!seen[nb]) {
          seen[nb] = 1;
          stack.push_back(nb);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  std::stable_sort(comps.begin(), comps.end(),
                   [](const auto& a, const auto& b) {
                     if (a.size() != b.size()) return a.size() > b.size();
                     return a.front() < b.front();
                   });
  return comps;
}

bool Graph::is_connected() const {
  if (nodes_.empty()) return true;
  return connected_components().size() == 1;
}

namespace {

bool parse_node_token(const std::string& tok, NodeId& out) {
  if (tok.empty()) return false;
  NodeId value = 0;
  for (char c : tok) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    value = value * 10 + static_cast<NodeId>(c - '0');
  }
  out = value;
  return true;
}

}  // namespace

LoadResult parse_edge_list(const std::string& text, const std::string& origin) {
  LoadResult result;
  std::vector<std::pair<NodeId, NodeId>> raw;
  std::vector<NodeId> loop_nodes;  // self-loop endpoints stay as isolated nodes
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ls(line);
    std::string a, b, extra;
    ls >> a >> b;
    NodeId u = 0, v = 0;
    if (!parse_node_token(a, u) || !parse_node_token(b, v) || (ls >> extra))
      throw GraphError(origin + ":" + std::to_string(line_no) +
                       ": expected two integer tokens, got '" + line + "'");
    if (u == v) {
      ++result.self_loops_dropped;
      loop_nodes.push_back(u);
      continue;
    }
    raw.push_back({u, v});
  }
  result.graph = Graph::from_edges(raw, loop_nodes);
  // Count duplicates after symmetrization: (u,v) and (v,u) collapse too.
  result.duplicate_edges_dropped = raw.size() - result.graph.edge_count();
  return result;
}

LoadResult load_edge_list(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GraphError("cannot open edge list file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_edge_list(buf.str(), path);
}

void write_edge_list(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw GraphError("cannot write edge list file: " + path);
  for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
}

std::vector<NodeId> one_hop_neighborhood(const Graph& g, const std::vector<NodeId>& s) {
  std::vector<NodeId> out;
  for (NodeId v : s) {
    out.push_back(g.nodes()[g.index_of(v)]);
    for (auto nb : g.neighbors_at(g.index_of(v))) out.push_back(g.id_at(nb));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Graph largest_connected_component(const Graph& g) {
  if (g.empty()) return g;
  auto comps = g.connected_components();
  return g.induced_subgraph(comps.front());
}

}  // namespace coev
