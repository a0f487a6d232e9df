#include "coev/sparsify.hpp"

#include "coev/betweenness.hpp"
#include "coev/community.hpp"
#include "coev/synth.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace coev;

namespace {

SparsifyConfig cfg_of(std::size_t nodes, std::size_t edges, SparsifyStrategy strat,
                      std::uint64_t seed) {
  SparsifyConfig c;
  c.n_nodes_target = nodes;
  c.n_edges_target = edges;
  c.strategy = strat;
  c.rng_seed = seed;
  return c;
}

void check_domain_invariants(const Graph& g, const SparsifiedDomain& d) {
  CHECK(d.subgraph.node_count() <= d.config.n_nodes_target);
  CHECK(d.subgraph.edge_count() <= d.config.n_edges_target);
  CHECK(d.subgraph.is_connected());
  CHECK(d.origin_nodes == d.subgraph.nodes());
  for (NodeId v : d.subgraph.nodes()) CHECK(g.has_node(v));
  for (const auto& [u, v] : d.subgraph.edges()) CHECK(g.has_edge(u, v));
}

}  // namespace

TEST_CASE("degree selection takes the top-k with id tie-break") {
  auto g = Graph::from_edges({{0, 1}, {0, 2}, {0, 3}, {1, 2}});
  // degrees: 0 -> 3, 1 -> 2, 2 -> 2, 3 -> 1
  CHECK(select_by_degree(g, 2) == std::vector<NodeId>{0, 1});
  CHECK_THROWS_AS(select_by_degree(g, 5), GraphError);
}

TEST_CASE("node target equal to the graph keeps everything") {
  auto g = Graph::from_edges({{0, 1}, {1, 2}, {2, 0}});
  auto d = sparsify_by_degree(g, cfg_of(3, 10, SparsifyStrategy::DegreeBased, 1));
  CHECK(d.subgraph.nodes() == g.nodes());
  CHECK(d.subgraph.edge_count() == 3);
}

TEST_CASE("degree sparsification of a benchmark-sized network") {
  Graph g = synth::benchmark_network("usair");
  auto cfg = cfg_of(50, 100, SparsifyStrategy::DegreeBased, 7);
  auto d = sparsify_by_degree(g, cfg);
  check_domain_invariants(g, d);

  // Membership agrees with an independent top-k scan.
  auto ranked = g.nodes();
  std::stable_sort(ranked.begin(), ranked.end(), [&](NodeId a, NodeId b) {
    if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
    return a < b;
  });
  std::vector<NodeId> topk(ranked.begin(), ranked.begin() + 50);
  std::sort(topk.begin(), topk.end());
  for (NodeId v : d.subgraph.nodes())
    CHECK(std::binary_search(topk.begin(), topk.end(), v));
}

TEST_CASE("community quotas follow the floor rule") {
  // Cliques of 6 and 4 joined by one edge: floor(6/10*5)=3, floor(4/10*5)=2.
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId u = 0; u < 6; ++u)
    for (NodeId v = u + 1; v < 6; ++v) edges.push_back({u, v});
  for (NodeId u = 6; u < 10; ++u)
    for (NodeId v = u + 1; v < 10; ++v) edges.push_back({u, v});
  edges.push_back({5, 6});
  Graph g = Graph::from_edges(edges);

  auto selected = select_by_community(g, 5);
  REQUIRE(selected.size() == 5);
  std::size_t big = 0, small = 0;
  for (NodeId v : selected) (v < 6 ? big : small)++;
  CHECK(big == 3);
  CHECK(small == 2);
  // Bridge endpoints have the highest betweenness in their cliques.
  CHECK(std::count(selected.begin(), selected.end(), 5) == 1);
  CHECK(std::count(selected.begin(), selected.end(), 6) == 1);
}

TEST_CASE("quota undershoot tops up by descending community size") {
  // Cliques of 4, 3, 3 in a chain; floors for target 5: 2, 1, 1 (sum 4).
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId u = 0; u < 4; ++u)
    for (NodeId v = u + 1; v < 4; ++v) edges.push_back({u, v});
  for (NodeId u = 4; u < 7; ++u)
    for (NodeId v = u + 1; v < 7; ++v) edges.push_back({u, v});
  for (NodeId u = 7; u < 10; ++u)
    for (NodeId v = u + 1; v < 10; ++v) edges.push_back({u, v});
  edges.push_back({3, 4});
  edges.push_back({6, 7});
  Graph g = Graph::from_edges(edges);

  auto part = detect_communities(g);
  REQUIRE(part.community_count() == 3);

  auto selected = select_by_community(g, 5);
  REQUIRE(selected.size() == 5);
  std::size_t a = 0, b = 0, c = 0;
  for (NodeId v : selected) {
    if (v < 4) ++a;
    else if (v < 7) ++b;
    else ++c;
  }
  // The leftover slot goes to the largest community.
  CHECK(a == 3);
  CHECK(b == 1);
  CHECK(c == 1);
}

TEST_CASE("community sparsification keeps bridge nodes on a bowtie") {
  Graph g = [] {
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (NodeId u = 0; u < 5; ++u)
      for (NodeId v = u + 1; v < 5; ++v) edges.push_back({u, v});
    for (NodeId u = 5; u < 10; ++u)
      for (NodeId v = u + 1; v < 10; ++v) edges.push_back({u, v});
    edges.push_back({4, 5});
    return Graph::from_edges(edges);
  }();

  auto selected = select_by_community(g, 4);
  REQUIRE(selected.size() == 4);

  // Betweenness oracle confirms the bridge endpoints rank first.
  auto ref = oracle::brute_betweenness(g);
  CHECK(ref[4] > ref[0]);
  CHECK(ref[5] > ref[9]);
  CHECK(std::count(selected.begin(), selected.end(), 4) == 1);
  CHECK(std::count(selected.begin(), selected.end(), 5) == 1);
}

TEST_CASE("refinement prunes edges, drops isolates, keeps the LCC") {
  SUBCASE("no pruning when under the edge target") {
    Graph g = synth::sized_network(20, 40, 2);
    auto d = refine_subgraph(g, g.nodes(), cfg_of(20, 100, SparsifyStrategy::DegreeBased, 1));
    CHECK(d.subgraph.edge_count() <= 40);
  }
  SUBCASE("isolated nodes are dropped") {
    auto g = Graph::from_edges({{0, 1}, {1, 2}, {0, 2}}, {9});
    auto d = refine_subgraph(g, {0, 1, 2, 9}, cfg_of(4, 10, SparsifyStrategy::DegreeBased, 1));
    CHECK(d.subgraph.nodes() == std::vector<NodeId>{0, 1, 2});
  }
  SUBCASE("K10 pruned to the edge target, deterministic per seed") {
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (NodeId u = 0; u < 10; ++u)
      for (NodeId v = u + 1; v < 10; ++v) edges.push_back({u, v});
    Graph g = Graph::from_edges(edges);

    auto cfg = cfg_of(10, 20, SparsifyStrategy::DegreeBased, 3);
    auto d1 = refine_subgraph(g, g.nodes(), cfg);
    auto d2 = refine_subgraph(g, g.nodes(), cfg);
    CHECK(d1.subgraph.edge_count() == 20);
    CHECK(d1.subgraph.is_connected());
    CHECK(d1.subgraph.edges() == d2.subgraph.edges());

    cfg.rng_seed = 4;
    auto d3 = refine_subgraph(g, g.nodes(), cfg);
    CHECK(d1.subgraph.edges() != d3.subgraph.edges());
  }
  SUBCASE("all nodes isolated is an error") {
    auto g = Graph::from_edges({{0, 1}}, {5, 6});
    CHECK_THROWS_AS(refine_subgraph(g, {5, 6}, cfg_of(2, 5, SparsifyStrategy::DegreeBased, 1)),
                    GraphError);
  }
}

TEST_CASE("projection and injection") {
  Graph g = synth::sized_network(30, 60, 9);
  auto d = sparsify_by_degree(g, cfg_of(10, 15, SparsifyStrategy::DegreeBased, 9));

  SUBCASE("projection is the identity embedding") {
    CHECK(project_to_original(d, {}).empty());
    std::vector<NodeId> inside{d.origin_nodes[0], d.origin_nodes[1]};
    CHECK(project_to_original(d, inside) == inside);
    CHECK_THROWS_AS(project_to_original(d, {d.origin_nodes[0], 999}), GraphError);
  }

  SUBCASE("injection intersects with the domain") {
    std::vector<NodeId> inside{d.origin_nodes[0], d.origin_nodes[2]};
    CHECK(inject_to_domain(d, inside) == inside);
    CHECK(inject_to_domain(d, {9999, 10000}).empty());
  }

  SUBCASE("round trip on retained nodes") {
    std::vector<NodeId> s{d.origin_nodes[0], d.origin_nodes[3], d.origin_nodes[5]};
    CHECK(inject_to_domain(d, project_to_original(d, s)) == s);
  }
}

TEST_CASE("proj_with_fill") {
  // Path domain 0-1-2-3-4; node 2 is the most central, then 1 and 3.
  auto path = Graph::from_edges({{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  auto d = make_domain(path, cfg_of(5, 10, SparsifyStrategy::DegreeBased, 1));

  SUBCASE("full injection returned unchanged") {
    CHECK(proj_with_fill(d, {0, 1, 2}, 3, FillStrategy::Heuristic, 1) ==
          std::vector<NodeId>{0, 1, 2});
  }
  SUBCASE("heuristic fill picks the most central missing nodes") {
    // Only {0, 4} inject; oracle betweenness ranks 2 > 1 = 3, tie to 1.
    auto got = proj_with_fill(d, {0, 4, 999}, 4, FillStrategy::Heuristic, 1);
    auto ref = oracle::brute_betweenness(path);
    CHECK(ref[2] > ref[1]);
    CHECK(ref[1] == ref[3]);
    CHECK(got == std::vector<NodeId>{0, 1, 2, 4});
  }
  SUBCASE("random fill is seeded and in-domain") {
    auto a = proj_with_fill(d, {0}, 3, FillStrategy::Random, 7);
    auto b = proj_with_fill(d, {0}, 3, FillStrategy::Random, 7);
    CHECK(a == b);
    CHECK(a.size() == 3);
    for (NodeId v : a) CHECK(d.contains(v));
  }
  SUBCASE("k larger than the domain is an error") {
    CHECK_THROWS_AS(proj_with_fill(d, {0}, 6, FillStrategy::Heuristic, 1), GraphError);
  }
}

TEST_CASE("proj_with_fill always returns k distinct in-domain nodes") {
  Graph g = synth::sized_network(60, 150, 21);
  auto d = sparsify_by_degree(g, cfg_of(20, 40, SparsifyStrategy::DegreeBased, 21));
  Rng rng(55);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<NodeId> s;
    for (int i = 0; i < 8; ++i) s.push_back(g.nodes()[rng.index(g.node_count())]);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (s.size() > 8) s.resize(8);
    auto fill = trial % 2 ? FillStrategy::Heuristic : FillStrategy::Random;
    auto got = proj_with_fill(d, s, 8, fill, trial);
    CHECK(got.size() == 8);
    CHECK(std::adjacent_find(got.begin(), got.end()) == got.end());
    for (NodeId v : got) CHECK(d.contains(v));
  }
}

TEST_CASE("sparsifiers are deterministic and satisfy invariants on benchmark sizes") {
  for (const char* name : {"usair", "netscience"}) {
    Graph g = synth::benchmark_network(name);
    for (auto strat : {SparsifyStrategy::DegreeBased, SparsifyStrategy::CommunityBased}) {
      auto cfg = cfg_of(50, 100, strat, 7);
      auto d1 = sparsify(g, cfg);
      auto d2 = sparsify(g, cfg);
      check_domain_invariants(g, d1);
      CHECK(domain_manifest(d1) == domain_manifest(d2));
    }
  }
}

TEST_CASE("manifest round trip") {
  Graph g = synth::sized_network(40, 90, 13);
  auto d = sparsify_by_degree(g, cfg_of(15, 30, SparsifyStrategy::DegreeBased, 13));
  auto restored = domain_from_manifest(domain_manifest(d));
  CHECK(restored.subgraph.nodes() == d.subgraph.nodes());
  CHECK(restored.subgraph.edges() == d.subgraph.edges());
  CHECK(restored.config.rng_seed == d.config.rng_seed);
  CHECK(restored.config.strategy == d.config.strategy);
  CHECK(restored.subgraph_betweenness == d.subgraph_betweenness);
}
