#include "coev/betweenness.hpp"

#include "coev/synth.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace coev;

TEST_CASE("path mediator") {
  auto g = Graph::from_edges({{0, 1}, {1, 2}});
  auto bc = betweenness_centrality(g);
  CHECK(bc[g.index_of(1)] == doctest::Approx(1.0));
  CHECK(bc[g.index_of(0)] == doctest::Approx(0.0));
  CHECK(bc[g.index_of(2)] == doctest::Approx(0.0));
}

TEST_CASE("complete graph has zero betweenness everywhere") {
  auto g = Graph::from_edges({{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  for (double v : betweenness_centrality(g)) CHECK(v == doctest::Approx(0.0));
}

TEST_CASE("bowtie agrees with path-enumeration oracle") {
  // Two triangles sharing node 2.
  auto g = Graph::from_edges({{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
  auto bc = betweenness_centrality(g);
  auto ref = oracle::brute_betweenness(g);
  for (NodeId v : g.nodes())
    CHECK(bc[g.index_of(v)] == doctest::Approx(ref[v]).epsilon(1e-9));
  CHECK(bc[g.index_of(2)] == doctest::Approx(4.0));
}

TEST_CASE("empty graph yields empty result") {
  CHECK(betweenness_centrality(Graph{}).empty());
}

TEST_CASE("matches the oracle on random small graphs") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Graph g = oracle::random_connected_graph(4 + seed % 5, 0.45, seed);
    auto bc = betweenness_centrality(g);
    auto ref = oracle::brute_betweenness(g);
    for (NodeId v : g.nodes()) {
      INFO("seed ", seed, " node ", v);
      CHECK(bc[g.index_of(v)] == doctest::Approx(ref[v]).epsilon(1e-9));
    }
  }
}

TEST_CASE("parallel kernel equals the serial reference") {
  Graph g = synth::sized_network(400, 1600, 11);
  auto par = betweenness_parallel(g);
  auto ser = betweenness_serial(g);
  REQUIRE(par.size() == ser.size());
  for (std::size_t i = 0; i < par.size(); ++i)
    CHECK(par[i] == doctest::Approx(ser[i]).epsilon(1e-9));
}

TEST_CASE("parallel kernel is run-to-run deterministic") {
  Graph g = synth::sized_network(300, 900, 3);
  auto a = betweenness_parallel(g);
  auto b = betweenness_parallel(g);
  CHECK(a == b);  // bitwise
}
