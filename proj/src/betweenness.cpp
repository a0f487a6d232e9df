#include "coev/betweenness.hpp"

#include <algorithm>
#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace coev {

namespace {

// Brandes accumulation for one source; adds dependencies into acc.
void accumulate_source(const Graph& g, std::uint32_t source, std::vector<double>& acc,
                       std::vector<std::int64_t>& dist, std::vector<double>& sigma,
                       std::vector<double>& delta, std::vector<std::uint32_t>& order,
                       std::vector<std::vector<std::uint32_t>>& preds) {
  std::fill(dist.begin(), dist.end(), -1);
  std::fill(sigma.begin(), sigma.end(), 0.0);
  std::fill(delta.begin(), delta.end(), 0.0);
  for (auto& p : preds) p.clear();
  order.clear();

  dist[source] = 0;
  sigma[source] = 1.0;
  std::size_t head = 0;
  order.push_back(source);
  while (head < order.size()) {
    auto v = order[head++];
    for (auto w : g.neighbors_at(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        order.push_back(w);
      }
      if (dist[w] == dist[v] + 1) {
        sigma[w] += sigma[v];
        preds[w].push_back(v);
      }
    }
  }

  for (std::size_t i = order.size(); i-- > 0;) {
    auto w = order[i];
    for (auto v : preds[w]) delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
    if (w != source) acc[w] += delta[w];
  }
}

struct Scratch {
  std::vector<std::int64_t> dist;
  std::vector<double> sigma;
  std::vector<double> delta;
  std::vector<std::uint32_t> order;
  std::vector<std::vector<std::uint32_t>> preds;

  explicit Scratch(std::size_t n) : dist(n), sigma(n), delta(n), order(), preds(n) {
    order.reserve(n);
  }
};

constexpr std::size_t kBlockSize = 64;

}  // namespace

std::vector<double> betweenness_serial(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<double> bc(n, 0.0);
  if (n == 0) return bc;
  Scratch s(n);
  for (std::uint32_t src = 0; src < n; ++src)
    accumulate_source(g, src, bc, s.dist, s.sigma, s.delta, s.order, s.preds);
  // Undirected: each pair counted from both endpoints.
  for (auto& v : bc) v /= 2.0;
  return bc;
}

std::vector<double> betweenness_parallel(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<double> bc(n, 0.0);
  if (n == 0) return bc;

  const std::size_t n_blocks = (n + kBlockSize - 1) / kBlockSize;
  std::vector<std::vector<double>> partials(n_blocks);

#ifdef _OPENMP
#pragma omp parallel
#endif
  {
    Scratch s(n);
#ifdef _OPENMP
#pragma omp for schedule(dynamic, 1)
#endif
    for (std::int64_t b = 0; b < static_cast<std::int64_t>(n_blocks); ++b) {
      auto& acc = partials[b];
      acc.assign(n, 0.0);
      const std::size_t lo = static_cast<std::size_t>(b) * kBlockSize;
      const std::size_t hi = std::min(lo + kBlockSize, n);
      for (std::size_t src = lo; src < hi; ++src)
        accumulate_source(g, static_cast<std::uint32_t>(src), acc, s.dist, s.sigma,
                          s.delta, s.order, s.preds);
    }
  }

  // Fixed block-order reduction keeps floating-point sums independent of
  // the thread count.
  for (std::size_t b = 0; b < n_blocks; ++b)
    for (std::size_t i = 0; i < n; ++i) bc[i] += partials[b][i];
  for (auto& v : bc) v /= 2.0;
  return bc;
}

}  // namespace coev
