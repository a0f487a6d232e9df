#include "oracles.hpp"

#include <numeric>

namespace oracle {

double exact_rank_sum_p(const std::vector<double>& a, const std::vector<double>& b) {
  const std::size_t n1 = a.size(), n2 = b.size(), n = n1 + n2;
  std::vector<double> pooled = a;
  pooled.insert(pooled.end(), b.begin(), b.end());

  // Midranks over the pooled sample.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return pooled[x] < pooled[y]; });
  std::vector<double> rank(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && pooled[order[j + 1]] == pooled[order[i]]) ++j;
    const double mid = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t t = i; t <= j; ++t) rank[order[t]] = mid;
    i = j + 1;
  }

  double w_obs = 0.0;
  for (std::size_t t = 0; t < n1; ++t) w_obs += rank[t];
  const double mu = static_cast<double>(n1) * static_cast<double>(n + 1) / 2.0;
  const double dev_obs = std::abs(w_obs - mu);

  // Enumerate every assignment of n1 pooled positions to sample a.
  std::vector<char> pick(n, 0);
  for (std::size_t t = 0; t < n1; ++t) pick[t] = 1;
  std::sort(pick.begin(), pick.end());  // start from the lexicographically first

  std::uint64_t total = 0, extreme = 0;
  do {
    double w = 0.0;
    for (std::size_t t = 0; t < n; ++t)
      if (pick[t]) w += rank[t];
    ++total;
    if (std::abs(w - mu) >= dev_obs - 1e-12) ++extreme;
  } while (std::next_permutation(pick.begin(), pick.end()));

  return static_cast<double>(extreme) / static_cast<double>(total);
}

}  // namespace oracle
