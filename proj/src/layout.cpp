#include "coev/layout.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "coev/rng.hpp"

namespace coev {

std::string to_string(LayoutAlgo a) {
  switch (a) {
    case LayoutAlgo::KamadaKawai: return "kk";
    case LayoutAlgo::FruchtermanReingold: return "fr";
    case LayoutAlgo::GraphOpt: return "graphopt";
  }
  return "kk";
}

LayoutAlgo layout_algo_from_string(const std::string& s) {
  if (s == "kk" || s == "kamada-kawai") return LayoutAlgo::KamadaKawai;
  if (s == "fr" || s == "fruchterman-reingold") return LayoutAlgo::FruchtermanReingold;
  if (s == "graphopt") return LayoutAlgo::GraphOpt;
  throw std::invalid_argument("unknown layout: " + s);
}

std::size_t LayoutKind::effective_iterations() const {
  if (iterations > 0) return iterations;
  switch (algo) {
    case LayoutAlgo::KamadaKawai: return 500;
    case LayoutAlgo::FruchtermanReingold: return 500;
    case LayoutAlgo::GraphOpt: return 800;
  }
  return 500;
}

namespace {

Positions random_positions(std::size_t n, double side, std::uint64_t seed) {
  Rng rng(seed);
  Positions pos(n);
  for (auto& [x, y] : pos) {
    x = rng.uniform01() * side;
    y = rng.uniform01() * side;
  }
  return pos;
}

// All-pairs BFS distances; -1 for unreachable.
std::vector<std::vector<int>> bfs_distances(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
  std::vector<std::uint32_t> queue;
  for (std::size_t s = 0; s < n; ++s) {
    auto& d = dist[s];
    d[s] = 0;
    queue.assign(1, static_cast<std::uint32_t>(s));
    for (std::size_t head = 0; head < queue.size(); ++head) {
      auto u = queue[head];
      for (auto v : g.neighbors_at(u)) {
        if (d[v] < 0) {
          d[v] = d[u] + 1;
          queue.push_back(v);
        }
      }
    }
  }
  return dist;
}

double separation(const Positions& pos, std::size_t i, std::size_t j) {
  const double dx = pos[i].first - pos[j].first;
  const double dy = pos[i].second - pos[j].second;
  return std::sqrt(dx * dx + dy * dy);
}

// Deterministic tiny offset used when two points coincide.
std::pair<double, double> jitter_direction(std::size_t i, std::size_t j) {
  const auto h = splitmix64((static_cast<std::uint64_t>(i) << 32) ^ j);
  const double angle = static_cast<double>(h % 6283185) / 1e6;
  return {std::cos(angle), std::sin(angle)};
}

void spring_electrical_step(const Graph& g, Positions& pos, double k, double temperature,
                            std::vector<std::pair<double, double>>& disp) {
  const std::size_t n = g.node_count();
  for (auto& d : disp) d = {0.0, 0.0};

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      double dx = pos[i].first - pos[j].first;
      double dy = pos[i].second - pos[j].second;
      double dist = std::sqrt(dx * dx + dy * dy);
      if (dist < 1e-9) {
        auto [jx, jy] = jitter_direction(i, j);
        dx = jx * 1e-6;
        dy = jy * 1e-6;
        dist = 1e-6;
      }
      const double force = k * k / dist;  // repulsion
      disp[i].first += dx / dist * force;
      disp[i].second += dy / dist * force;
      disp[j].first -= dx / dist * force;
      disp[j].second -= dy / dist * force;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (auto jn : g.neighbors_at(i)) {
      if (jn <= i) continue;
      double dx = pos[i].first - pos[jn].first;
      double dy = pos[i].second - pos[jn].second;
      double dist = std::sqrt(dx * dx + dy * dy);
      if (dist < 1e-9) continue;
      const double force = dist * dist / k;  // attraction along edges
      disp[i].first -= dx / dist * force;
      disp[i].second -= dy / dist * force;
      disp[jn].first += dx / dist * force;
      disp[jn].second += dy / dist * force;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    double dx = disp[i].first, dy = disp[i].second;
    const double len = std::sqrt(dx * dx + dy * dy);
    if (len > 1e-12) {
      const double capped = std::min(len, temperature);
      pos[i].first += dx / len * capped;
      pos[i].second += dy / len * capped;
    }
  }
}

Positions pack_components(const Graph& g, const LayoutKind& cfg,
                          Positions (*kernel)(const Graph&, const LayoutKind&));

}  // namespace

double layout_stress(const Graph& g, const Positions& pos) {
  auto dist = bfs_distances(g);
  double stress = 0.0;
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    for (std::size_t j = i + 1; j < g.node_count(); ++j) {
      if (dist[i][j] <= 0) continue;
      const double target = static_cast<double>(dist[i][j]);
      const double w = 1.0 / (target * target);
      const double diff = separation(pos, i, j) - target;
      stress += w * diff * diff;
    }
  }
  return stress;
}

Positions layout_kk(const Graph& g, const LayoutKind& cfg) {
  if (!g.is_connected()) throw GraphError("layout_kk: graph must be connected");
  const std::size_t n = g.node_count();
  if (n == 0) return {};
  if (n == 1) return {{0.0, 0.0}};

  auto dist = bfs_distances(g);
  Positions pos = random_positions(n, std::sqrt(static_cast<double>(n)),
                                   mix_seed(cfg.rng_seed, fnv1a64("kk")));

  // Stress majorization: each sweep moves every node to the weighted average
  // of the spring targets, which never increases the stress.
  const std::size_t sweeps = cfg.effective_iterations();
  Positions next(n);
  for (std::size_t it = 0; it < sweeps; ++it) {
    for (std::size_t i = 0; i < n; ++i) {
      double wx = 0.0, wy = 0.0, wsum = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        const double target = static_cast<double>(dist[i][j]);
        const double w = 1.0 / (target * target);
        double dx = pos[i].first - pos[j].first;
        double dy = pos[i].second - pos[j].second;
        double len = std::sqrt(dx * dx + dy * dy);
        if (len < 1e-12) {
          auto [jx, jy] = jitter_direction(i, j);
          dx = jx;
          dy = jy;
          len = 1.0;
        }
        wx += w * (pos[j].first + target * dx / len);
        wy += w * (pos[j].second + target * dy / len);
        wsum += w;
      }
      next[i] = {wx / wsum, wy / wsum};
    }
    pos = next;
  }
  return pos;
}

Positions layout_fr(const Graph& g, const LayoutKind& cfg) {
  const std::size_t n = g.node_count();
  if (n == 0) return {};
  if (n == 1) return {{0.0, 0.0}};

  const double side = std::sqrt(static_cast<double>(n));
  Positions pos = random_positions(n, side, mix_seed(cfg.rng_seed, fnv1a64("fr")));
  const double k = side / std::sqrt(static_cast<double>(n));  // = 1
  const std::size_t iters = cfg.effective_iterations();
  std::vector<std::pair<double, double>> disp(n);
  for (std::size_t it = 0; it < iters; ++it) {
    const double temperature =
        0.1 * side * (1.0 - static_cast<double>(it) / static_cast<double>(iters));
    spring_electrical_step(g, pos, k, temperature, disp);
  }
  return pos;
}

Positions layout_graphopt(const Graph& g, const LayoutKind& cfg) {
  const std::size_t n = g.node_count();
  if (n == 0) return {};
  if (n == 1) return {{0.0, 0.0}};

  const double side = std::sqrt(static_cast<double>(n));
  Positions pos = random_positions(n, side, mix_seed(cfg.rng_seed, fnv1a64("graphopt")));
  const double k = 1.0;
  const std::size_t iters = cfg.effective_iterations();
  std::vector<std::pair<double, double>> disp(n);
  Rng kick(mix_seed(cfg.rng_seed, fnv1a64("graphopt-anneal")));
  for (std::size_t it = 0; it < iters; ++it) {
    const double progress = static_cast<double>(it) / static_cast<double>(iters);
    const double temperature = 0.15 * side * (1.0 - progress);
    spring_electrical_step(g, pos, k, temperature, disp);
    // Annealed random perturbation, fading with the temperature.
    for (auto& [x, y] : pos) {
      const double angle = kick.uniform01() * 2.0 * 3.14159265358979323846;
      const double step = kick.uniform01() * temperature * 0.5;
      x += std::cos(angle) * step;
      y += std::sin(angle) * step;
    }
  }
  return pos;
}

namespace {

Positions pack_components(const Graph& g, const LayoutKind& cfg,
                          Positions (*kernel)(const Graph&, const LayoutKind&)) {
  auto comps = g.connected_components();
  const std::size_t cols =
      static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(comps.size()))));
  Positions pos(g.node_count());
  double cell = 0.0;

  std::vector<Positions> sub_positions;
  std::vector<Graph> subgraphs;
  for (const auto& comp : comps) {
    Graph sub = g.induced_subgraph(comp);
    Positions sp = kernel(sub, cfg);
    // Normalize to the component's bounding box anchored at the origin.
    double minx = 1e300, miny = 1e300, maxx = -1e300, maxy = -1e300;
    for (auto& [x, y] : sp) {
      minx = std::min(minx, x);
      miny = std::min(miny, y);
      maxx = std::max(maxx, x);
      maxy = std::max(maxy, y);
    }
    for (auto& [x, y] : sp) {
      x -= minx;
      y -= miny;
    }
    cell = std::max({cell, maxx - minx, maxy - miny, 1.0});
    sub_positions.push_back(std::move(sp));
    subgraphs.push_back(std::move(sub));
  }
  const double pad = cell * 1.2;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    const double ox = static_cast<double>(c % cols) * pad;
    const double oy = static_cast<double>(c / cols) * pad;
    for (std::size_t i = 0; i < comps[c].size(); ++i) {
      auto global = g.index_of(subgraphs[c].id_at(i));
      pos[global] = {sub_positions[c][i].first + ox, sub_positions[c][i].second + oy};
    }
  }
  return pos;
}

}  // namespace

Positions compute_layout(const Graph& g, const LayoutKind& cfg) {
  Positions (*kernel)(const Graph&, const LayoutKind&) = nullptr;
  switch (cfg.algo) {
    case LayoutAlgo::KamadaKawai: kernel = layout_kk; break;
    case LayoutAlgo::FruchtermanReingold: kernel = layout_fr; break;
    case LayoutAlgo::GraphOpt: kernel = layout_graphopt; break;
  }
  if (g.is_connected()) return kernel(g, cfg);
  return pack_components(g, cfg, kernel);
}

}  // namespace coev
