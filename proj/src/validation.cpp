#include "coev/validation.hpp"

#include <algorithm>
#include <sstream>

namespace coev {

std::string to_string(CheckId c) {
  switch (c) {
    case CheckId::TI1: return "TI1";
    case CheckId::TI2: return "TI2";
    case CheckId::TI3: return "TI3";
    case CheckId::TC1: return "TC1";
    case CheckId::TC2: return "TC2";
    case CheckId::TC3: return "TC3";
    case CheckId::TM1: return "TM1";
    case CheckId::TM2: return "TM2";
    case CheckId::TM3: return "TM3";
  }
  return "?";
}

bool is_advisory(CheckId c) { return c == CheckId::TI3; }

std::size_t low_degree_threshold(const SparsifiedDomain& domain) {
  std::vector<std::size_t> degrees;
  degrees.reserve(domain.subgraph.node_count());
  for (NodeId v : domain.subgraph.nodes()) degrees.push_back(domain.subgraph.degree(v));
  std::sort(degrees.begin(), degrees.end());
  // Nearest-rank 10th percentile.
  const std::size_t n = degrees.size();
  const std::size_t rank = (n * 10 + 99) / 100;  // ceil(0.1 n)
  return degrees[rank == 0 ? 0 : rank - 1];
}

std::vector<CheckReport> check_init(const std::vector<NodeId>& proposal,
                                    const SparsifiedDomain& domain, std::size_t k) {
  CheckReport valid{CheckId::TI1};
  for (NodeId v : proposal)
    if (!domain.contains(v)) valid.offending.push_back(v);
  valid.passed = valid.offending.empty();

  std::vector<NodeId> distinct = proposal;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  CheckReport size{CheckId::TI2};
  size.passed = distinct.size() == k;

  CheckReport low{CheckId::TI3};
  const std::size_t threshold = low_degree_threshold(domain);
  for (NodeId v : proposal)
    if (domain.contains(v) && domain.subgraph.degree(v) < threshold)
      low.offending.push_back(v);
  low.passed = low.offending.empty();

  return {valid, size, low};
}

std::vector<CheckReport> check_crossover(const std::vector<NodeId>& child,
                                         const Candidate& parent_a,
                                         const Candidate& parent_b, std::size_t k) {
  CheckReport size{CheckId::TC1};
  size.passed = child.size() == k;

  CheckReport dup{CheckId::TC2};
  std::vector<NodeId> sorted = child;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i] == sorted[i - 1]) dup.offending.push_back(sorted[i]);
  dup.passed = dup.offending.empty();

  CheckReport source{CheckId::TC3};
  for (NodeId v : child)
    if (!parent_a.contains(v) && !parent_b.contains(v)) source.offending.push_back(v);
  source.passed = source.offending.empty();

  return {size, dup, source};
}

std::vector<CheckReport> check_mutation(const Candidate& original, NodeId removal,
                                        NodeId addition, const SparsifiedDomain& domain) {
  CheckReport presence{CheckId::TM1};
  presence.passed = original.contains(removal);
  if (!presence.passed) presence.offending.push_back(removal);

  CheckReport valid{CheckId::TM2};
  valid.passed = domain.contains(addition);
  if (!valid.passed) valid.offending.push_back(addition);

  CheckReport repeat{CheckId::TM3};
  repeat.passed = !original.contains(addition);
  if (!repeat.passed) repeat.offending.push_back(addition);

  return {presence, valid, repeat};
}

bool all_hard_checks_pass(const std::vector<CheckReport>& reports) {
  for (const auto& r : reports)
    if (!is_advisory(r.check) && !r.passed) return false;
  return true;
}

Candidate repair(const std::vector<NodeId>& proposal, const RepairContext& ctx,
                 std::size_t k, Rng& rng) {
  if (ctx.domain == nullptr) throw std::invalid_argument("repair: domain required");
  const bool crossover = ctx.parent_a != nullptr && ctx.parent_b != nullptr;

  auto admissible = [&](NodeId v) {
    if (crossover) return ctx.parent_a->contains(v) || ctx.parent_b->contains(v);
    return ctx.domain->contains(v);
  };

  // Keep the proposal's own ordering while dropping invalid and repeated
  // nodes, then trim oversized proposals from the tail.
  std::vector<NodeId> kept;
  for (NodeId v : proposal) {
    if (!admissible(v)) continue;
    if (std::find(kept.begin(), kept.end(), v) != kept.end()) continue;
    kept.push_back(v);
    if (kept.size() == k) break;
  }

  if (kept.size() < k) {
    if (crossover) {
      std::vector<NodeId> pool = ctx.parent_a->nodes;
      pool.insert(pool.end(), ctx.parent_b->nodes.begin(), ctx.parent_b->nodes.end());
      std::sort(pool.begin(), pool.end());
      pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
      std::erase_if(pool, [&](NodeId v) {
        return std::find(kept.begin(), kept.end(), v) != kept.end();
      });
      if (kept.size() + pool.size() < k)
        throw std::invalid_argument("repair: parents' union smaller than k");
      while (kept.size() < k) {
        const std::size_t pick = rng.index(pool.size());
        kept.push_back(pool[pick]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
      }
    } else {
      kept = proj_with_fill(*ctx.domain, kept, k, FillStrategy::Heuristic, 0);
    }
  }

  Candidate out;
  out.nodes = std::move(kept);
  std::sort(out.nodes.begin(), out.nodes.end());
  return out;
}

void ValidityLog::record(CheckEvent e) {
  std::lock_guard lock(mu_);
  events_.push_back(std::move(e));
}

void ValidityLog::record_reports(const EventContext& ctx, const std::string& layout,
                                 const std::vector<CheckReport>& reports) {
  std::lock_guard lock(mu_);
  for (const auto& r : reports)
    events_.push_back({ctx.network, ctx.strategy, layout, r.check, r.passed});
}

void ValidityLog::note(std::string message) {
  std::lock_guard lock(mu_);
  notes_.push_back(std::move(message));
}

std::vector<CheckEvent> ValidityLog::events() const {
  std::lock_guard lock(mu_);
  return events_;
}

std::vector<std::string> ValidityLog::notes() const {
  std::lock_guard lock(mu_);
  return notes_;
}

ValidityTable validity_stats(const std::vector<CheckEvent>& events) {
  ValidityTable table;
  for (const auto& e : events) {
    auto& row = table[{e.network, e.strategy, e.layout}];
    auto& cell = row[static_cast<std::size_t>(e.check)];
    if (!cell) cell = ValidityCell{};
    ++cell->total;
    if (e.passed) ++cell->passed;
  }
  return table;
}

std::string validity_csv(const ValidityTable& table) {
  std::ostringstream out;
  out << "network,strategy,layout";
  for (std::size_t c = 0; c < kCheckCount; ++c)
    out << "," << to_string(static_cast<CheckId>(c));
  out << "\n";
  for (const auto& [key, cells] : table) {
    out << std::get<0>(key) << "," << std::get<1>(key) << "," << std::get<2>(key);
    for (const auto& cell : cells) {
      out << ",";
      if (cell) out << cell->rate();
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace coev
