#pragma once

#include <array>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "coev/fitness.hpp"
#include "coev/rng.hpp"
#include "coev/sparsify.hpp"

namespace coev {

// Per-phase structural fidelity checks on operator outputs. All are hard
// pass/fail predicates except the advisory low-degree check, which flags but
// never blocks.
enum class CheckId { TI1, TI2, TI3, TC1, TC2, TC3, TM1, TM2, TM3 };
constexpr std::size_t kCheckCount = 9;

std::string to_string(CheckId c);
bool is_advisory(CheckId c);  // true only for the low-degree check

struct CheckReport {
  CheckId check;
  bool passed = true;
  std::vector<NodeId> offending;
  bool repaired = false;
};

// Initialization: membership, size, and the advisory low-degree flag (nodes
// below the domain's 10th-percentile degree).
std::vector<CheckReport> check_init(const std::vector<NodeId>& proposal,
                                    const SparsifiedDomain& domain, std::size_t k);

// Crossover: size k, no duplicates, every node inherited from a parent.
std::vector<CheckReport> check_crossover(const std::vector<NodeId>& child,
                                         const Candidate& parent_a,
                                         const Candidate& parent_b, std::size_t k);

// Mutation: removal must be a member, addition must be a valid non-member.
std::vector<CheckReport> check_mutation(const Candidate& original, NodeId removal,
                                        NodeId addition, const SparsifiedDomain& domain);

bool all_hard_checks_pass(const std::vector<CheckReport>& reports);

// Degree value at the domain's 10th percentile (nearest rank).
std::size_t low_degree_threshold(const SparsifiedDomain& domain);

struct RepairContext {
  const SparsifiedDomain* domain = nullptr;  // required
  // When both parents are set, repairs stay within their union.
  const Candidate* parent_a = nullptr;
  const Candidate* parent_b = nullptr;
};

// Drops invalid and duplicate nodes (preserving proposal order), trims to k,
// and tops up: uniformly from the parents' union in crossover context,
// by highest subgraph betweenness otherwise. Idempotent on valid input.
Candidate repair(const std::vector<NodeId>& proposal, const RepairContext& ctx,
                 std::size_t k, Rng& rng);

// One raw check outcome with the experiment cell it belongs to.
struct CheckEvent {
  std::string network;
  std::string strategy;
  std::string layout;
  CheckId check = CheckId::TI1;
  bool passed = true;
};

struct EventContext {
  std::string network;
  std::string strategy;
};

// Append-only event channel; writers are worker threads, the aggregator
// drains a snapshot.
class ValidityLog {
 public:
  void record(CheckEvent e);
  void record_reports(const EventContext& ctx, const std::string& layout,
                      const std::vector<CheckReport>& reports);
  void note(std::string message);  // operational events (fallbacks, repairs)

  std::vector<CheckEvent> events() const;
  std::vector<std::string> notes() const;

 private:
  mutable std::mutex mu_;
  std::vector<CheckEvent> events_;
  std::vector<std::string> notes_;
};

struct ValidityCell {
  std::size_t passed = 0;
  std::size_t total = 0;
  double rate() const { return total ? static_cast<double>(passed) / total : 0.0; }
};

// Rows keyed by (network, strategy, layout); one optional cell per check.
// Cells with no events stay absent rather than reporting 0%.
using ValidityKey = std::tuple<std::string, std::string, std::string>;
using ValidityTable = std::map<ValidityKey, std::array<std::optional<ValidityCell>, kCheckCount>>;

ValidityTable validity_stats(const std::vector<CheckEvent>& events);
std::string validity_csv(const ValidityTable& table);

}  // namespace coev
