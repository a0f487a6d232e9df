#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "coev/fitness.hpp"
#include "coev/graph.hpp"
#include "coev/layout.hpp"
#include "coev/render.hpp"
#include "coev/validation.hpp"

namespace coev {

enum class TaskKind { InfluenceMax, Immunization, Dismantling, Tsp };
std::string to_string(TaskKind t);
TaskKind task_from_string(const std::string& s);

// What a reproduction operator sees for one call: the domain under
// optimization, the highlighted solution (tour order for TSP), and the
// layout/mode under which a vision-backed operator renders its image.
struct OpView {
  const Graph* graph = nullptr;
  std::vector<NodeId> solution;
  LayoutKind layout;
  RenderMode mode = RenderMode::Init;
  TaskKind task = TaskKind::InfluenceMax;
  const std::map<NodeId, std::pair<double, double>>* coords = nullptr;  // TSP only
};

class OperatorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Pluggable reproduction operator. Proposals are raw node lists parsed from
// the operator's output; validation and repair happen at the call site.
// Implementations must be safe to share across worker threads.
class ReproductionOperator {
 public:
  virtual ~ReproductionOperator() = default;
  virtual std::string name() const = 0;

  virtual std::vector<std::vector<NodeId>> propose_init(const OpView& view,
                                                        std::size_t population,
                                                        std::size_t k) = 0;
  virtual std::vector<NodeId> propose_crossover(const OpView& a, const OpView& b,
                                                std::size_t k) = 0;
  virtual NodeId propose_mutation_removal(const OpView& view) = 0;
  virtual NodeId propose_mutation_addition(const OpView& view) = 0;

  // Task extensions. Defaults: highest-degree node for dismantling; order
  // crossover / adjacent swap are supplied by the task loop on failure.
  virtual NodeId propose_dismantle_node(const OpView& view);
  virtual std::vector<NodeId> propose_tour_crossover(const OpView& a, const OpView& b);
  virtual std::vector<NodeId> propose_tour_mutation(const OpView& view);
};

struct EnsembleConfig {
  std::vector<LayoutKind> layouts = {
      {LayoutAlgo::KamadaKawai, 0, 0},
      {LayoutAlgo::FruchtermanReingold, 0, 0},
      {LayoutAlgo::GraphOpt, 0, 0},
  };
  std::size_t vote_threshold = 0;  // 0 selects majority: ceil(L/2)
  std::uint64_t rng_seed = 0;

  std::size_t effective_threshold() const;
  void validate() const;
};

// Fuses layout-specific proposals: votes per node, threshold winners first in
// descending vote order (ties by id), then greedy fill by the number of
// uncovered neighbors (ties by degree, then id) until k nodes are chosen.
std::vector<NodeId> consensus_voting(const std::vector<std::vector<NodeId>>& proposals,
                                     std::size_t k, std::size_t threshold,
                                     const Graph& g);

enum class MockProfile { DegreeGreedy, BetweennessGreedy, Noisy };
std::string to_string(MockProfile p);
MockProfile mock_profile_from_string(const std::string& s);

// Deterministic offline stand-in for a vision operator. DegreeGreedy and
// BetweennessGreedy rank nodes by the respective score; Noisy perturbs the
// degree ranking with swaps derived from (seed, layout, solution), emulating
// layout disagreement while staying reproducible.
std::unique_ptr<ReproductionOperator> make_mock_operator(MockProfile profile,
                                                         std::uint64_t seed = 0);

// One crossover/mutation over every ensemble layout, each proposal validated
// and repaired, fused by consensus voting. Falls back to the vanilla
// operator (logged) when no layout yields a usable proposal.
Candidate ensemble_crossover(ReproductionOperator& op, const SparsifiedDomain& domain,
                             const Candidate& a, const Candidate& b,
                             const EnsembleConfig& ens, TaskKind task, Rng& rng,
                             ValidityLog* log, const EventContext& ctx);
Candidate ensemble_mutation(ReproductionOperator& op, const SparsifiedDomain& domain,
                            const Candidate& c, const EnsembleConfig& ens, TaskKind task,
                            Rng& rng, ValidityLog* log, const EventContext& ctx);

}  // namespace coev
