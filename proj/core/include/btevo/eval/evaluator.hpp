#pragma once

#include <span>
#include <vector>

#include "btevo/bt/tree.hpp"
#include "btevo/sim/dynamics.hpp"
#include "btevo/sim/episode.hpp"
#include "btevo/sim/room.hpp"
#include "btevo/vision/camera.hpp"
#include "btevo/vision/detector.hpp"

namespace btevo::eval {

/// Everything an episode depends on besides the tree and the initial pose.
struct EvaluationContext {
  sim::RoomConfig room;
  sim::SimParams sim;
  vision::DetectorParams detector;
  vision::CameraModel camera;
  /// Parallel episode workers. Results do not depend on this value.
  unsigned threads = 1;
};

struct RunRecord {
  double fitness = 0.0;
  sim::Outcome outcome = sim::Outcome::Timeout;
  double e_norm = 0.0;
  double flight_time = 0.0;
  double approach_angle = 0.0;
  double centre_offset = 0.0;
  friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

RunRecord summarize(const sim::EpisodeResult& result);

struct EvaluatedIndividual {
  bt::BehaviourTree tree;
  /// Mean of per_run fitnesses.
  double fitness = 0.0;
  std::vector<RunRecord> per_run;
  std::size_t size = 0;
};

/// Mean fitness summed in index order.
double mean_fitness(std::span<const RunRecord> runs) noexcept;

struct EpisodeJob {
  const bt::BehaviourTree* tree = nullptr;
  sim::InitialCondition init;
};

/// Runs batches of independent episodes. Implementations must return
/// results in job order and be deterministic per job.
class Evaluator {
 public:
  virtual ~Evaluator() = default;
  virtual std::vector<RunRecord> run(std::span<const EpisodeJob> jobs) const = 0;
};

/// Flies every job through the simulator, spreading jobs over
/// context.threads workers.
class SimulationEvaluator final : public Evaluator {
 public:
  explicit SimulationEvaluator(EvaluationContext context) : context_(std::move(context)) {}
  std::vector<RunRecord> run(std::span<const EpisodeJob> jobs) const override;
  const EvaluationContext& context() const noexcept { return context_; }

 private:
  EvaluationContext context_;
};

/// One episode per initial condition; fitness is the mean.
EvaluatedIndividual evaluate_individual(const bt::BehaviourTree& tree,
                                        std::span<const sim::InitialCondition> inits,
                                        const Evaluator& evaluator);

/// Single episode with a private vision pipeline.
sim::EpisodeResult fly(const bt::BehaviourTree& tree, const sim::InitialCondition& init,
                       const EvaluationContext& context, sim::EpisodeOptions options = {});

}  // namespace btevo::eval
